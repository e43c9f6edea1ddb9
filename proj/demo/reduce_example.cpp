// Copyright 2026 The folint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Extends a planar form to F_1, restricts it to U11 and prints the
// reduction of the singular point at the chart origin.

#include <iostream>

#include "folint/analyzer.hpp"

int main(int argc, char** argv) {
  using namespace folint;
  const std::string text = argc > 1 ? argv[1] : "(x*y + y^2 + 5*x^3*y) dx + (-x^2 - x*y + y^3) dy";
  try {
    const PlanarOneForm w = parse_one_form(text);
    const PlanarOneForm w11 = chart_restrict(extend(1, w), ChartId{1, 1});
    std::cout << "U11 form: " << print_canonical(w11) << "\n";
    const LocalForm local = LocalForm::from(w11);
    if (jet_multiplicity(local).m < 1) {
      std::cout << "the origin of U11 is not singular\n";
      return 0;
    }
    const BlowupTree tree = reduce(local);
    for (const BlowupNode& n : tree.nodes) {
      std::cout << "p" << n.id << ": multiplicity " << n.multiplicity << ", proximate to {";
      for (std::size_t i = 0; i < n.proximate_to.size(); ++i) std::cout << (i ? ", p" : "p") << n.proximate_to[i];
      std::cout << "}" << (n.free ? " free" : " satellite") << (n.terminal_dicritical ? ", terminal dicritical" : "") << "\n";
    }
    const Verdict v = check(w);
    std::cout << (v.kind == Verdict::Kind::NotIntegrable ? "not algebraically integrable" : "inconclusive") << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
