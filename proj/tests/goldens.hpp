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


#pragma once

// Published closed forms for the two worked examples, instantiated at a
// concrete delta. Exponents such as delta + 3 are expanded before parsing.

#include <string>

#include "folint/hirzebruch.hpp"

namespace folint::testing {

struct Quadruple {
  QPoly A0, A1, B0, B1;
};

inline std::string n(int k) { return std::to_string(k); }

inline QPoly hpoly(const std::string& s) { return parse_poly(s, hirzebruch_vars()); }

inline Quadruple example1_extension(int d) {
  return {hpoly("-X0^2*X1^2*Y0^4*Y1 - 5*X1^4*Y0^4*Y1 - X0^" + n(d + 3) + "*X1*Y0^3*Y1^2 - " + n(d) +
                "*X0^2*X1^2*Y0^4*Y1 - " + n(d) + "*X0^" + n(d + 3) + "*X1*Y0^3*Y1^2 + " + n(d) + "*X0^" +
                n(3 * d + 4) + "*Y0*Y1^4"),
          hpoly("X0^3*X1*Y0^4*Y1 + 5*X0*X1^3*Y0^4*Y1 + X0^" + n(d + 4) + "*Y0^3*Y1^2"),
          hpoly("X0^3*X1^2*Y0^3*Y1 + X0^" + n(d + 4) + "*X1*Y0^2*Y1^2 - X0^" + n(3 * d + 5) + "*Y1^4"),
          hpoly("-X0^3*X1^2*Y0^4 - X0^" + n(d + 4) + "*X1*Y0^3*Y1 + X0^" + n(3 * d + 5) + "*Y0*Y1^3")};
}

inline Quadruple example2_extension(int d) {
  if (d == 1)
    return {hpoly("X0*Y0^3*Y1 - X1*Y0^3*Y1 + X0^2*X1*Y0*Y1^3"), hpoly("X0*Y0^3*Y1 + X1*Y0^3*Y1"),
            hpoly("-X0^2*Y0^2*Y1 - X1^2*Y0^2*Y1 - X0^3*X1*Y1^3"), hpoly("X0^2*Y0^3 + X1^2*Y0^3 + X0^3*X1*Y0*Y1^2")};
  return {hpoly("-X0*X1*Y0^3*Y1 - X1^2*Y0^3*Y1 + " + n(d) + "*X0^2*Y0^3*Y1 + " + n(d) + "*X1^2*Y0^3*Y1 + " + n(d) +
                "*X0^" + n(2 * d + 1) + "*X1*Y0*Y1^3"),
          hpoly("X0^2*Y0^3*Y1 + X0*X1*Y0^3*Y1"),
          hpoly("-X0^3*Y0^2*Y1 - X0*X1^2*Y0^2*Y1 - X0^" + n(2 * d + 2) + "*X1*Y1^3"),
          hpoly("X0^3*Y0^3 + X0*X1^2*Y0^3 + X0^" + n(2 * d + 2) + "*X1*Y0*Y1^2")};
}

/// omega_10^delta of the first example.
inline PlanarOneForm example1_omega10(int d) {
  return {parse_poly("-5*y - " + n(1 + d) + "*x^2*y - " + n(1 + d) + "*x^" + n(d + 3) + "*y^2 + " + n(d) + "*x^" +
                     n(3 * d + 4) + "*y^4"),
          parse_poly("-x^3 - x^" + n(d + 4) + "*y + x^" + n(3 * d + 5) + "*y^3")};
}

/// omega_11^1 of the first example.
inline PlanarOneForm example1_omega11_1() {
  return {parse_poly("-5*y^4 - 2*x^2*y^4 - 2*x^4*y^3 + x^7*y"), parse_poly("x^3*y^3 + x^5*y^2 - x^8")};
}

/// The strict transform of the second example's U11 form after n blowups in
/// the chart y = x*y'; n = 0 is the U11 form itself.
inline PlanarOneForm example2_chain(int d, int k) {
  const int e = d - k;
  return {parse_poly("-x*y^3 + " + n(e - 1) + "*y^3 + " + n(e) + "*x^2*y^3 + " + n(e) + "*x^" + n(2 * e + 1) + "*y"),
          parse_poly("-(x^3*y^2 + x*y^2 + x^" + n(2 * e + 2) + ")")};
}

}  // namespace folint::testing
