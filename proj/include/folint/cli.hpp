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

/**
 * @file cli.hpp
 * @brief Command dispatch for the folint executable.
 *
 * Exit codes: 0 completed, 1 input or usage error, 2 inconclusive verdict
 * or a bounded computation that ended without a verdict.
 */

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "folint/analyzer.hpp"
#include "folint/json_io.hpp"

namespace folint {

struct RunConfig {
  std::string command;
  std::string form;
  std::string integral;
  std::string field;
  std::string chart = "10";
  std::string at = "0,0";
  int delta = 0;
  int max_delta = 10;
  int max_depth = 64;
  bool json = false;
  bool assume_exhaustive = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconclusive = 2;

namespace detail {

inline std::string read_form_text(const std::string& text, std::istream& in) {
  if (text != "-") return text;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

inline std::string evidence_line(const Evidence& e) {
  std::string s = "  delta " + std::to_string(e.delta) + " " + e.chart.name() + " " + e.point.coordinates_text();
  if (!e.point.modulus_text().empty()) s += " where " + e.point.modulus_text() + " = 0";
  if (!e.singular)
    s += ": nonsingular";
  else if (e.simple)
    s += ": simple";
  else
    s += e.dicritical ? ": dicritical" : ": ordinary, not dicritical";
  return s;
}

inline std::string cone_text(const RegionSpec& r) {
  return "{ (u, v) : u <= " + std::to_string(r.delta1) + "*v, v <= " + std::to_string(r.delta1_prime) + "*u }";
}

inline int run_command(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  if (c.max_delta < 0) throw Error("--max-delta must be nonnegative");
  if (c.max_depth < 1) throw Error("--max-depth must be positive");
  const AnalysisBounds bounds{c.max_delta, c.max_depth};
  auto form = [&] {
    if (c.form.empty()) throw Error("--form is required");
    return parse_one_form(read_form_text(c.form, in));
  };

  if (c.command == "extend") {
    if (c.delta < 0) throw Error("--delta must be nonnegative");
    const BigradedOneForm w = extend(c.delta, form());
    if (c.json)
      out << to_json(w).dump(2) << "\n";
    else
      out << print_canonical(w);
    return kExitOk;
  }
  if (c.command == "restrict") {
    if (c.delta < 0) throw Error("--delta must be nonnegative");
    const ChartId chart = ChartId::parse(c.chart);
    ChartRestriction r = chart_restrict_detailed(extend(c.delta, form()), chart);
    if (!r.removed_factor.is_constant()) err << "note: removed common factor " << print_canonical(r.removed_factor) << "\n";
    if (c.json)
      out << nlohmann::json{{"chart", chart.name()}, {"delta", c.delta}, {"A", print_canonical(r.form.A)},
                            {"B", print_canonical(r.form.B)}, {"removed_factor", print_canonical(r.removed_factor)}}
                 .dump(2)
          << "\n";
    else
      out << print_canonical(r.form) << "\n";
    return kExitOk;
  }
  if (c.command == "delta1") {
    const auto d = delta1(form(), bounds);
    if (c.json)
      out << nlohmann::json{{"delta1", d ? nlohmann::json(*d) : nlohmann::json(nullptr)}, {"max_delta", c.max_delta}}.dump(2)
          << "\n";
    else if (d)
      out << *d << "\n";
    else
      out << "none: the U10 origin is dicritical for every delta <= " << c.max_delta << "\n";
    return d ? kExitOk : kExitInconclusive;
  }
  if (c.command == "check") {
    const Verdict v = check(form(), bounds, c.assume_exhaustive);
    if (c.json) {
      out << to_json(v).dump(2) << "\n";
    } else {
      if (v.kind == Verdict::Kind::NotIntegrable) {
        out << "NotIntegrable by rule (" << *v.rule << ")";
        if (v.witness_delta) out << " with witness delta = " << *v.witness_delta;
        out << "\n";
        if (v.non_rigorous) out << "warning: rule (a) assumed the sweep up to max_delta is exhaustive; not a proof\n";
      } else {
        out << "Inconclusive\n";
      }
      out << "delta1 = " << opt_text(v.delta1) << "\n";
      out << "bounds: max_delta = " << c.max_delta << ", max_depth = " << c.max_depth << "\n";
      out << "evidence:\n";
      for (const auto& e : v.evidence) out << evidence_line(e) << "\n";
    }
    return v.kind == Verdict::Kind::NotIntegrable ? kExitOk : kExitInconclusive;
  }
  if (c.command == "census") {
    if (c.delta < 0) throw Error("--delta must be nonnegative");
    Verdict log;
    log.bounds = bounds;
    const auto [u10, u11] = dicritical_census_x0(form(), c.delta, c.max_depth, &log);
    if (c.json) {
      nlohmann::json j;
      j["delta"] = c.delta;
      for (const ChartCensus* cc : {&u10, &u11}) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& e : cc->points) pts.push_back(to_json(e));
        j[cc->chart.name()] = {{"origin_singular", cc->origin_singular},
                               {"origin_dicritical", cc->origin_dicritical},
                               {"points", pts}};
      }
      nlohmann::json trees = nlohmann::json::array();
      for (const auto& t : log.trees) trees.push_back(to_json(t));
      j["trees"] = trees;
      out << j.dump(2) << "\n";
    } else {
      for (const ChartCensus* cc : {&u10, &u11}) {
        out << cc->chart.name() << " (line x = 0): " << cc->points.size() << " singular point class(es)\n";
        for (const auto& e : cc->points) out << evidence_line(e) << "\n";
      }
    }
    return kExitOk;
  }
  if (c.command == "cone") {
    const ConeReport r = cone_test(form(), bounds);
    if (c.json) {
      nlohmann::json j{{"delta1", r.delta1 ? nlohmann::json(*r.delta1) : nlohmann::json(nullptr)},
                       {"delta1_prime", r.delta1_prime ? nlohmann::json(*r.delta1_prime) : nlohmann::json(nullptr)},
                       {"type9_excluded", r.type9_excluded}};
      j["cone"] = r.cone ? nlohmann::json(cone_text(*r.cone)) : nlohmann::json(nullptr);
      out << j.dump(2) << "\n";
    } else {
      out << "delta1 = " << opt_text(r.delta1) << "\ndelta1' = " << opt_text(r.delta1_prime) << "\n";
      if (r.cone) out << "cone = " << cone_text(*r.cone) << "\n";
      out << "first integral of type (a + x*y*H1)/(b + x*y*H2) excluded: " << (r.type9_excluded ? "yes" : "no") << "\n";
    }
    return r.cone ? kExitOk : kExitInconclusive;
  }
  if (c.command == "region") {
    if (c.integral.empty()) throw Error("--integral is required");
    const PlanarOneForm w = form();
    const RationalFunction f = parse_rational_function(c.integral);
    const PlanarField X = field_of(w);
    const bool verified = verify_first_integral(X.a, X.b, f.num, f.den);
    const GenericCurve g = generic_curve(f.num, f.den);
    const ConeReport cr = cone_test(w, bounds);
    if (!cr.delta1 || !cr.delta1_prime) {
      out << "delta1 = " << opt_text(cr.delta1) << ", delta1' = " << opt_text(cr.delta1_prime)
          << ": region unavailable within max_delta\n";
      return kExitInconclusive;
    }
    const RegionSpec rs{*cr.delta1, *cr.delta1_prime, g.d_x0, g.d_y0};
    const RegionReport rr = region_contains(rs, g);
    const auto bound = degree_bound(rs);
    std::optional<int> gamma;
    if (g.d_y > 0) gamma = delta1_from_support(g);
    if (c.json) {
      nlohmann::json viol = nlohmann::json::array();
      for (auto [u, v] : rr.violations) viol.push_back({u, v});
      nlohmann::json supp = nlohmann::json::array();
      for (auto [u, v] : g.support) supp.push_back({u, v});
      out << nlohmann::json{{"first_integral_verified", verified},
                            {"delta1", rs.delta1},
                            {"delta1_prime", rs.delta1_prime},
                            {"d_x0", rs.d_x0},
                            {"d_y0", rs.d_y0},
                            {"support", supp},
                            {"contained", rr.contained},
                            {"violations", viol},
                            {"degree_bound", bound ? nlohmann::json(*bound) : nlohmann::json(nullptr)},
                            {"delta1_from_support", gamma ? nlohmann::json(*gamma) : nlohmann::json(nullptr)}}
                 .dump(2)
          << "\n";
    } else {
      out << "first integral verified: " << (verified ? "true" : "false") << "\n";
      out << "region: u <= " << rs.d_x0 << " + " << rs.delta1 << "*v, v <= " << rs.d_y0 << " + " << rs.delta1_prime
          << "*u\n";
      out << "support contained: " << (rr.contained ? "true" : "false") << "\n";
      for (auto [u, v] : rr.violations) out << "  violation (" << u << ", " << v << ")\n";
      out << "degree bound: " << opt_text(bound) << "\n";
      out << "delta1 from support: " << opt_text(gamma) << "\n";
    }
    return kExitOk;
  }
  if (c.command == "verify") {
    if (c.field.empty() || c.integral.empty()) throw Error("--field and --integral are required");
    const PlanarField X = parse_field(c.field);
    const RationalFunction f = parse_rational_function(c.integral);
    const bool ok = verify_first_integral(X.a, X.b, f.num, f.den);
    if (c.json)
      out << nlohmann::json{{"first_integral", ok}}.dump(2) << "\n";
    else
      out << (ok ? "true" : "false") << "\n";
    return kExitOk;
  }
  if (c.command == "reduce") {
    const PlanarOneForm w = form();
    const auto comma = c.at.find(',');
    if (comma == std::string::npos) throw Error("--at expects \"c1,c2\"");
    const QPoly px = parse_poly(c.at.substr(0, comma)), py = parse_poly(c.at.substr(comma + 1));
    if (!px.is_constant() || !py.is_constant()) throw Error("--at coordinates must be rational numbers");
    const Number x0(px.coeff({})), y0(py.coeff({}));
    LocalForm f = LocalForm::from(w);
    f.A = f.A.translated(0, x0).translated(1, y0);
    f.B = f.B.translated(0, x0).translated(1, y0);
    if (jet_multiplicity(f).m < 1) throw NotSingular();
    const BlowupTree t = reduce(f, ReduceOptions{c.max_depth, false});
    out << to_json(t).dump(2) << "\n";
    return t.truncated ? kExitInconclusive : kExitOk;
  }
  throw Error("unknown command '" + c.command + "'");
}

}  // namespace detail

/// Runs one command, writing the report to `out` and diagnostics to `err`.
inline int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return detail::run_command(config, in, out, err);
  } catch (const AnalysisUndecided& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

inline int run(const RunConfig& config) { return run(config, std::cin, std::cout, std::cerr); }

}  // namespace folint
