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

// JSON views of reduction trees and verdicts. The shapes are described by
// schemas/blowup_tree.schema.json and schemas/verdict.schema.json.

#include <json.hpp>

#include "folint/analyzer.hpp"
#include "folint/blowup.hpp"
#include "folint/hirzebruch.hpp"

namespace folint {

inline nlohmann::json to_json(const PointClass& p) {
  return {{"coordinates", p.coordinates_text()}, {"modulus", p.modulus_text()}, {"chart_trail", p.trail}};
}

inline nlohmann::json to_json(const BlowupTree& t) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : t.nodes) {
    nlohmann::json j = to_json(n.point);
    j["id"] = n.id;
    j["parent"] = n.parent == 0 ? nlohmann::json(nullptr) : nlohmann::json(n.parent);
    j["depth"] = n.depth;
    j["proximate_to"] = n.proximate_to;
    j["free"] = n.free;
    j["multiplicity"] = n.multiplicity;
    j["terminal_dicritical"] = n.terminal_dicritical;
    j["simple"] = n.simple;
    j["blown_up"] = n.blown_up;
    j["form"] = n.form.to_string();
    nodes.push_back(std::move(j));
  }
  nlohmann::json residual = nlohmann::json::array();
  for (const auto& r : t.residual) {
    nlohmann::json j = to_json(r.point);
    j["parent"] = r.parent;
    j["simple"] = r.simple;
    residual.push_back(std::move(j));
  }
  return {{"nodes", nodes}, {"residual", residual}, {"truncated", t.truncated}};
}

inline nlohmann::json to_json(const Evidence& e) {
  nlohmann::json j = to_json(e.point);
  j["delta"] = e.delta;
  j["chart"] = e.chart.name();
  j["singular"] = e.singular;
  j["simple"] = e.simple;
  j["dicritical"] = e.dicritical;
  j["tree"] = e.tree < 0 ? nlohmann::json(nullptr) : nlohmann::json(e.tree);
  return j;
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["kind"] = v.kind == Verdict::Kind::NotIntegrable ? "NotIntegrable" : "Inconclusive";
  j["rule"] = v.rule ? nlohmann::json(std::string(1, *v.rule)) : nlohmann::json(nullptr);
  j["witness_delta"] = v.witness_delta ? nlohmann::json(*v.witness_delta) : nlohmann::json(nullptr);
  j["delta1"] = v.delta1 ? nlohmann::json(*v.delta1) : nlohmann::json(nullptr);
  j["non_rigorous"] = v.non_rigorous;
  j["bounds"] = {{"max_delta", v.bounds.max_delta}, {"max_depth", v.bounds.max_depth}};
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : v.evidence) ev.push_back(to_json(e));
  j["evidence"] = ev;
  nlohmann::json trees = nlohmann::json::array();
  for (const auto& t : v.trees) trees.push_back(to_json(t));
  j["trees"] = trees;
  return j;
}

inline nlohmann::json to_json(const BigradedOneForm& w) {
  return {{"delta", w.delta},
          {"d1", w.d1},
          {"d2", w.d2},
          {"A0", print_canonical(w.A0)},
          {"A1", print_canonical(w.A1)},
          {"B0", print_canonical(w.B0)},
          {"B1", print_canonical(w.B1)}};
}

}  // namespace folint
