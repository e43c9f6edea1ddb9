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

#include <CLI11.hpp>

#include "folint/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"folint: algebraic integrability tests for planar polynomial vector fields"};
  app.require_subcommand(1);
  folint::RunConfig cfg;

  auto add_form = [&](CLI::App* sub) {
    sub->add_option("--form", cfg.form, "1-form \"(A) dx + (B) dy\", or - to read stdin")->required();
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-delta", cfg.max_delta, "largest delta examined")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--max-depth", cfg.max_depth, "blowup depth limit")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "machine-readable output"); };
  auto add_delta = [&](CLI::App* sub) {
    sub->add_option("--delta", cfg.delta, "Hirzebruch surface index")->required()->check(CLI::NonNegativeNumber);
  };

  auto* extend = app.add_subcommand("extend", "extend a planar form to F_delta");
  add_delta(extend);
  add_form(extend);
  add_json(extend);

  auto* restrict_cmd = app.add_subcommand("restrict", "restriction to an affine chart of F_delta");
  add_delta(restrict_cmd);
  restrict_cmd->add_option("--chart", cfg.chart, "chart ij in {00, 01, 10, 11}")->required();
  add_form(restrict_cmd);
  add_json(restrict_cmd);

  auto* d1 = app.add_subcommand("delta1", "least delta with a nondicritical U10 origin");
  add_form(d1);
  add_bounds(d1);
  add_json(d1);

  auto* check = app.add_subcommand("check", "non-integrability verdict");
  add_form(check);
  add_bounds(check);
  add_json(check);
  check->add_flag("--assume-exhaustive", cfg.assume_exhaustive,
                  "treat the bounded delta sweep as exhaustive for rule (a) (not rigorous)");

  auto* census = app.add_subcommand("census", "singular points on the curve X0 = 0");
  add_delta(census);
  add_form(census);
  census->add_option("--max-depth", cfg.max_depth, "blowup depth limit")->capture_default_str()->check(CLI::PositiveNumber);
  add_json(census);

  auto* cone = app.add_subcommand("cone", "delta1, delta1' and the cone they define");
  add_form(cone);
  add_bounds(cone);
  add_json(cone);

  auto* region = app.add_subcommand("region", "Newton region of the generic invariant curve");
  add_form(region);
  region->add_option("--integral", cfg.integral, "first integral f1/f2")->required();
  add_bounds(region);
  add_json(region);

  auto* verify = app.add_subcommand("verify", "check a rational first integral");
  verify->add_option("--field", cfg.field, "vector field \"a;b\" for a d/dx + b d/dy")->required();
  verify->add_option("--integral", cfg.integral, "first integral f1/f2")->required();
  add_json(verify);

  auto* reduce = app.add_subcommand("reduce", "reduction tree of a singular point (JSON)");
  add_form(reduce);
  reduce->add_option("--at", cfg.at, "rational point \"c1,c2\"")->capture_default_str();
  reduce->add_option("--max-depth", cfg.max_depth, "blowup depth limit")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : folint::kExitInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return folint::run(cfg);
}
