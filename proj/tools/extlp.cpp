// Copyright 2026 The extlp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "extlp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact duality toolkit for linear programs with bot/top entries"};
  app.require_subcommand(1);

  extlp::cli::Options opt;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("FILE", opt.file, "LP file")->required();
    sub->add_option("--seed", seed, "Seed recorded in the report (EXTLP_SEED overrides)");
    sub->add_flag("--json", opt.json, "Emit the report as JSON");
  };

  auto* validate = app.add_subcommand("validate", "Check the six validity conditions");
  add_common(validate);
  auto* dualize = app.add_subcommand("dualize", "Print the dual program (-A^T, c, b)");
  add_common(dualize);
  auto* solve = app.add_subcommand("solve", "Optimum of the program and of its dual");
  add_common(solve);
  solve->add_flag("--oracle", opt.oracle, "Cross-check against the brute-force oracle");
  auto* farkas = app.add_subcommand("farkas", "Theorem-of-alternatives certificate for A, b");
  add_common(farkas);
  farkas->add_option("--mode", opt.mode, "eq | ineq | ineq-neg | ext")
      ->check(CLI::IsMember({"eq", "ineq", "ineq-neg", "ext"}));
  farkas->add_flag("--oracle", opt.oracle, "Cross-check against the brute-force oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : extlp::cli::kExitPrecondition;
  }

  opt.command = app.get_subcommands().front()->get_name();
  try {
    opt.seed = extlp::cli::resolve_seed(seed, std::getenv("EXTLP_SEED"));
  } catch (const extlp::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return extlp::cli::kExitPrecondition;
  }
  return extlp::cli::run(opt, std::cout, std::cerr);
}
