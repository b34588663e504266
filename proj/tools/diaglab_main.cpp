/*
 * Copyright 2026 The diaglab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diaglab/errors.hpp"
#include "diaglab/machine.hpp"
#include "diaglab/report.hpp"

namespace {

diaglab::Nat nat_arg(const std::string& text, const char* flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::runtime_error(std::string(flag) +
                             " expects a natural number, got '" + text + "'");
  }
  return diaglab::Nat(text, 10);
}

void add_output_flags(CLI::App* cmd, diaglab::cli::OutputOptions* output,
                      bool with_csv = false) {
  cmd->add_option("--out", output->out_path,
                  "write the JSON document here instead of stdout");
  if (with_csv) {
    cmd->add_option("--csv", output->csv_path,
                    "also write the per-step witness table as CSV");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "diaglab: clocked-machine enumeration, acceptance verifiers, "
      "computation-history coding, and a diagonal construction over them"};
  app.require_subcommand(1);

  diaglab::cli::EnumerateOptions enumerate_opt;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "walk the word/pair/machine numberings");
  enumerate->add_option("--count", enumerate_opt.count,
                        "how many indices to list");
  add_output_flags(enumerate, &enumerate_opt.output);

  diaglab::cli::DiagonalOptions diagonal_opt;
  std::string diag_stream = diagonal_opt.stream;
  CLI::App* diagonal = app.add_subcommand(
      "diagonal", "run the diagonal construction against a machine stream");
  diagonal->add_option("--stream", diag_stream,
                       "builtin:constants:N, '-' for stdin, or a file of "
                       "machine codes");
  diagonal->add_option("--verifier", diagonal_opt.verifier,
                       "parity | cnf | broken");
  diagonal->add_option("--family", diagonal_opt.family, "growth family name");
  diagonal->add_option("--meta-budget", diagonal_opt.budgets.meta_budget,
                       "unclocked step allowance for stream machines");
  diagonal->add_option("--scan-ceiling", diagonal_opt.budgets.scan_ceiling,
                       "largest position the swap scan may visit");
  diagonal->add_option("--scan-step-cap", diagonal_opt.budgets.scan_step_cap,
                       "audition step cap during the scan");
  diagonal->add_option("--step-cap", diagonal_opt.budgets.step_cap,
                       "global clocked-run step cap");
  diagonal->add_option("--check-budget", diagonal_opt.check_budget,
                       "post-hoc counterexample search budget");
  diagonal->add_option("--samples", diagonal_opt.equivalence_samples,
                       "random samples for the equivalence audit");
  diagonal->add_option("--seed", diagonal_opt.seed, "audit sampling seed")
      ->envname("DIAGONAL_LAB_SEED");
  add_output_flags(diagonal, &diagonal_opt.output, /*with_csv=*/true);

  diaglab::cli::VerifyAxiomsOptions axioms_opt;
  CLI::App* axioms = app.add_subcommand(
      "verify-axioms", "exhaustively check a verifier's boundary laws");
  axioms->add_option("--verifier", axioms_opt.verifier,
                     "parity | cnf | broken");
  axioms->add_option("--xmax", axioms_opt.xmax, "largest input index checked");
  axioms->add_option("--smax", axioms_opt.smax,
                     "largest certificate index checked");
  add_output_flags(axioms, &axioms_opt.output);

  diaglab::cli::SatOptions sat_opt;
  CLI::App* sat = app.add_subcommand(
      "sat", "decode a formula word and decide satisfiability");
  CLI::Option* formula_opt = sat->add_option(
      "--formula", sat_opt.formula_bits, "formula as a 0/1 word");
  sat->add_option("--dimacs", sat_opt.dimacs_path, "formula as a DIMACS file")
      ->excludes(formula_opt);
  sat->add_option("--max-vars", sat_opt.max_variables,
                  "refuse formulas with more variables than this");
  add_output_flags(sat, &sat_opt.output);

  diaglab::cli::KleeneOptions kleene_opt;
  std::string kleene_e = "0";
  std::string kleene_x = "0";
  CLI::App* kleene = app.add_subcommand(
      "kleene-check", "audit the computation-history codec on a machine");
  kleene->add_option("--e", kleene_e, "machine code");
  kleene->add_option("--x", kleene_x, "input word index");
  kleene->add_option("--history-steps", kleene_opt.history_steps,
                     "step allowance when constructing the history");
  kleene->add_option("--budget", kleene_opt.mu_budget,
                     "mu-search budget (0 skips the search)");
  kleene->add_option("--sweep", kleene_opt.sweep,
                     "also audit machine codes 0..N-1");
  add_output_flags(kleene, &kleene_opt.output);

  diaglab::cli::UnsoundOptions unsound_opt;
  std::string unsound_e;
  std::string unsound_x = "0";
  std::string unsound_q = "50";
  std::string unsound_budget = "2048";
  CLI::App* unsound = app.add_subcommand(
      "unsound-demo",
      "show that an escape clause in the history search breaks soundness");
  unsound->add_option("--e", unsound_e,
                      "machine code (default: a constant machine with "
                      "nonempty output)");
  unsound->add_option("--x", unsound_x, "input word index");
  unsound->add_option("--q-true-at", unsound_q,
                      "the escape clause holds exactly at this index");
  unsound->add_option("--budget", unsound_budget, "search budget");
  unsound->add_option("--history-steps", unsound_opt.history_steps,
                      "step allowance for the reference run");
  add_output_flags(unsound, &unsound_opt.output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) {
      return diaglab::cli::cmd_enumerate(enumerate_opt);
    }
    if (diagonal->parsed()) {
      diagonal_opt.stream = diag_stream;
      return diaglab::cli::cmd_diagonal(diagonal_opt);
    }
    if (axioms->parsed()) {
      return diaglab::cli::cmd_verify_axioms(axioms_opt);
    }
    if (sat->parsed()) {
      return diaglab::cli::cmd_sat(sat_opt);
    }
    if (kleene->parsed()) {
      kleene_opt.e = nat_arg(kleene_e, "--e");
      kleene_opt.x = nat_arg(kleene_x, "--x");
      return diaglab::cli::cmd_kleene(kleene_opt);
    }
    if (unsound->parsed()) {
      unsound_opt.e =
          unsound_e.empty()
              ? diaglab::encode_machine(
                    diaglab::constant_machine(
                        diaglab::index_to_word(diaglab::nat_of(2)))
                        .machine)
              : nat_arg(unsound_e, "--e");
      unsound_opt.x = nat_arg(unsound_x, "--x");
      unsound_opt.q_true_at = nat_arg(unsound_q, "--q-true-at");
      unsound_opt.budget = nat_arg(unsound_budget, "--budget");
      return diaglab::cli::cmd_unsound(unsound_opt);
    }
  } catch (const diaglab::TotalityViolationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const diaglab::ScanCeilingError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  } catch (const diaglab::InfeasibleBoundError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 4;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
