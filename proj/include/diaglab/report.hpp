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

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "diaglab/diagonal.hpp"
#include "diaglab/nat.hpp"
#include "diaglab/words.hpp"

// Report builders behind the command-line tool.  Every command renders one
// deterministic JSON document (insertion-ordered keys, 2-space indent) so
// reruns with equal inputs are byte-for-byte equal, and returns the process
// exit code: 0 all checks passed, 1 a checked property failed, 2 a stream
// machine broke its totality claim, 3 the swap scan hit its ceiling, 4 a
// brute-force bound was infeasible.
namespace diaglab::cli {

using Json = nlohmann::ordered_json;

// Naturals render as JSON numbers up to 2^53 - 1 (exact in doubles) and as
// decimal strings beyond.
Json nat_json(const Nat& v);
Json word_json(const BinaryWord& w);  // {"bits": ..., "index": ...}

// Where a command writes its documents; empty path = stdout for the JSON,
// no file for the CSV.
struct OutputOptions {
  std::string out_path;
  std::string csv_path;
};

struct EnumerateOptions {
  std::uint64_t count = 16;
  OutputOptions output;
};
int cmd_enumerate(const EnumerateOptions& opt);

struct DiagonalOptions {
  std::string stream = "builtin:constants:4";
  std::string verifier = "parity";
  std::string family = "polynomial";
  DiagonalBudgets budgets{};
  std::uint64_t check_budget = 64;        // post-hoc counterexample search
  std::uint64_t equivalence_samples = 128;
  std::uint64_t seed = 0;
  OutputOptions output;
};
int cmd_diagonal(const DiagonalOptions& opt);

struct VerifyAxiomsOptions {
  std::string verifier = "parity";
  std::uint64_t xmax = 256;  // inputs word(0)..word(xmax)
  std::uint64_t smax = 256;  // certificates word(0)..word(smax)
  OutputOptions output;
};
int cmd_verify_axioms(const VerifyAxiomsOptions& opt);

struct SatOptions {
  std::string formula_bits;   // word spelled as 0/1 characters
  std::string dimacs_path;    // alternative: DIMACS file
  std::uint32_t max_variables = 20;
  OutputOptions output;
};
int cmd_sat(const SatOptions& opt);

struct KleeneOptions {
  Nat e = 0;
  Nat x = 0;
  std::uint64_t history_steps = 4096;
  std::uint64_t mu_budget = 0;  // 0 skips the mu-search cross-check
  std::uint64_t sweep = 0;      // when > 0 also audit machines 0..sweep-1
  OutputOptions output;
};
int cmd_kleene(const KleeneOptions& opt);

struct UnsoundOptions {
  Nat e = 0;  // the CLI defaults this to a machine with nonempty output
  Nat x = 0;
  Nat q_true_at = 50;
  Nat budget = 2048;
  std::uint64_t history_steps = 4096;
  OutputOptions output;
};
int cmd_unsound(const UnsoundOptions& opt);

}  // namespace diaglab::cli
