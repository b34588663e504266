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
#include <span>
#include <string_view>
#include <vector>

#include "diaglab/clocks.hpp"
#include "diaglab/nat.hpp"
#include "diaglab/representation.hpp"
#include "diaglab/verify.hpp"

namespace diaglab {

// Budgets for one diagonalization run.  All caps are feasibility devices:
// the verdicts recorded under them are exact unless flagged (see StepRecord
// and docs/FORMATS.md).
struct DiagonalBudgets {
  // Unclocked step allowance for each stream machine; exceeding it raises
  // TotalityViolationError.
  std::uint64_t meta_budget = 4096;
  // Largest position the swap scan may reach before ScanCeilingError.
  std::uint64_t scan_ceiling = 10'000'000;
  // Step cap for scan auditions; candidates the cap truncates are skipped
  // rather than judged, so placements stay exact.
  std::uint64_t scan_step_cap = 1024;
  // Global clocked-run cap for incumbent evaluation and post-hoc checks.
  std::uint64_t step_cap = 65536;
};

// What one diagonal step did.
struct StepRecord {
  std::uint64_t step_index = 0;       // i
  Nat source_index;                   // stream machine code e_i
  std::uint64_t position = 0;         // diagonal position m_i
  Nat expected_value;                 // y'_i = index of e_i's output on word(m_i)
  bool swapped = false;               // a transposition was performed
  std::uint64_t scanned_position = 0; // swap partner k_i (= m_i when !swapped)
  // The accepting run was cut by the feasibility cap rather than by its own
  // halt or clock, so the acceptance is provisional.  Swap placements are
  // never provisional (truncated auditions are skipped).
  bool provisional_partial = false;
};

struct DiagonalState {
  Representation phi;
  std::uint64_t next_position = 0;  // least unfrozen position
  std::vector<StepRecord> steps;
};

// One step of the construction.  Position m_i = state.next_position; the
// stream machine is run unclocked on word(m_i) to get the value y'_i it
// claims for the diagonal.  If the machine already sitting at m_i is
// verifier-accepted on input word(y'_i), nothing moves; otherwise the scan
// walks positions above m_i for the first machine whose (exact) audited run
// on word(y'_i) is accepted and transposes it down to m_i.  Either way every
// position up to max(m_i, k_i) is frozen: later steps never touch it, so the
// recorded facts stay true of the final permutation.
StepRecord diagonal_step(DiagonalState& state, const Nat& source_index,
                         const Verifier& v,
                         const DiagonalBudgets& budgets = {},
                         const GrowthFamily& family = polynomial_family());

// Folds diagonal_step over a whole stream, starting from the identity.
DiagonalState run_diagonalization(std::span<const Nat> sources,
                                  const Verifier& v,
                                  const DiagonalBudgets& budgets = {},
                                  const GrowthFamily& family =
                                      polynomial_family());

// Post-hoc audit of one step record against the final permutation.
struct DivergenceVerdict {
  // word(y'_i) is verifier-accepted at position m_i, hence can never be the
  // least rejected input there.
  bool accepted_at_expected = false;
  // mu-search for the least rejected input at m_i.
  SearchResult counterexample_search;
  // The least-rejected-input function provably differs from the stream
  // machine at m_i (it either found a different value or has none in budget
  // while the stream machine has one).
  bool diverges = false;
  // diverges via an explicit differing value, not via absence.
  bool definitive = false;
};
DivergenceVerdict check_divergence(const Verifier& v,
                                   const Representation& phi,
                                   const StepRecord& record,
                                   std::uint64_t search_budget,
                                   const EvalContext& ctx = {});

// Randomized consistency audit of a finished permutation: positions sampled
// around the moved prefix must satisfy inverse(apply(p)) == p, and the
// rejection predicate evaluated through phi must agree with the same
// predicate evaluated at the permuted code under the identity.  Returns true
// when every sample agrees.
bool equivalence_check(const Verifier& v, const Representation& phi,
                       std::uint64_t samples, std::uint64_t seed,
                       const EvalContext& ctx = {});

// Stream specs: "builtin:constants:N" (codes of the constant machines for
// word(0)..word(N-1)), "-" (whitespace-separated naturals on stdin), or a
// file path with the same token format.
std::vector<Nat> parse_stream_spec(std::string_view spec);

}  // namespace diaglab
