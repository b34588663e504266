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

#include "diaglab/diagonal.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "diaglab/errors.hpp"
#include "diaglab/machine.hpp"

namespace diaglab {

namespace {

// Scan helper: audited clocked run of machine i under clock n, with the same
// cut rule as clocked_run_outcome but a reusable machine cache and no pair
// coding.  Exact means the verdict cannot change under a larger step cap.
struct Audition {
  bool exact = false;
  BinaryWord output;
};

Audition audit_candidate(std::unordered_map<std::uint64_t, TuringMachine>& cache,
                         std::uint64_t machine_index, std::uint64_t clock_index,
                         const BinaryWord& probe, const GrowthFamily& family,
                         std::uint64_t step_cap) {
  auto it = cache.find(machine_index);
  if (it == cache.end()) {
    it = cache.emplace(machine_index, decode_machine(nat_of(machine_index)))
             .first;
  }
  std::uint64_t cap = std::min<std::uint64_t>(step_cap, 1ull << 60);
  std::uint64_t bound =
      family.eval_clamped(nat_of(clock_index), nat_of(probe.size()), cap + 2);
  std::uint64_t clock_budget = bound == 0 ? 0 : bound - 1;
  bool capped = clock_budget > cap;
  std::uint64_t budget = capped ? cap : clock_budget;

  BoundedRun r = run_configuration(it->second, probe, budget);
  Audition a;
  a.exact = r.status == RunStatus::Halted || !capped;
  if (a.exact) a.output = output_word(r.final_configuration);
  return a;
}

}  // namespace

StepRecord diagonal_step(DiagonalState& state, const Nat& source_index,
                         const Verifier& v, const DiagonalBudgets& budgets,
                         const GrowthFamily& family) {
  StepRecord rec;
  rec.step_index = state.steps.size();
  rec.source_index = source_index;
  rec.position = state.next_position;
  const std::uint64_t m = rec.position;

  // What the stream machine claims at the diagonal point.
  RunOutcome claimed =
      run(decode_machine(source_index), index_to_word(nat_of(m)),
          budgets.meta_budget);
  if (claimed.status != RunStatus::Halted) {
    throw TotalityViolationError(rec.step_index, source_index, m);
  }
  rec.expected_value = word_to_index(claimed.output);
  const BinaryWord probe = index_to_word(rec.expected_value);

  // Incumbent machine at m, evaluated under the global cap.
  ClockLimits global{budgets.step_cap};
  ClockedOutcome inc = clocked_run_outcome(
      ClockedMachine::from_code(state.phi.apply(nat_of(m))), probe, family,
      global);
  if (v.check(probe, inc.output)) {
    rec.scanned_position = m;
    rec.provisional_partial = inc.stopped_by == ClockStop::StepCap;
    state.next_position = m + 1;
    state.steps.push_back(rec);
    return rec;
  }

  // Scan upward for an exactly-audited acceptor.  Positions above m still
  // hold their own code (all transpositions so far happened at or below the
  // current freeze line), so the candidate code equals the position and its
  // Cantor components can be walked incrementally instead of unpaired.
  PairParts start = unpair(nat_of(m + 1));
  std::uint64_t mi = to_u64(start.left);
  std::uint64_t cn = to_u64(start.right);
  std::unordered_map<std::uint64_t, TuringMachine> cache;
  for (std::uint64_t j = m + 1; j <= budgets.scan_ceiling; ++j) {
    Audition a = audit_candidate(cache, mi, cn, probe, family,
                                 budgets.scan_step_cap);
    if (a.exact && v.check(probe, a.output)) {
      state.phi.transpose_positions(m, j);
      rec.swapped = true;
      rec.scanned_position = j;
      state.next_position = j + 1;
      state.steps.push_back(rec);
      return rec;
    }
    if (mi > 0) {
      --mi;
      ++cn;
    } else {
      mi = cn + 1;
      cn = 0;
    }
  }
  throw ScanCeilingError(rec.step_index, budgets.scan_ceiling);
}

DiagonalState run_diagonalization(std::span<const Nat> sources,
                                  const Verifier& v,
                                  const DiagonalBudgets& budgets,
                                  const GrowthFamily& family) {
  DiagonalState state;
  for (const Nat& e : sources) {
    diagonal_step(state, e, v, budgets, family);
  }
  return state;
}

DivergenceVerdict check_divergence(const Verifier& v,
                                   const Representation& phi,
                                   const StepRecord& record,
                                   std::uint64_t search_budget,
                                   const EvalContext& ctx) {
  DivergenceVerdict out;
  Nat m = nat_of(record.position);
  out.accepted_at_expected = pred_A(v, phi, m, record.expected_value, ctx);
  out.counterexample_search = f_P(v, phi, m, search_budget, ctx);
  bool found = out.counterexample_search.status == SearchStatus::Found;
  // Acceptance at y' means y' is never the least rejected input, whether or
  // not some other rejected input exists within the budget.
  out.diverges =
      out.accepted_at_expected &&
      !(found && out.counterexample_search.witness == record.expected_value);
  out.definitive = out.diverges && found;
  return out;
}

bool equivalence_check(const Verifier& v, const Representation& phi,
                       std::uint64_t samples, std::uint64_t seed,
                       const EvalContext& ctx) {
  std::mt19937_64 rng(seed);
  std::uint64_t span = std::max<std::uint64_t>(phi.prefix_length() + 16, 64);
  std::uniform_int_distribution<std::uint64_t> positions(0, span - 1);
  std::uniform_int_distribution<std::uint64_t> inputs(0, 63);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Nat p = nat_of(positions(rng));
    Nat code = phi.apply(p);
    if (phi.apply_inverse(code) != p) return false;
    Nat x = nat_of(inputs(rng));
    bool through_phi = pred_P(v, phi, p, x, ctx);
    bool at_code = pred_P(v, Representation::identity(), code, x, ctx);
    if (through_phi != at_code) return false;
  }
  return true;
}

namespace {

std::vector<Nat> parse_stream_tokens(std::istream& in) {
  std::vector<Nat> codes;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos) {
      throw std::runtime_error("stream token is not a natural number: '" +
                               tok + "'");
    }
    codes.emplace_back(tok, 10);
  }
  return codes;
}

}  // namespace

std::vector<Nat> parse_stream_spec(std::string_view spec) {
  constexpr std::string_view kConstants = "builtin:constants:";
  if (spec.starts_with(kConstants)) {
    std::string_view tail = spec.substr(kConstants.size());
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
      throw std::invalid_argument("bad builtin stream count: '" +
                                  std::string(tail) + "'");
    }
    std::vector<Nat> codes;
    codes.reserve(n);
    for (std::uint64_t j = 0; j < n; ++j) {
      codes.push_back(
          encode_machine(constant_machine(index_to_word(nat_of(j))).machine));
    }
    return codes;
  }
  if (spec.starts_with("builtin:")) {
    throw std::invalid_argument("unknown builtin stream: " +
                                std::string(spec));
  }
  if (spec == "-") {
    return parse_stream_tokens(std::cin);
  }
  std::ifstream file{std::string(spec)};
  if (!file) {
    throw std::runtime_error("cannot open stream file: " + std::string(spec));
  }
  return parse_stream_tokens(file);
}

}  // namespace diaglab
