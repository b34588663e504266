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
#include <functional>
#include <string_view>
#include <vector>

#include "diaglab/clocks.hpp"
#include "diaglab/nat.hpp"
#include "diaglab/representation.hpp"
#include "diaglab/words.hpp"

namespace diaglab {

// A total two-place acceptance test over words.  Every verifier obeys the
// boundary laws
//   check(empty, s) = 1 for every nonempty s,
//   check(x, empty) = 0 for every x,
//   check(empty, empty) = 0,
// and is rich in the sense that (away from degenerate problems) both
// accepting and rejecting second arguments exist.
class Verifier {
 public:
  virtual ~Verifier() = default;
  virtual std::string_view name() const = 0;
  virtual bool check(const BinaryWord& x, const BinaryWord& s) const = 0;

  // Declared growth-family index bounding the cost of check (nominal).
  virtual Nat cost_bound_index() const { return 1; }

  // Whether richness holds for every x (true for parity; CNF problems that
  // decode to contradictions genuinely lack accepting certificates).
  virtual bool globally_rich() const { return false; }
};

// check(x, s) = 1 iff s is nonempty and (x is empty or word_to_index(s) is
// even).
const Verifier& parity_verifier();

// Boundary laws first; otherwise decodes x as a CNF formula and accepts iff
// s, read as an assignment (bit v-1 gives variable v; variables beyond |s|
// are false), satisfies it.
const Verifier& cnf_sat_verifier();

// Deliberately law-violating verifier (accepts empty certificates); only for
// negative tests of the axiom checker.
const Verifier& broken_verifier();

// Registry for CLI lookup: "parity", "cnf", "broken".  nullptr when unknown.
const Verifier* find_verifier(std::string_view name);

// Shared evaluation knobs for everything that runs clocked machines.
struct EvalContext {
  const GrowthFamily* family = &polynomial_family();
  ClockLimits limits{};
};

// The refutation predicate: the machine at position m of the phi-permuted
// enumeration, run clocked on word(x), produces an output the verifier
// rejects against word(x).
bool pred_P(const Verifier& v, const Representation& phi, const Nat& m,
            const Nat& x, const EvalContext& ctx = {});

// Complement of pred_P (acceptance).
bool pred_A(const Verifier& v, const Representation& phi, const Nat& m,
            const Nat& x, const EvalContext& ctx = {});

enum class SearchStatus { Found, BudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::BudgetExhausted;
  Nat witness;                // least x with the property, when Found
  std::uint64_t probes = 0;   // search points examined (budget+1 on exhaust)
};

// mu-search for the least x in 0..budget with pred_P(v, phi, m, x).
SearchResult f_P(const Verifier& v, const Representation& phi, const Nat& m,
                 std::uint64_t budget, const EvalContext& ctx = {});

// f_P under the identity representation: the least counterexample to
// acceptance at machine position m of the standard enumeration.
SearchResult f_negA(const Verifier& v, const Nat& m, std::uint64_t budget,
                    const EvalContext& ctx = {});

// Builds `count` clocked-machine codes that all accept x0 under v: finds an
// accepted certificate s by bounded enumeration (NoWitnessError if none
// within witness_search_bound), wraps the constant machine for s with clocks
// generous enough to let it finish.  Codes are strictly increasing.
std::vector<Nat> acceptable_machines(const Verifier& v, const Nat& x0,
                                     std::uint64_t count,
                                     const GrowthFamily& family =
                                         polynomial_family(),
                                     std::uint64_t witness_search_bound =
                                         4096);

using BinaryRelation =
    std::function<bool(const BinaryWord&, const BinaryWord&)>;

// Nondeterministic-acceptance by brute force: true iff some word y with
// |y| <= g_p(|x|) satisfies R(x, y).  InfeasibleBoundError when the length
// bound exceeds max_witness_length (the enumeration is 2^(L+1)-1 words).
bool np_member(const Nat& p_index, const BinaryRelation& r,
               const BinaryWord& x,
               const GrowthFamily& family = polynomial_family(),
               std::uint64_t max_witness_length = 22);

// Satisfiability of the formula decoded from x, with certificates bounded by
// |x| + 1 bits; decided by assignment enumeration.  InfeasibleBoundError
// beyond max_variables.
bool sat_member(const BinaryWord& x, std::uint32_t max_variables = 20);

}  // namespace diaglab
