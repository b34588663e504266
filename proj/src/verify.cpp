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

#include "diaglab/verify.hpp"

#include <string>

#include "diaglab/errors.hpp"

namespace diaglab {

namespace {

class ParityVerifier final : public Verifier {
 public:
  std::string_view name() const override { return "parity"; }
  bool check(const BinaryWord& x, const BinaryWord& s) const override {
    if (s.empty()) return false;
    return x.empty() || index_is_even(s);
  }
  bool globally_rich() const override { return true; }
};

class CnfSatVerifier final : public Verifier {
 public:
  std::string_view name() const override { return "cnf"; }
  bool check(const BinaryWord& x, const BinaryWord& s) const override {
    if (s.empty()) return false;
    if (x.empty()) return true;
    return decode_cnf(x).satisfied_by(s);
  }
  Nat cost_bound_index() const override { return 2; }
};

class BrokenVerifier final : public Verifier {
 public:
  std::string_view name() const override { return "broken"; }
  bool check(const BinaryWord& x, const BinaryWord& s) const override {
    // Violates the empty-certificate law on purpose.
    if (s.empty()) return !x.empty();
    return index_is_even(s);
  }
};

}  // namespace

const Verifier& parity_verifier() {
  static const ParityVerifier v;
  return v;
}

const Verifier& cnf_sat_verifier() {
  static const CnfSatVerifier v;
  return v;
}

const Verifier& broken_verifier() {
  static const BrokenVerifier v;
  return v;
}

const Verifier* find_verifier(std::string_view name) {
  if (name == "parity") return &parity_verifier();
  if (name == "cnf") return &cnf_sat_verifier();
  if (name == "broken") return &broken_verifier();
  return nullptr;
}

bool pred_P(const Verifier& v, const Representation& phi, const Nat& m,
            const Nat& x, const EvalContext& ctx) {
  Nat code = phi.apply(m);
  BinaryWord input = index_to_word(x);
  BinaryWord s = clocked_run(ClockedMachine::from_code(code), input,
                             *ctx.family, ctx.limits);
  return !v.check(input, s);
}

bool pred_A(const Verifier& v, const Representation& phi, const Nat& m,
            const Nat& x, const EvalContext& ctx) {
  return !pred_P(v, phi, m, x, ctx);
}

SearchResult f_P(const Verifier& v, const Representation& phi, const Nat& m,
                 std::uint64_t budget, const EvalContext& ctx) {
  SearchResult r;
  for (std::uint64_t x = 0; x <= budget; ++x) {
    ++r.probes;
    if (pred_P(v, phi, m, nat_of(x), ctx)) {
      r.status = SearchStatus::Found;
      r.witness = nat_of(x);
      return r;
    }
  }
  r.status = SearchStatus::BudgetExhausted;
  return r;
}

SearchResult f_negA(const Verifier& v, const Nat& m, std::uint64_t budget,
                    const EvalContext& ctx) {
  return f_P(v, Representation::identity(), m, budget, ctx);
}

std::vector<Nat> acceptable_machines(const Verifier& v, const Nat& x0,
                                     std::uint64_t count,
                                     const GrowthFamily& family,
                                     std::uint64_t witness_search_bound) {
  BinaryWord input = index_to_word(x0);
  BinaryWord s;
  bool found = false;
  for (std::uint64_t si = 0; si <= witness_search_bound; ++si) {
    BinaryWord cand = index_to_word(nat_of(si));
    if (v.check(input, cand)) {
      s = cand;
      found = true;
      break;
    }
  }
  if (!found) {
    throw NoWitnessError("verifier '" + std::string(v.name()) +
                         "' accepts no certificate for x0 = " + x0.get_str() +
                         " within " + std::to_string(witness_search_bound) +
                         " candidates");
  }
  ConstantMachine cs = constant_machine(s);
  // Smallest clock index whose bound strictly clears the machine's running
  // time (the clocked cut happens one cycle before the bound).  For any
  // family with the monotone-in-index law this loop terminates; for the
  // polynomial one it stops at c = runtime immediately.
  std::uint64_t runtime = cs.step_bound(input.size());
  std::uint64_t c = runtime;
  while (family.eval_clamped(nat_of(c), nat_of(input.size()), runtime + 1) <=
         runtime) {
    ++c;
  }
  Nat code = encode_machine(cs.machine);
  std::vector<Nat> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    out.push_back(pair_code(code, nat_of(c + k)));
  }
  return out;
}

bool np_member(const Nat& p_index, const BinaryRelation& r,
               const BinaryWord& x, const GrowthFamily& family,
               std::uint64_t max_witness_length) {
  Nat bound = family.eval(p_index, nat_of(x.size()));
  if (bound > nat_of(max_witness_length)) {
    throw InfeasibleBoundError(
        "witness length bound " + bound.get_str() + " exceeds ceiling " +
        std::to_string(max_witness_length));
  }
  std::uint64_t len_bound = to_u64(bound);
  // Words of length <= len_bound are exactly indices 0 .. 2^(len_bound+1)-2.
  Nat last = (Nat(1) << static_cast<unsigned long>(len_bound + 1)) - 2;
  for (Nat y = 0; y <= last; ++y) {
    if (r(x, index_to_word(y))) return true;
  }
  return false;
}

bool sat_member(const BinaryWord& x, std::uint32_t max_variables) {
  // Certificate bound |s| <= g_*(|x|) = |x| + 1; an assignment never needs
  // more than variable_count(x) < |x| + 1 bits, so enumerating words of
  // exactly variable_count bits is exhaustive.  The empty-input boundary is
  // decided by the verifier's laws directly.
  const Verifier& v = cnf_sat_verifier();
  if (x.empty()) {
    return v.check(x, BinaryWord::from_bits("0"));
  }
  std::uint32_t vars = decode_cnf(x).variable_count();
  if (vars > max_variables) {
    throw InfeasibleBoundError("formula has " + std::to_string(vars) +
                               " variables; ceiling is " +
                               std::to_string(max_variables));
  }
  for (std::uint64_t bits = 0; bits < (1ull << vars); ++bits) {
    BinaryWord s;
    for (std::uint32_t i = 0; i < vars; ++i) {
      s.push_back((bits >> i) & 1);
    }
    if (v.check(x, s)) return true;
  }
  return false;
}

}  // namespace diaglab
