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

#include "diaglab/clocks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace diaglab {

std::uint64_t GrowthFamily::eval_clamped(const Nat& index,
                                         const Nat& argument,
                                         std::uint64_t clamp) const {
  return u64_clamped(eval(index, argument), clamp);
}

Nat PolynomialFamily::eval(const Nat& index, const Nat& argument) const {
  Nat exp = index + 3;
  if (!exp.fits_ulong_p()) {
    throw std::overflow_error("clock index too large to evaluate: " +
                              index.get_str());
  }
  Nat power;
  mpz_pow_ui(power.get_mpz_t(), argument.get_mpz_t(), exp.get_ui());
  return power + exp;
}

std::uint64_t PolynomialFamily::eval_clamped(const Nat& index,
                                             const Nat& argument,
                                             std::uint64_t clamp) const {
  // x^(n+3) + (n+3): for x >= 2 the power exceeds any 64-bit clamp once
  // (n+3)*bits(x) passes 64, so huge indices need no bignum work.
  if (argument <= 1) {
    Nat v = index + 3 + argument;  // 0^(n+3) = 0, 1^(n+3) = 1
    return u64_clamped(v, clamp);
  }
  Nat exp = index + 3;
  if (!exp.fits_ulong_p()) return clamp;
  std::size_t arg_bits = mpz_sizeinbase(argument.get_mpz_t(), 2);
  if (exp.get_ui() > 64 / (arg_bits - 1) + 1) return clamp;
  return u64_clamped(eval(index, argument), clamp);
}

const GrowthFamily& polynomial_family() {
  static const PolynomialFamily family;
  return family;
}

namespace {
std::map<std::string, const GrowthFamily*>& family_registry() {
  static std::map<std::string, const GrowthFamily*> reg{
      {"polynomial", &polynomial_family()}};
  return reg;
}
}  // namespace

const GrowthFamily* find_family(std::string_view name) {
  auto& reg = family_registry();
  auto it = reg.find(std::string(name));
  return it == reg.end() ? nullptr : it->second;
}

void register_family(const GrowthFamily* family) {
  family_registry()[std::string(family->name())] = family;
}

ClockedMachine ClockedMachine::from_code(const Nat& code) {
  PairParts p = unpair(code);
  return ClockedMachine{code, std::move(p.left), std::move(p.right)};
}

ClockedMachine ClockedMachine::from_parts(const Nat& machine_index,
                                          const Nat& clock_index) {
  return ClockedMachine{pair_code(machine_index, clock_index), machine_index,
                        clock_index};
}

ClockedOutcome clocked_run_outcome(const ClockedMachine& cm,
                                   const BinaryWord& input,
                                   const GrowthFamily& family,
                                   const ClockLimits& limits) {
  TuringMachine m = decode_machine(cm.machine_index);
  Nat arg = nat_of(input.size());
  // The clock cuts the run after g_n(|x|) - 1 cycles (one less than the
  // boundedness boundary); the feasibility cap bounds what we will simulate.
  std::uint64_t cap = std::min<std::uint64_t>(limits.step_cap, 1ull << 60);
  std::uint64_t bound = family.eval_clamped(cm.clock_index, arg, cap + 2);
  std::uint64_t clock_budget = bound == 0 ? 0 : bound - 1;
  bool capped = clock_budget > cap;
  std::uint64_t budget = capped ? cap : clock_budget;

  BoundedRun r = run_configuration(m, input, budget);
  ClockedOutcome out;
  out.steps = r.final_configuration.steps_taken;
  out.output = output_word(r.final_configuration);
  if (r.status == RunStatus::Halted) {
    out.stopped_by = ClockStop::Halted;
  } else {
    out.stopped_by = capped ? ClockStop::StepCap : ClockStop::ClockBound;
  }
  return out;
}

BinaryWord clocked_run(const ClockedMachine& cm, const BinaryWord& input,
                       const GrowthFamily& family, const ClockLimits& limits) {
  return clocked_run_outcome(cm, input, family, limits).output;
}

bool is_g_bounded_witness(const Nat& machine_index, const Nat& clock_index,
                          std::span<const BinaryWord> samples,
                          const GrowthFamily& family, std::uint64_t sim_cap) {
  TuringMachine m = decode_machine(machine_index);
  for (const BinaryWord& x : samples) {
    std::uint64_t bound =
        family.eval_clamped(clock_index, nat_of(x.size()), sim_cap);
    RunOutcome r = run(m, x, bound);
    if (r.status != RunStatus::Halted) return false;
  }
  return true;
}

std::vector<Nat> same_function_pairs(const Nat& machine_index,
                                     const Nat& clock_index,
                                     std::uint64_t count) {
  std::vector<Nat> codes;
  codes.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    codes.push_back(pair_code(machine_index, clock_index + nat_of(k)));
  }
  return codes;
}

}  // namespace diaglab
