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

#include "diaglab/machine.hpp"
#include "diaglab/nat.hpp"
#include "diaglab/words.hpp"

namespace diaglab {

// An indexed family of total step-count bounds g_n, strictly increasing in
// the argument and in the index, with g_0 everywhere above 2.
class GrowthFamily {
 public:
  virtual ~GrowthFamily() = default;
  virtual std::string_view name() const = 0;

  // g_index(argument).  May be astronomically large; always exact.
  virtual Nat eval(const Nat& index, const Nat& argument) const = 0;

  // min(eval(index, argument), clamp) as a machine word, computed without
  // materializing huge powers where possible.
  virtual std::uint64_t eval_clamped(const Nat& index, const Nat& argument,
                                     std::uint64_t clamp) const;
};

// g_n(x) = x^(n+3) + (n+3); in particular g_0(x) = x^3 + 3.
class PolynomialFamily final : public GrowthFamily {
 public:
  std::string_view name() const override { return "polynomial"; }
  Nat eval(const Nat& index, const Nat& argument) const override;
  std::uint64_t eval_clamped(const Nat& index, const Nat& argument,
                             std::uint64_t clamp) const override;
};

const GrowthFamily& polynomial_family();

// Looks up a registered family by name ("polynomial" built in); returns
// nullptr when unknown.  register_family allows callers to plug their own in
// for the lifetime of the process.
const GrowthFamily* find_family(std::string_view name);
void register_family(const GrowthFamily* family);

// A machine index paired with a clock index; code = pair(machine, clock).
struct ClockedMachine {
  Nat code;
  Nat machine_index;
  Nat clock_index;
  static ClockedMachine from_code(const Nat& code);
  static ClockedMachine from_parts(const Nat& machine_index,
                                   const Nat& clock_index);
};

// Simulation feasibility cap: a clocked run executes at most
// min(g_n(|x|) - 1, step_cap) transitions.  Bounds that the cap truncates
// are astronomically beyond desk scale (see docs/FORMATS.md).
struct ClockLimits {
  std::uint64_t step_cap = 65536;
};

enum class ClockStop {
  Halted,      // reached the final state on its own
  ClockBound,  // stopped by the clock after g_n(|x|) - 1 cycles
  StepCap,     // stopped by the feasibility cap before the clock bound
};

struct ClockedOutcome {
  BinaryWord output;         // word under the head at stop time
  std::uint64_t steps = 0;
  ClockStop stopped_by = ClockStop::Halted;
};

// Runs machine i on input with the clock g_n: the run is cut after
// g_n(|input|) - 1 cycles, the state is forced final, and the output is the
// word under the head.  Total for every code and input.
ClockedOutcome clocked_run_outcome(const ClockedMachine& cm,
                                   const BinaryWord& input,
                                   const GrowthFamily& family,
                                   const ClockLimits& limits = {});
BinaryWord clocked_run(const ClockedMachine& cm, const BinaryWord& input,
                       const GrowthFamily& family,
                       const ClockLimits& limits = {});

// True iff the unclocked machine i halts within g_n(|x|) steps on every
// sample (note: one more step than the clocked runner allows; the boundary
// is intentionally "at most at g_n").  Evidence is capped by sim_cap; a
// sample whose bound exceeds the cap and does not halt within it counts as
// false.
bool is_g_bounded_witness(const Nat& machine_index, const Nat& clock_index,
                          std::span<const BinaryWord> samples,
                          const GrowthFamily& family,
                          std::uint64_t sim_cap = 1u << 20);

// Codes pair(i, n), pair(i, n+1), ..., pair(i, n+count-1): the same machine
// under ever-larger clocks.
std::vector<Nat> same_function_pairs(const Nat& machine_index,
                                     const Nat& clock_index,
                                     std::uint64_t count);

}  // namespace diaglab
