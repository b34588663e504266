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
#include <iosfwd>
#include <vector>

#include "diaglab/nat.hpp"
#include "diaglab/words.hpp"

namespace diaglab {

// Tape alphabet.  The numeric values double as the field codes used by the
// machine numbering (docs/FORMATS.md), so do not reorder.
enum class Symbol : std::uint8_t { Blank = 0, Zero = 1, One = 2 };

enum class Move : std::uint8_t { Right = 0, Left = 1 };

struct Transition {
  std::uint32_t next_state = 0;  // 0 is the final state
  Symbol write = Symbol::Blank;
  Move move = Move::Right;
  friend bool operator==(const Transition&, const Transition&) = default;
};

// A deterministic one-tape machine with states 0..k where 0 is final (no
// outgoing transitions) and 1 is initial.  The table is total on states
// 1..k x {blank, 0, 1}; unset entries are the halting default
// (state 0, write blank, move right).
class TuringMachine {
 public:
  // k >= 1 non-final states, all transitions defaulted.
  explicit TuringMachine(std::uint32_t non_final_states);

  std::uint32_t state_count() const { return k_; }

  const Transition& transition(std::uint32_t state, Symbol read) const;

  // Throws std::out_of_range when state is not in 1..k or the target state
  // exceeds k.
  void set_transition(std::uint32_t state, Symbol read, Transition t);

  friend bool operator==(const TuringMachine&, const TuringMachine&) = default;

 private:
  std::uint32_t k_;
  std::vector<Transition> table_;  // (state-1)*3 + symbol code
};

// Total, surjective numbering of machines; every natural is a machine code.
// Bit-exact rule in docs/FORMATS.md.  decode_machine(0) is the one-state
// machine that halts in a single step.
TuringMachine decode_machine(const Nat& e);

// Section of decode_machine: decode_machine(encode_machine(m)) has the same
// state count and table as m.
Nat encode_machine(const TuringMachine& m);

// Two-sided infinite tape, blank outside the written window.
class Tape {
 public:
  Symbol at(std::int64_t cell) const;
  void set(std::int64_t cell, Symbol s);

  // Inclusive bounds of the non-blank support; valid only when nonblank().
  bool has_nonblank() const;
  std::int64_t leftmost_nonblank() const;
  std::int64_t rightmost_nonblank() const;

  friend bool operator==(const Tape&, const Tape&);

 private:
  std::vector<std::uint8_t> cells_;  // Symbol values
  std::int64_t origin_ = 0;          // tape cell index of cells_[0]
  void ensure(std::int64_t cell);
};

struct Configuration {
  Tape tape;
  std::int64_t head = 0;
  std::uint32_t state = 1;
  std::uint64_t steps_taken = 0;
};

// Input word written on cells 0..|w|-1, head on cell 0, state 1, 0 steps.
Configuration initial_configuration(const BinaryWord& input);

// One transition.  Throws std::logic_error when cfg.state is already final.
Configuration step(const TuringMachine& m, const Configuration& cfg);

// The maximal contiguous non-blank block covering the head; empty when the
// head rests on a blank cell.
BinaryWord output_word(const Configuration& cfg);
BinaryWord word_under_head(const Tape& tape, std::int64_t head);

enum class RunStatus { Halted, OutOfBudget };

struct RunOutcome {
  RunStatus status = RunStatus::OutOfBudget;
  BinaryWord output;          // meaningful for Halted
  std::uint64_t steps = 0;    // steps actually executed
};

// Runs at most max_steps transitions.  Observationally equal to iterating
// step() from initial_configuration(input).
RunOutcome run(const TuringMachine& m, const BinaryWord& input,
               std::uint64_t max_steps);

// Like run(), but reports the final configuration (householding for the
// clocked runner and the history codec).
struct BoundedRun {
  RunStatus status = RunStatus::OutOfBudget;
  Configuration final_configuration;
};
BoundedRun run_configuration(const TuringMachine& m, const BinaryWord& input,
                             std::uint64_t max_steps);

// Machine computing the constant function s: erases its input, writes s, and
// halts with the head on the first symbol of s (on a blank when s is empty).
// Runs in exactly |input| + extra_steps transitions.
struct ConstantMachine {
  TuringMachine machine;
  std::uint64_t extra_steps = 0;
  std::uint64_t step_bound(std::uint64_t input_length) const {
    return input_length + extra_steps;
  }
};
ConstantMachine constant_machine(const BinaryWord& s);

// Text form, one transition per line: "state symbol -> state' symbol' move"
// with symbols 0, 1, _ and moves L, R; '#' starts a comment.  Unlisted
// entries default to the halting transition; the state count is the largest
// state mentioned.
TuringMachine parse_machine_text(std::istream& in);
void write_machine_text(std::ostream& out, const TuringMachine& m);

}  // namespace diaglab
