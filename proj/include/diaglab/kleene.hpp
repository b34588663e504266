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
#include <span>
#include <vector>

#include "diaglab/machine.hpp"
#include "diaglab/nat.hpp"
#include "diaglab/words.hpp"

namespace diaglab {

// --- snapshot and list codecs (exposed for tests and the report tool) -------

// Bijective base-3 over symbol strings: the empty string is 0, each cell
// contributes digit = symbol code + 1, leftmost cell most significant.
Nat encode_window(std::span<const Symbol> cells);
std::vector<Symbol> decode_window(Nat index);

// Canonical snapshot code: pair(state, pair(head_offset, window_index)).
// The window spans min(leftmost nonblank, head) .. max(rightmost nonblank,
// head) -- a single blank cell when the tape is empty -- and head_offset is
// the head's position inside it, so the window always contains the head.
Nat encode_configuration(const Configuration& cfg);

struct DecodedConfiguration {
  std::uint64_t state = 0;
  std::uint64_t head_offset = 0;
  std::vector<Symbol> window;
  bool valid = false;  // nonempty window containing the head offset
};
DecodedConfiguration decode_configuration(const Nat& code);

// Linked-list numbering: nil is 0, cons(h, t) is pair(h, code(t)) + 1.
Nat encode_list(std::span<const Nat> items);
std::vector<Nat> decode_list(Nat code);

// --- the T / U pair ----------------------------------------------------------

// True iff z encodes, snapshot by snapshot, the complete halting computation
// of machine e on word(x): the first snapshot is the initial configuration,
// consecutive snapshots are exactly one transition apart, and only the last
// one is in the final state.  Total, with cost linear in the length of the
// encoded history.
bool kleene_T(const Nat& e, const Nat& x, const Nat& z);

// Output extraction: the word under the head in the last snapshot of z; the
// empty word when z encodes no snapshot or a malformed one.  Total and
// independent of any machine.
BinaryWord kleene_U(const Nat& z);

// Constructs the unique z with kleene_T(e, x, z) by running the machine, or
// reports that it did not halt within max_steps.
struct HistoryResult {
  bool halted = false;
  Nat code;                 // meaningful when halted
  std::uint64_t steps = 0;  // transitions executed
};
HistoryResult encode_history(const Nat& e, const BinaryWord& input,
                             std::uint64_t max_steps);

enum class KleeneStatus { Found, BudgetExhausted };

struct KleeneResult {
  KleeneStatus status = KleeneStatus::BudgetExhausted;
  Nat index;                // the found search point, when Found
  BinaryWord output;        // U of that point
  bool via_escape = false;  // unsound_total only: the escape clause fired
};

// mu-search for the least z <= budget with kleene_T(e, x, z); the output is
// U(z).  History codes grow fast, so keep to few-step machines (see
// docs/FORMATS.md for the sizes involved).
KleeneResult phi_eval(const Nat& e, const Nat& x, const Nat& budget);

// The same search with an extra stopping clause: least y <= budget with
// kleene_T(e, x, y) or q(y).  Bolting on the escape makes the search stop
// everywhere q eventually holds, but the returned U(y) then has no relation
// to machine e -- which is the point of the demonstration.
KleeneResult unsound_total(const Nat& e, const Nat& x,
                           const std::function<bool(const Nat&)>& q,
                           const Nat& budget);

}  // namespace diaglab
