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
#include <utility>
#include <vector>

#include "diaglab/nat.hpp"

namespace diaglab {

// A recursive permutation of the machine enumeration given by an explicit
// finite prefix plus the identity beyond it: position p holds machine code
// prefix[p] for p < L and code p otherwise.  The prefix is always a
// permutation of {0, ..., L-1}, so apply and inverse are total and mutually
// inverse on all naturals.
class Representation {
 public:
  Representation() = default;  // identity, empty prefix

  static Representation identity() { return Representation(); }

  // Validates that prefix is a permutation of 0..L-1; throws
  // std::invalid_argument otherwise.
  static Representation from_prefix(std::vector<std::uint64_t> prefix);

  // Unchecked escape hatch: callers supply both directions verbatim (used by
  // tests to build deliberately inconsistent permutations).
  static Representation from_parts(std::vector<std::uint64_t> prefix,
                                   std::vector<std::uint64_t> inverse);

  std::uint64_t prefix_length() const { return prefix_.size(); }

  // Machine code at the given position of the permuted enumeration.
  Nat apply(const Nat& position) const;

  // Position of the given machine code; exact inverse of apply.
  Nat apply_inverse(const Nat& code) const;

  // Swaps the codes at two positions, extending the prefix with identity
  // entries as needed.
  void transpose_positions(std::uint64_t a, std::uint64_t b);

  // (position, code) pairs where the prefix differs from the identity, in
  // position order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> moved_entries() const;

  friend bool operator==(const Representation&, const Representation&) =
      default;

 private:
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> inverse_;
  void extend_to(std::uint64_t length);
};

// Free-function spelling used throughout the engine.
inline Nat apply(const Representation& phi, const Nat& position) {
  return phi.apply(position);
}
inline Nat inverse(const Representation& phi, const Nat& code) {
  return phi.apply_inverse(code);
}

}  // namespace diaglab
