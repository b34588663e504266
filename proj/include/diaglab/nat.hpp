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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diaglab {

// Unbounded natural number.  Machine codes and pair codes outgrow 64 bits
// almost immediately (a constant machine for a 20-bit word has a code of
// roughly 10^140), so the whole value-level API works on mpz.
using Nat = mpz_class;

// Narrow to uint64, throwing when the value genuinely does not fit.
inline std::uint64_t to_u64(const Nat& v) {
  if (v < 0 || !v.fits_ulong_p()) {
    throw std::overflow_error("natural does not fit in 64 bits: " +
                              v.get_str());
  }
  return static_cast<std::uint64_t>(v.get_ui());
}

// min(v, cap) as uint64; handy when v may be astronomically large.
inline std::uint64_t u64_clamped(const Nat& v, std::uint64_t cap) {
  if (!v.fits_ulong_p()) return cap;
  std::uint64_t u = static_cast<std::uint64_t>(v.get_ui());
  return u < cap ? u : cap;
}

inline Nat nat_of(std::uint64_t v) {
  return Nat(static_cast<unsigned long>(v));
}

}  // namespace diaglab
