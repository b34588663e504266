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

#include "diaglab/representation.hpp"

#include <algorithm>
#include <stdexcept>

namespace diaglab {

Representation Representation::from_prefix(
    std::vector<std::uint64_t> prefix) {
  Representation r;
  r.inverse_.assign(prefix.size(), prefix.size());
  for (std::uint64_t pos = 0; pos < prefix.size(); ++pos) {
    std::uint64_t code = prefix[pos];
    if (code >= prefix.size() || r.inverse_[code] != prefix.size()) {
      throw std::invalid_argument(
          "prefix is not a permutation of 0..L-1");
    }
    r.inverse_[code] = pos;
  }
  r.prefix_ = std::move(prefix);
  return r;
}

Representation Representation::from_parts(
    std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> inverse) {
  Representation r;
  r.prefix_ = std::move(prefix);
  r.inverse_ = std::move(inverse);
  return r;
}

Nat Representation::apply(const Nat& position) const {
  if (position.fits_ulong_p()) {
    std::uint64_t p = position.get_ui();
    if (p < prefix_.size()) return nat_of(prefix_[p]);
  }
  return position;
}

Nat Representation::apply_inverse(const Nat& code) const {
  if (code.fits_ulong_p()) {
    std::uint64_t c = code.get_ui();
    if (c < inverse_.size()) return nat_of(inverse_[c]);
  }
  return code;
}

void Representation::extend_to(std::uint64_t length) {
  std::uint64_t old = prefix_.size();
  if (length <= old) return;
  prefix_.resize(length);
  inverse_.resize(length);
  for (std::uint64_t p = old; p < length; ++p) {
    prefix_[p] = p;
    inverse_[p] = p;
  }
}

void Representation::transpose_positions(std::uint64_t a, std::uint64_t b) {
  extend_to(std::max(a, b) + 1);
  std::swap(prefix_[a], prefix_[b]);
  inverse_[prefix_[a]] = a;
  inverse_[prefix_[b]] = b;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
Representation::moved_entries() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> moved;
  for (std::uint64_t p = 0; p < prefix_.size(); ++p) {
    if (prefix_[p] != p) moved.emplace_back(p, prefix_[p]);
  }
  return moved;
}

}  // namespace diaglab
