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

#include "diaglab/kleene.hpp"

#include <algorithm>

namespace diaglab {

Nat encode_window(std::span<const Symbol> cells) {
  Nat v = 0;
  for (Symbol s : cells) {
    v *= 3;
    v += static_cast<unsigned>(s) + 1;
  }
  return v;
}

std::vector<Symbol> decode_window(Nat index) {
  std::vector<Symbol> cells;
  while (index != 0) {
    unsigned long r = mpz_fdiv_ui(index.get_mpz_t(), 3);
    unsigned long d = r == 0 ? 3 : r;
    cells.push_back(static_cast<Symbol>(d - 1));
    index -= static_cast<unsigned long>(d);
    index /= 3;
  }
  std::reverse(cells.begin(), cells.end());
  return cells;
}

Nat encode_configuration(const Configuration& cfg) {
  std::int64_t left = cfg.head;
  std::int64_t right = cfg.head;
  if (cfg.tape.has_nonblank()) {
    left = std::min(left, cfg.tape.leftmost_nonblank());
    right = std::max(right, cfg.tape.rightmost_nonblank());
  }
  std::vector<Symbol> cells;
  cells.reserve(static_cast<std::size_t>(right - left + 1));
  for (std::int64_t i = left; i <= right; ++i) {
    cells.push_back(cfg.tape.at(i));
  }
  Nat inner = pair_code(nat_of(static_cast<std::uint64_t>(cfg.head - left)),
                        encode_window(cells));
  return pair_code(nat_of(cfg.state), inner);
}

DecodedConfiguration decode_configuration(const Nat& code) {
  DecodedConfiguration out;
  PairParts top = unpair(code);
  PairParts inner = unpair(top.right);
  out.window = decode_window(inner.right);
  out.valid = !out.window.empty() &&
              inner.left < nat_of(out.window.size()) &&
              top.left.fits_ulong_p();
  if (!out.valid) return out;
  out.state = to_u64(top.left);
  out.head_offset = to_u64(inner.left);
  return out;
}

Nat encode_list(std::span<const Nat> items) {
  Nat code = 0;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    code = pair_code(*it, code) + 1;
  }
  return code;
}

std::vector<Nat> decode_list(Nat code) {
  std::vector<Nat> items;
  while (code != 0) {
    PairParts parts = unpair(code - 1);
    items.push_back(parts.left);
    code = parts.right;  // strictly smaller than the cons code
  }
  return items;
}

namespace {

bool replay_matches(const TuringMachine& m, const BinaryWord& input,
                    const std::vector<Nat>& codes) {
  if (codes.empty()) return false;
  Configuration cfg = initial_configuration(input);
  for (std::size_t j = 0; j + 1 < codes.size(); ++j) {
    if (cfg.state == 0) return false;  // final before the last snapshot
    if (encode_configuration(cfg) != codes[j]) return false;
    cfg = step(m, cfg);
  }
  if (cfg.state != 0) return false;
  return encode_configuration(cfg) == codes.back();
}

}  // namespace

bool kleene_T(const Nat& e, const Nat& x, const Nat& z) {
  return replay_matches(decode_machine(e), index_to_word(x), decode_list(z));
}

BinaryWord kleene_U(const Nat& z) {
  std::vector<Nat> codes = decode_list(z);
  if (codes.empty()) return BinaryWord{};
  DecodedConfiguration cfg = decode_configuration(codes.back());
  if (!cfg.valid) return BinaryWord{};
  if (cfg.window[cfg.head_offset] == Symbol::Blank) return BinaryWord{};
  std::size_t lo = cfg.head_offset;
  std::size_t hi = cfg.head_offset;
  while (lo > 0 && cfg.window[lo - 1] != Symbol::Blank) --lo;
  while (hi + 1 < cfg.window.size() && cfg.window[hi + 1] != Symbol::Blank) {
    ++hi;
  }
  BinaryWord w;
  for (std::size_t i = lo; i <= hi; ++i) {
    w.push_back(cfg.window[i] == Symbol::One);
  }
  return w;
}

HistoryResult encode_history(const Nat& e, const BinaryWord& input,
                             std::uint64_t max_steps) {
  TuringMachine m = decode_machine(e);
  Configuration cfg = initial_configuration(input);
  std::vector<Nat> codes;
  codes.push_back(encode_configuration(cfg));
  HistoryResult out;
  for (std::uint64_t s = 0; s < max_steps && cfg.state != 0; ++s) {
    cfg = step(m, cfg);
    codes.push_back(encode_configuration(cfg));
  }
  out.steps = cfg.steps_taken;
  if (cfg.state != 0) return out;  // still running at the cap
  out.halted = true;
  out.code = encode_list(codes);
  return out;
}

KleeneResult phi_eval(const Nat& e, const Nat& x, const Nat& budget) {
  TuringMachine m = decode_machine(e);
  BinaryWord input = index_to_word(x);
  KleeneResult r;
  for (Nat z = 0; z <= budget; ++z) {
    if (replay_matches(m, input, decode_list(z))) {
      r.status = KleeneStatus::Found;
      r.index = z;
      r.output = kleene_U(z);
      return r;
    }
  }
  return r;
}

KleeneResult unsound_total(const Nat& e, const Nat& x,
                           const std::function<bool(const Nat&)>& q,
                           const Nat& budget) {
  TuringMachine m = decode_machine(e);
  BinaryWord input = index_to_word(x);
  KleeneResult r;
  for (Nat y = 0; y <= budget; ++y) {
    bool genuine = replay_matches(m, input, decode_list(y));
    if (genuine || q(y)) {
      r.status = KleeneStatus::Found;
      r.index = y;
      r.output = kleene_U(y);
      r.via_escape = !genuine;
      return r;
    }
  }
  return r;
}

}  // namespace diaglab
