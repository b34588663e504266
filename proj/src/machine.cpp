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

#include "diaglab/machine.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace diaglab {

namespace {

constexpr std::uint32_t kSymbolCount = 3;

std::size_t table_index(std::uint32_t state, Symbol read) {
  return static_cast<std::size_t>(state - 1) * kSymbolCount +
         static_cast<std::size_t>(read);
}

}  // namespace

TuringMachine::TuringMachine(std::uint32_t non_final_states)
    : k_(non_final_states), table_(static_cast<std::size_t>(k_) * 3) {
  if (k_ == 0) throw std::out_of_range("a machine needs at least one state");
}

const Transition& TuringMachine::transition(std::uint32_t state,
                                            Symbol read) const {
  if (state == 0 || state > k_) {
    throw std::out_of_range("no transitions out of state " +
                            std::to_string(state));
  }
  return table_[table_index(state, read)];
}

void TuringMachine::set_transition(std::uint32_t state, Symbol read,
                                   Transition t) {
  if (state == 0 || state > k_) {
    throw std::out_of_range("state " + std::to_string(state) +
                            " out of range 1.." + std::to_string(k_));
  }
  if (t.next_state > k_) {
    throw std::out_of_range("target state " + std::to_string(t.next_state) +
                            " exceeds state count " + std::to_string(k_));
  }
  table_[table_index(state, read)] = t;
}

// --- numbering (docs/FORMATS.md) --------------------------------------------

TuringMachine decode_machine(const Nat& e) {
  BinaryWord w = index_to_word(e);
  // Self-delimiting prefix: a leading ones give k = a + 1, then one 0 is
  // consumed as the separator when present.
  std::size_t pos = 0;
  while (pos < w.size() && w.bit(pos)) ++pos;
  std::uint32_t k = static_cast<std::uint32_t>(pos) + 1;
  if (pos < w.size()) ++pos;  // separator

  BinaryWord payload;
  for (std::size_t i = pos; i < w.size(); ++i) payload.push_back(w.bit(i));
  Nat n = word_to_index(payload);

  TuringMachine m(k);
  const unsigned long base = 6UL * (k + 1);
  std::uint32_t state = 1;
  std::uint32_t sym = 0;
  // Low-to-high digits fill (state 1, blank), (state 1, 0), (state 1, 1),
  // (state 2, blank), ...; zero digits are the halting default, digits beyond
  // the table are ignored.
  while (n != 0 && state <= k) {
    unsigned long d = mpz_fdiv_q_ui(n.get_mpz_t(), n.get_mpz_t(), base);
    Transition t;
    t.move = static_cast<Move>(d % 2);
    t.write = static_cast<Symbol>((d / 2) % 3);
    t.next_state = static_cast<std::uint32_t>((d / 6) % (k + 1));
    m.set_transition(state, static_cast<Symbol>(sym), t);
    if (++sym == kSymbolCount) {
      sym = 0;
      ++state;
    }
  }
  return m;
}

Nat encode_machine(const TuringMachine& m) {
  const std::uint32_t k = m.state_count();
  const unsigned long base = 6UL * (k + 1);
  Nat n = 0;
  for (std::uint32_t state = k; state >= 1; --state) {
    for (std::uint32_t sym = kSymbolCount; sym-- > 0;) {
      const Transition& t = m.transition(state, static_cast<Symbol>(sym));
      unsigned long d = static_cast<unsigned long>(t.move) +
                        2UL * static_cast<unsigned long>(t.write) +
                        6UL * t.next_state;
      n = n * base + d;
    }
  }
  BinaryWord w;
  for (std::uint32_t i = 0; i + 1 < k; ++i) w.push_back(true);
  w.push_back(false);
  BinaryWord payload = index_to_word(n);
  for (std::size_t i = 0; i < payload.size(); ++i)
    w.push_back(payload.bit(i));
  return word_to_index(w);
}

// --- tape and configurations -------------------------------------------------

Symbol Tape::at(std::int64_t cell) const {
  if (cells_.empty() || cell < origin_ ||
      cell >= origin_ + static_cast<std::int64_t>(cells_.size())) {
    return Symbol::Blank;
  }
  return static_cast<Symbol>(cells_[static_cast<std::size_t>(cell - origin_)]);
}

void Tape::ensure(std::int64_t cell) {
  if (cells_.empty()) {
    origin_ = cell;
    cells_.assign(1, 0);
    return;
  }
  if (cell < origin_) {
    // Grow the front geometrically so long leftward walks stay linear.
    std::size_t need = static_cast<std::size_t>(origin_ - cell);
    std::size_t grow = std::max(need, cells_.size());
    cells_.insert(cells_.begin(), grow, 0);
    origin_ -= static_cast<std::int64_t>(grow);
  } else if (cell >= origin_ + static_cast<std::int64_t>(cells_.size())) {
    std::size_t need =
        static_cast<std::size_t>(cell - origin_) + 1 - cells_.size();
    cells_.resize(cells_.size() + std::max(need, cells_.size()));
  }
}

void Tape::set(std::int64_t cell, Symbol s) {
  if (s == Symbol::Blank && at(cell) == Symbol::Blank) return;
  ensure(cell);
  cells_[static_cast<std::size_t>(cell - origin_)] =
      static_cast<std::uint8_t>(s);
}

bool Tape::has_nonblank() const {
  for (std::uint8_t c : cells_) {
    if (c != 0) return true;
  }
  return false;
}

std::int64_t Tape::leftmost_nonblank() const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] != 0) return origin_ + static_cast<std::int64_t>(i);
  }
  throw std::logic_error("tape is all blank");
}

std::int64_t Tape::rightmost_nonblank() const {
  for (std::size_t i = cells_.size(); i-- > 0;) {
    if (cells_[i] != 0) return origin_ + static_cast<std::int64_t>(i);
  }
  throw std::logic_error("tape is all blank");
}

bool operator==(const Tape& a, const Tape& b) {
  bool an = a.has_nonblank();
  bool bn = b.has_nonblank();
  if (an != bn) return false;
  if (!an) return true;
  std::int64_t lo = a.leftmost_nonblank();
  std::int64_t hi = a.rightmost_nonblank();
  if (lo != b.leftmost_nonblank() || hi != b.rightmost_nonblank())
    return false;
  for (std::int64_t c = lo; c <= hi; ++c) {
    if (a.at(c) != b.at(c)) return false;
  }
  return true;
}

Configuration initial_configuration(const BinaryWord& input) {
  Configuration cfg;
  for (std::size_t i = 0; i < input.size(); ++i) {
    cfg.tape.set(static_cast<std::int64_t>(i),
                 input.bit(i) ? Symbol::One : Symbol::Zero);
  }
  return cfg;
}

Configuration step(const TuringMachine& m, const Configuration& cfg) {
  if (cfg.state == 0) {
    throw std::logic_error("stepping a halted configuration");
  }
  Configuration next = cfg;
  const Transition& t = m.transition(cfg.state, cfg.tape.at(cfg.head));
  next.tape.set(cfg.head, t.write);
  next.head += t.move == Move::Right ? 1 : -1;
  next.state = t.next_state;
  next.steps_taken += 1;
  return next;
}

BinaryWord word_under_head(const Tape& tape, std::int64_t head) {
  if (tape.at(head) == Symbol::Blank) return BinaryWord();
  std::int64_t lo = head;
  while (tape.at(lo - 1) != Symbol::Blank) --lo;
  std::int64_t hi = head;
  while (tape.at(hi + 1) != Symbol::Blank) ++hi;
  BinaryWord w;
  for (std::int64_t c = lo; c <= hi; ++c) {
    w.push_back(tape.at(c) == Symbol::One);
  }
  return w;
}

BinaryWord output_word(const Configuration& cfg) {
  return word_under_head(cfg.tape, cfg.head);
}

BoundedRun run_configuration(const TuringMachine& m, const BinaryWord& input,
                             std::uint64_t max_steps) {
  BoundedRun r;
  r.final_configuration = initial_configuration(input);
  Configuration& cfg = r.final_configuration;
  while (cfg.state != 0 && cfg.steps_taken < max_steps) {
    const Transition& t = m.transition(cfg.state, cfg.tape.at(cfg.head));
    cfg.tape.set(cfg.head, t.write);
    cfg.head += t.move == Move::Right ? 1 : -1;
    cfg.state = t.next_state;
    cfg.steps_taken += 1;
  }
  r.status = cfg.state == 0 ? RunStatus::Halted : RunStatus::OutOfBudget;
  return r;
}

RunOutcome run(const TuringMachine& m, const BinaryWord& input,
               std::uint64_t max_steps) {
  BoundedRun r = run_configuration(m, input, max_steps);
  RunOutcome out;
  out.status = r.status;
  out.steps = r.final_configuration.steps_taken;
  if (r.status == RunStatus::Halted) {
    out.output = output_word(r.final_configuration);
  }
  return out;
}

ConstantMachine constant_machine(const BinaryWord& s) {
  // Phase 1 (state 1) erases the input left to right; on the first blank the
  // machine steps left and writes s back to front (one state per symbol);
  // a final state steps right onto the first symbol of s and halts.
  if (s.empty()) {
    TuringMachine m(1);
    m.set_transition(1, Symbol::Zero, {1, Symbol::Blank, Move::Right});
    m.set_transition(1, Symbol::One, {1, Symbol::Blank, Move::Right});
    m.set_transition(1, Symbol::Blank, {0, Symbol::Blank, Move::Right});
    return ConstantMachine{m, 1};
  }
  const std::uint32_t len = static_cast<std::uint32_t>(s.size());
  TuringMachine m(len + 2);
  m.set_transition(1, Symbol::Zero, {1, Symbol::Blank, Move::Right});
  m.set_transition(1, Symbol::One, {1, Symbol::Blank, Move::Right});
  m.set_transition(1, Symbol::Blank, {2, Symbol::Blank, Move::Left});
  for (std::uint32_t j = 1; j <= len; ++j) {
    Symbol write = s.bit(len - j) ? Symbol::One : Symbol::Zero;
    std::uint32_t next = j == len ? len + 2 : j + 2;
    for (Symbol read : {Symbol::Blank, Symbol::Zero, Symbol::One}) {
      m.set_transition(j + 1, read, {next, write, Move::Left});
    }
  }
  for (Symbol read : {Symbol::Blank, Symbol::Zero, Symbol::One}) {
    m.set_transition(len + 2, read, {0, read, Move::Right});
  }
  return ConstantMachine{m, static_cast<std::uint64_t>(len) + 2};
}

// --- text form ---------------------------------------------------------------

namespace {

Symbol parse_symbol(const std::string& tok) {
  if (tok == "0") return Symbol::Zero;
  if (tok == "1") return Symbol::One;
  if (tok == "_") return Symbol::Blank;
  throw std::invalid_argument("bad tape symbol '" + tok + "'");
}

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::Zero: return '0';
    case Symbol::One: return '1';
    default: return '_';
  }
}

}  // namespace

TuringMachine parse_machine_text(std::istream& in) {
  struct Line {
    std::uint32_t state;
    Symbol read;
    Transition t;
  };
  std::vector<Line> lines;
  std::uint32_t max_state = 1;
  std::string raw;
  while (std::getline(in, raw)) {
    if (std::size_t hash = raw.find('#'); hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream ls(raw);
    std::string st, sym, arrow, nst, nsym, mv;
    if (!(ls >> st)) continue;  // blank line
    if (!(ls >> sym >> arrow >> nst >> nsym >> mv) || arrow != "->") {
      throw std::invalid_argument("bad transition line: " + raw);
    }
    Line l;
    l.state = static_cast<std::uint32_t>(std::stoul(st));
    l.read = parse_symbol(sym);
    l.t.next_state = static_cast<std::uint32_t>(std::stoul(nst));
    l.t.write = parse_symbol(nsym);
    if (mv == "L") {
      l.t.move = Move::Left;
    } else if (mv == "R") {
      l.t.move = Move::Right;
    } else {
      throw std::invalid_argument("bad move '" + mv + "'");
    }
    if (l.state == 0) {
      throw std::invalid_argument("state 0 is final and has no transitions");
    }
    max_state = std::max({max_state, l.state, l.t.next_state});
    lines.push_back(l);
  }
  TuringMachine m(max_state);
  for (const Line& l : lines) m.set_transition(l.state, l.read, l.t);
  return m;
}

void write_machine_text(std::ostream& out, const TuringMachine& m) {
  for (std::uint32_t state = 1; state <= m.state_count(); ++state) {
    for (Symbol read : {Symbol::Blank, Symbol::Zero, Symbol::One}) {
      const Transition& t = m.transition(state, read);
      out << state << ' ' << symbol_char(read) << " -> " << t.next_state
          << ' ' << symbol_char(t.write) << ' '
          << (t.move == Move::Left ? 'L' : 'R') << '\n';
    }
  }
}

}  // namespace diaglab
