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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "diaglab/machine.hpp"

using namespace diaglab;

namespace {

// The triple of the digit layout: digit = move + 2*write + 6*next.
Transition tr(std::uint32_t next, Symbol write, Move move) {
  return Transition{next, write, move};
}

}  // namespace

TEST_CASE("machine 0 is the one-state immediate halter") {
  TuringMachine m = decode_machine(0);
  CHECK(m.state_count() == 1);
  CHECK(m.transition(1, Symbol::Blank) == Transition{});
  CHECK(m.transition(1, Symbol::Zero) == Transition{});
  CHECK(m.transition(1, Symbol::One) == Transition{});

  // One default step: blank cell 0, move right onto the '0' of "101".
  RunOutcome out = run(m, BinaryWord::from_bits("101"), 10);
  CHECK(out.status == RunStatus::Halted);
  CHECK(out.steps == 1);
  CHECK(out.output == BinaryWord::from_bits("01"));
  CHECK(run(m, BinaryWord{}, 10).output.empty());
}

TEST_CASE("numbering follows the documented digit layout") {
  // Payload digit 8 in base 12 = move 0, write code 1, next state 1,
  // packed as word index 8 behind the one-state prefix "0".
  Nat e = word_to_index(
      BinaryWord::from_bits("0" + index_to_word(8).bits()));
  CHECK(e == 16);
  TuringMachine m = decode_machine(e);
  CHECK(m.state_count() == 1);
  CHECK(m.transition(1, Symbol::Blank) == tr(1, Symbol::Zero, Move::Right));
  CHECK(m.transition(1, Symbol::Zero) == Transition{});
  CHECK(encode_machine(m) == e);

  // Two-state machine: prefix "1" "0", base 18, only the digit for
  // (state 2, symbol '1') at position 5 is set, to move 1 + 2*2 + 6*2 = 17.
  Nat payload = nat_of(17);
  for (int i = 0; i < 5; ++i) payload *= 18;
  Nat e2 = word_to_index(
      BinaryWord::from_bits("10" + index_to_word(payload).bits()));
  TuringMachine m2 = decode_machine(e2);
  CHECK(m2.state_count() == 2);
  CHECK(m2.transition(2, Symbol::One) == tr(2, Symbol::One, Move::Left));
  CHECK(m2.transition(1, Symbol::Blank) == Transition{});
  CHECK(m2.transition(2, Symbol::Zero) == Transition{});
  CHECK(encode_machine(m2) == e2);
}

TEST_CASE("frozen small machine decodes") {
  TuringMachine m95 = decode_machine(95);
  CHECK(m95.state_count() == 2);
  CHECK(m95.transition(1, Symbol::Blank) == tr(2, Symbol::Zero, Move::Left));
  CHECK(m95.transition(1, Symbol::Zero) == Transition{});
  CHECK(m95.transition(2, Symbol::Blank) == Transition{});

  TuringMachine m165 = decode_machine(165);
  CHECK(m165.state_count() == 1);
  CHECK(m165.transition(1, Symbol::Blank) == tr(0, Symbol::One, Move::Left));
  CHECK(m165.transition(1, Symbol::Zero) == tr(1, Symbol::Zero, Move::Right));
  CHECK(m165.transition(1, Symbol::One) == Transition{});

  TuringMachine m2181 = decode_machine(2181);
  CHECK(m2181.state_count() == 1);
  CHECK(m2181.transition(1, Symbol::Blank) == tr(0, Symbol::One, Move::Left));
  CHECK(m2181.transition(1, Symbol::One) == tr(1, Symbol::Zero, Move::Right));
  CHECK(m2181.transition(1, Symbol::Zero) == Transition{});
}

TEST_CASE("every natural decodes, and encoding is a canonical section") {
  for (std::uint64_t e = 0; e < 4096; ++e) {
    TuringMachine m = decode_machine(nat_of(e));
    Nat canonical = encode_machine(m);
    CHECK(decode_machine(canonical) == m);
  }
  // Aliases: the zero code and the separator-less all-ones words decode to
  // all-default machines whose canonical spelling carries the separator.
  CHECK(encode_machine(decode_machine(0)) == 1);
  CHECK(decode_machine(0) == decode_machine(1));
  CHECK(encode_machine(decode_machine(2)) == 5);   // "1"  -> "10"
  CHECK(encode_machine(decode_machine(6)) == 13);  // "11" -> "110"
}

TEST_CASE("encode/decode round-trips constructed machines exactly") {
  for (std::uint64_t n = 0; n < 16; ++n) {
    TuringMachine m = constant_machine(index_to_word(nat_of(n))).machine;
    CHECK(decode_machine(encode_machine(m)) == m);
  }
  TuringMachine bouncer(2);
  bouncer.set_transition(1, Symbol::Blank, tr(2, Symbol::One, Move::Right));
  bouncer.set_transition(1, Symbol::Zero, tr(2, Symbol::One, Move::Right));
  bouncer.set_transition(1, Symbol::One, tr(2, Symbol::One, Move::Right));
  bouncer.set_transition(2, Symbol::Blank, tr(1, Symbol::One, Move::Left));
  bouncer.set_transition(2, Symbol::Zero, tr(1, Symbol::One, Move::Left));
  bouncer.set_transition(2, Symbol::One, tr(1, Symbol::One, Move::Left));
  CHECK(decode_machine(encode_machine(bouncer)) == bouncer);
}

TEST_CASE("transition table bounds are enforced") {
  CHECK_THROWS_AS(TuringMachine(0), std::out_of_range);
  TuringMachine m(2);
  CHECK_THROWS_AS(m.transition(0, Symbol::Blank), std::out_of_range);
  CHECK_THROWS_AS(m.transition(3, Symbol::Blank), std::out_of_range);
  CHECK_THROWS_AS(m.set_transition(0, Symbol::Blank, Transition{}),
                  std::out_of_range);
  CHECK_THROWS_AS(m.set_transition(1, Symbol::Blank, tr(3, Symbol::Blank,
                                                        Move::Right)),
                  std::out_of_range);
}

TEST_CASE("tape reads blank everywhere until written") {
  Tape t;
  CHECK_FALSE(t.has_nonblank());
  CHECK(t.at(0) == Symbol::Blank);
  CHECK(t.at(-1000) == Symbol::Blank);
  t.set(-3, Symbol::One);
  t.set(5, Symbol::Zero);
  CHECK(t.at(-3) == Symbol::One);
  CHECK(t.at(5) == Symbol::Zero);
  CHECK(t.at(0) == Symbol::Blank);
  CHECK(t.leftmost_nonblank() == -3);
  CHECK(t.rightmost_nonblank() == 5);
  t.set(-3, Symbol::Blank);
  t.set(5, Symbol::Blank);
  CHECK_FALSE(t.has_nonblank());

  Tape u;
  u.set(7, Symbol::Blank);  // blank-on-blank write is a no-op
  CHECK(u == Tape{});
}

TEST_CASE("stepping replays one transition at a time") {
  // Machine 95: on blank, write '0' and bounce left into state 2, which
  // halts by default.
  TuringMachine m = decode_machine(95);
  Configuration cfg = initial_configuration(BinaryWord{});
  CHECK(cfg.state == 1);
  CHECK(cfg.head == 0);
  cfg = step(m, cfg);
  CHECK(cfg.state == 2);
  CHECK(cfg.head == -1);
  CHECK(cfg.tape.at(0) == Symbol::Zero);
  CHECK(cfg.steps_taken == 1);
  cfg = step(m, cfg);
  CHECK(cfg.state == 0);
  CHECK(cfg.steps_taken == 2);
  CHECK_THROWS_AS(step(m, cfg), std::logic_error);
}

TEST_CASE("the output word is the non-blank block under the head") {
  Configuration cfg = initial_configuration(BinaryWord::from_bits("0110"));
  CHECK(output_word(cfg) == BinaryWord::from_bits("0110"));
  cfg.head = 3;
  CHECK(output_word(cfg) == BinaryWord::from_bits("0110"));
  cfg.head = 4;  // one past the input: blank
  CHECK(output_word(cfg).empty());
  cfg.head = -1;
  CHECK(output_word(cfg).empty());
  cfg.tape.set(2, Symbol::Blank);  // split the block: 01_0
  cfg.head = 0;
  CHECK(output_word(cfg) == BinaryWord::from_bits("01"));
  cfg.head = 3;
  CHECK(output_word(cfg) == BinaryWord::from_bits("0"));
  CHECK(word_under_head(cfg.tape, 1) == BinaryWord::from_bits("01"));
}

TEST_CASE("run honours its step budget exactly") {
  // Machine 165 walks right over '0's, then appends a '1' and halts.
  TuringMachine m165 = decode_machine(165);
  BinaryWord zeros = BinaryWord::from_bits("0000");
  RunOutcome full = run(m165, zeros, 100);
  CHECK(full.status == RunStatus::Halted);
  CHECK(full.steps == 5);
  CHECK(full.output == BinaryWord::from_bits("00001"));

  RunOutcome cut = run(m165, zeros, 4);
  CHECK(cut.status == RunStatus::OutOfBudget);
  CHECK(cut.steps == 4);

  BoundedRun replay = run_configuration(m165, zeros, 5);
  CHECK(replay.status == RunStatus::Halted);
  CHECK(replay.final_configuration.state == 0);
  CHECK(replay.final_configuration.steps_taken == 5);
  CHECK(output_word(replay.final_configuration) ==
        BinaryWord::from_bits("00001"));
}

TEST_CASE("constant machines hit their exact runtime for every input") {
  for (std::uint64_t sn = 0; sn < 16; ++sn) {
    BinaryWord s = index_to_word(nat_of(sn));
    ConstantMachine cm = constant_machine(s);
    for (std::uint64_t xn = 0; xn < 8; ++xn) {
      BinaryWord x = index_to_word(nat_of(xn));
      std::uint64_t budget = cm.step_bound(x.size());
      RunOutcome out = run(cm.machine, x, budget);
      CHECK(out.status == RunStatus::Halted);
      CHECK(out.steps == budget);
      CHECK(out.output == s);
      CHECK(run(cm.machine, x, budget - 1).status == RunStatus::OutOfBudget);
    }
  }
  CHECK(constant_machine(BinaryWord{}).step_bound(3) == 4);
  CHECK(constant_machine(BinaryWord::from_bits("1")).step_bound(0) == 3);
}

TEST_CASE("machine text form round-trips and validates") {
  for (std::uint64_t e : {95ULL, 165ULL, 2181ULL}) {
    TuringMachine m = decode_machine(nat_of(e));
    std::stringstream buf;
    write_machine_text(buf, m);
    CHECK(parse_machine_text(buf) == m);
  }

  std::istringstream text(
      "# scribble then park\n"
      "1 _ -> 2 0 L\n"
      "\n"
      "2 1 -> 1 _ R\n");
  TuringMachine m = parse_machine_text(text);
  CHECK(m.state_count() == 2);
  CHECK(m.transition(1, Symbol::Blank) == tr(2, Symbol::Zero, Move::Left));
  CHECK(m.transition(2, Symbol::One) == tr(1, Symbol::Blank, Move::Right));

  std::istringstream bad_move("1 _ -> 1 _ X\n");
  CHECK_THROWS_AS(parse_machine_text(bad_move), std::invalid_argument);
  std::istringstream bad_symbol("1 2 -> 1 _ R\n");
  CHECK_THROWS_AS(parse_machine_text(bad_symbol), std::invalid_argument);
  std::istringstream from_final("0 _ -> 1 _ R\n");
  CHECK_THROWS_AS(parse_machine_text(from_final), std::invalid_argument);
  std::istringstream no_arrow("1 _ 1 _ R\n");
  CHECK_THROWS_AS(parse_machine_text(no_arrow), std::invalid_argument);
}
