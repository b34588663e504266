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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "diaglab/diagonal.hpp"
#include "diaglab/errors.hpp"

using namespace diaglab;

namespace {

TuringMachine right_mover() {
  TuringMachine m(1);
  m.set_transition(1, Symbol::Blank, {1, Symbol::Blank, Move::Right});
  m.set_transition(1, Symbol::Zero, {1, Symbol::Zero, Move::Right});
  m.set_transition(1, Symbol::One, {1, Symbol::One, Move::Right});
  return m;
}

TuringMachine bouncer() {
  TuringMachine m(2);
  for (Symbol s : {Symbol::Blank, Symbol::Zero, Symbol::One}) {
    m.set_transition(1, s, {2, Symbol::One, Move::Right});
    m.set_transition(2, s, {1, Symbol::One, Move::Left});
  }
  return m;
}

std::vector<Nat> constant_stream(std::uint64_t count) {
  std::vector<Nat> sources;
  for (std::uint64_t j = 0; j < count; ++j) {
    sources.push_back(
        encode_machine(constant_machine(index_to_word(nat_of(j))).machine));
  }
  return sources;
}

}  // namespace

TEST_CASE("default budgets are the documented ones") {
  DiagonalBudgets b;
  CHECK(b.meta_budget == 4096);
  CHECK(b.scan_ceiling == 10'000'000);
  CHECK(b.scan_step_cap == 1024);
  CHECK(b.step_cap == 65536);
}

TEST_CASE("stream specs parse builtins, files, and reject junk") {
  std::vector<Nat> builtin = parse_stream_spec("builtin:constants:3");
  REQUIRE(builtin.size() == 3);
  CHECK(builtin == constant_stream(3));
  CHECK(builtin[0] == 1448);
  CHECK(builtin[1] == Nat("4023061466141"));
  CHECK(builtin[2] == Nat("4023078082589"));
  CHECK(parse_stream_spec("builtin:constants:0").empty());

  auto path = std::filesystem::temp_directory_path() / "diaglab_stream.txt";
  {
    std::ofstream out(path);
    out << "5 007\n  42\n";
  }
  std::vector<Nat> from_file = parse_stream_spec(path.string());
  std::filesystem::remove(path);
  REQUIRE(from_file.size() == 3);
  CHECK(from_file[0] == 5);
  CHECK(from_file[1] == 7);  // tokens are plain base-10, never octal
  CHECK(from_file[2] == 42);

  CHECK_THROWS_AS(parse_stream_spec("builtin:nope:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_stream_spec("builtin:constants:x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_stream_spec("/no/such/file/anywhere"),
                  std::runtime_error);
}

TEST_CASE("the three-constant run hits its frozen trace") {
  std::vector<Nat> sources = constant_stream(3);
  DiagonalState state = run_diagonalization(sources, parity_verifier());

  REQUIRE(state.steps.size() == 3);
  const StepRecord& r0 = state.steps[0];
  CHECK(r0.step_index == 0);
  CHECK(r0.source_index == 1448);
  CHECK(r0.position == 0);
  CHECK(r0.expected_value == 0);
  CHECK(r0.swapped);
  CHECK(r0.scanned_position == 4560);
  CHECK_FALSE(r0.provisional_partial);

  const StepRecord& r1 = state.steps[1];
  CHECK(r1.position == 4561);
  CHECK(r1.expected_value == 1);
  CHECK(r1.swapped);
  CHECK(r1.scanned_position == 13695);

  const StepRecord& r2 = state.steps[2];
  CHECK(r2.position == 13696);
  CHECK(r2.expected_value == 2);
  CHECK(r2.swapped);
  CHECK(r2.scanned_position == 2379471);

  CHECK(state.next_position == 2379472);

  // The permutation is exactly the three transpositions.
  CHECK(state.phi.apply(0) == 4560);
  CHECK(state.phi.apply(4560) == 0);
  CHECK(state.phi.apply(4561) == 13695);
  CHECK(state.phi.apply(13695) == 4561);
  CHECK(state.phi.apply(13696) == 2379471);
  CHECK(state.phi.apply(2379471) == 13696);
  CHECK(state.phi.apply(99) == 99);
  CHECK(state.phi.apply_inverse(4560) == 0);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> expected_moves{
      {0, 4560},       {4560, 0},       {4561, 13695},
      {13695, 4561},   {13696, 2379471}, {2379471, 13696}};
  CHECK(state.phi.moved_entries() == expected_moves);

  // Deterministic: a rerun reproduces the permutation and records.
  DiagonalState again = run_diagonalization(sources, parity_verifier());
  CHECK(again.phi == state.phi);
  CHECK(again.next_position == state.next_position);
}

TEST_CASE("every recorded step diverges definitively under the final phi") {
  std::vector<Nat> sources = constant_stream(3);
  DiagonalState state = run_diagonalization(sources, parity_verifier());
  const std::uint64_t expected_witness[] = {1, 0, 0};
  for (std::size_t i = 0; i < state.steps.size(); ++i) {
    DivergenceVerdict verdict = check_divergence(
        parity_verifier(), state.phi, state.steps[i], 64);
    CHECK(verdict.accepted_at_expected);
    CHECK(verdict.diverges);
    CHECK(verdict.definitive);
    REQUIRE(verdict.counterexample_search.status == SearchStatus::Found);
    CHECK(verdict.counterexample_search.witness ==
          nat_of(expected_witness[i]));
    CHECK(verdict.counterexample_search.witness !=
          state.steps[i].expected_value);
  }
}

TEST_CASE("freezing is monotone: later steps never touch earlier positions") {
  std::vector<Nat> sources = constant_stream(4);
  DiagonalState state = run_diagonalization(sources, parity_verifier());
  std::uint64_t frontier = 0;
  for (const StepRecord& r : state.steps) {
    CHECK(r.position >= frontier);
    CHECK(r.scanned_position >= r.position);
    frontier = std::max(r.position, r.scanned_position) + 1;
  }
  CHECK(state.next_position == frontier);
}

TEST_CASE("an already-accepting incumbent stays put") {
  DiagonalState state;
  state.next_position = 4560;  // the machine the first swap normally fetches
  StepRecord r = diagonal_step(state, constant_stream(1)[0],
                               parity_verifier());
  CHECK_FALSE(r.swapped);
  CHECK(r.position == 4560);
  CHECK(r.scanned_position == 4560);
  CHECK(r.expected_value == 0);
  CHECK_FALSE(r.provisional_partial);
  CHECK(state.phi.moved_entries().empty());
  CHECK(state.next_position == 4561);
}

TEST_CASE("acceptance off a capped run is flagged provisional") {
  // Park a never-halting bouncer (with a generous clock) at the probed
  // position, then make the overall step cap tiny: its cut-off output "11"
  // is accepted, but only provisionally.
  Nat code = pair_code(encode_machine(bouncer()), 5);
  DiagonalState state;
  state.next_position = to_u64(code);
  DiagonalBudgets budgets;
  budgets.step_cap = 2;
  StepRecord r = diagonal_step(state, constant_stream(1)[0],
                               parity_verifier(), budgets);
  CHECK_FALSE(r.swapped);
  CHECK(r.provisional_partial);
  CHECK(r.expected_value == 0);
  CHECK(r.scanned_position == r.position);
  CHECK(state.phi.moved_entries().empty());

  // With the default cap the same acceptance is exact: the clock cuts the
  // run at g_5(0) - 1 = 7 cycles, inside the cap.
  DiagonalState wide;
  wide.next_position = to_u64(code);
  StepRecord exact = diagonal_step(wide, constant_stream(1)[0],
                                   parity_verifier());
  CHECK_FALSE(exact.swapped);
  CHECK_FALSE(exact.provisional_partial);
}

TEST_CASE("a non-total stream machine raises the totality violation") {
  DiagonalState state;
  std::vector<Nat> stream{encode_machine(right_mover())};
  bool threw = false;
  try {
    diagonal_step(state, stream[0], parity_verifier());
  } catch (const TotalityViolationError& e) {
    threw = true;
    CHECK(e.step_index == 0);
    CHECK(e.source_index == stream[0]);
    CHECK(e.input_value == 0);
  }
  CHECK(threw);
  CHECK(state.steps.empty());
}

TEST_CASE("an exhausted swap scan raises the scan ceiling error") {
  DiagonalBudgets budgets;
  budgets.scan_ceiling = 100;  // the first swap normally lands at 4560
  DiagonalState state;
  bool threw = false;
  try {
    diagonal_step(state, constant_stream(1)[0], parity_verifier(), budgets);
  } catch (const ScanCeilingError& e) {
    threw = true;
    CHECK(e.step_index == 0);
    CHECK(e.ceiling == 100);
  }
  CHECK(threw);
}

TEST_CASE("equivalence audit passes real permutations, fails forged ones") {
  std::vector<Nat> sources = constant_stream(2);
  DiagonalState state = run_diagonalization(sources, parity_verifier());
  CHECK(equivalence_check(parity_verifier(), state.phi, 64, 0));
  CHECK(equivalence_check(parity_verifier(), state.phi, 64, 12345));
  CHECK(equivalence_check(parity_verifier(), Representation::identity(), 64,
                          7));

  // A prefix/inverse pair that is not actually inverse must be caught.
  Representation forged = Representation::from_parts({1, 0, 2}, {0, 1, 2});
  CHECK_FALSE(equivalence_check(parity_verifier(), forged, 64, 7));
}
