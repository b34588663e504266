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
#include <string>
#include <string_view>
#include <vector>

#include "diaglab/nat.hpp"

namespace diaglab {

// A finite word over {0,1}.  The empty word is a first-class value.
class BinaryWord {
 public:
  BinaryWord() = default;

  // Builds from a string of '0'/'1' characters; throws std::invalid_argument
  // on anything else.
  static BinaryWord from_bits(std::string_view bits);

  bool empty() const { return bits_.empty(); }
  std::size_t size() const { return bits_.size(); }

  // true for '1' at position i (0 = leftmost).
  bool bit(std::size_t i) const { return bits_[i] == '1'; }

  void push_back(bool one) { bits_.push_back(one ? '1' : '0'); }

  const std::string& bits() const { return bits_; }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::string bits_;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

// Canonical enumeration of all binary words,
//   0 -> e (empty), 1 -> 0, 2 -> 1, 3 -> 00, 4 -> 01, 5 -> 10, 6 -> 11, ...
// i.e. word n is n+1 written in binary with the leading 1 removed.  Both
// directions are total bijections.
BinaryWord index_to_word(const Nat& n);
Nat word_to_index(const BinaryWord& w);

// Parity of word_to_index(w) without materializing the index: the index is
// even iff w is empty or ends in '1'.
bool index_is_even(const BinaryWord& w);

// Cantor pairing, oriented so that pair(i, n) = (i+n)(i+n+1)/2 + n.
// Walks the diagonals (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
Nat pair_code(const Nat& left, const Nat& right);

struct PairParts {
  Nat left;
  Nat right;
};
PairParts unpair(const Nat& code);

// --- CNF formulas coded as binary words ------------------------------------

struct CnfLiteral {
  std::uint32_t variable = 1;  // 1-based; encode_cnf rejects 0
  bool negated = false;
  friend bool operator==(const CnfLiteral&, const CnfLiteral&) = default;
};

using CnfClause = std::vector<CnfLiteral>;

class CnfFormula {
 public:
  // The fallback produced whenever decoding yields no complete clause: the
  // single unit clause (x1).
  static CnfFormula default_formula();

  // Throws std::invalid_argument when clauses is empty or any clause is
  // empty.  Variable indices are not range-checked here; encode_cnf rejects
  // index 0 at encoding time.
  explicit CnfFormula(std::vector<CnfClause> clauses);

  const std::vector<CnfClause>& clauses() const { return clauses_; }

  // Largest variable index mentioned.
  std::uint32_t variable_count() const;

  // Evaluates under the assignment "variable v is true iff v <= |s| and
  // bit v-1 of s is 1"; variables beyond |s| are false.
  bool satisfied_by(const BinaryWord& assignment) const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  std::vector<CnfClause> clauses_;
};

// Bit grammar (see docs/FORMATS.md): a literal is one sign bit (1 = negated)
// followed by the variable index in unary (v ones, then a 0); the two-bit
// marker 00 in literal position ends the current clause; running out of input
// ends the formula; malformed or trailing fragments are dropped; if nothing
// forms a complete clause the default formula is returned.  Total on all
// words.
CnfFormula decode_cnf(const BinaryWord& w);

// Inverse section of decode_cnf: decode_cnf(encode_cnf(f)) == f for every
// formula without empty clauses.  Throws std::invalid_argument on a variable
// index of 0.
BinaryWord encode_cnf(const CnfFormula& f);

// DIMACS text interop ("p cnf <vars> <clauses>" header, 0-terminated clause
// lines, 'c' comment lines).
CnfFormula parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfFormula& f);

}  // namespace diaglab
