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

#include "diaglab/words.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace diaglab {

BinaryWord BinaryWord::from_bits(std::string_view bits) {
  BinaryWord w;
  w.bits_.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("binary word may contain only 0/1, got '" +
                                  std::string(1, c) + "'");
    }
    w.bits_.push_back(c);
  }
  return w;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) {
  return os << (w.empty() ? std::string("(empty)") : w.bits());
}

BinaryWord index_to_word(const Nat& n) {
  Nat v = n + 1;
  // v >= 1; its binary digits below the most significant one are the word.
  std::size_t top = mpz_sizeinbase(v.get_mpz_t(), 2);  // position of MSB + 1
  BinaryWord w;
  for (std::size_t i = top - 1; i-- > 0;) {
    w.push_back(mpz_tstbit(v.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) != 0);
  }
  return w;
}

Nat word_to_index(const BinaryWord& w) {
  // Value of 1<bits> in binary, minus one.  Built 64 bits at a time.
  Nat v = 1;
  std::uint64_t chunk = 0;
  unsigned filled = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    chunk = (chunk << 1) | (w.bit(i) ? 1u : 0u);
    if (++filled == 64) {
      v <<= 64;
      v += Nat(static_cast<unsigned long>(chunk));
      chunk = 0;
      filled = 0;
    }
  }
  if (filled > 0) {
    v <<= filled;
    v += Nat(static_cast<unsigned long>(chunk));
  }
  return v - 1;
}

bool index_is_even(const BinaryWord& w) {
  // index = (1w)_2 - 1, so index is even iff (1w)_2 is odd, i.e. iff the last
  // digit of 1w is 1: the empty word or a word ending in '1'.
  return w.empty() || w.bit(w.size() - 1);
}

Nat pair_code(const Nat& left, const Nat& right) {
  Nat t = left + right;
  return t * (t + 1) / 2 + right;
}

PairParts unpair(const Nat& code) {
  // t = floor((sqrt(8c+1)-1)/2) is the diagonal index; exact in mpz.
  Nat s;
  Nat arg = 8 * code + 1;
  mpz_sqrt(s.get_mpz_t(), arg.get_mpz_t());
  Nat t = (s - 1) / 2;
  Nat right = code - t * (t + 1) / 2;
  return PairParts{t - right, right};
}

// --- CNF -------------------------------------------------------------------

CnfFormula CnfFormula::default_formula() {
  return CnfFormula({{CnfLiteral{1, false}}});
}

CnfFormula::CnfFormula(std::vector<CnfClause> clauses)
    : clauses_(std::move(clauses)) {
  if (clauses_.empty()) {
    throw std::invalid_argument("formula needs at least one clause");
  }
  for (const CnfClause& c : clauses_) {
    if (c.empty()) {
      throw std::invalid_argument("clauses must be nonempty");
    }
  }
}

std::uint32_t CnfFormula::variable_count() const {
  std::uint32_t hi = 0;
  for (const CnfClause& c : clauses_) {
    for (const CnfLiteral& lit : c) hi = std::max(hi, lit.variable);
  }
  return hi;
}

bool CnfFormula::satisfied_by(const BinaryWord& assignment) const {
  for (const CnfClause& c : clauses_) {
    bool clause_true = false;
    for (const CnfLiteral& lit : c) {
      bool value =
          lit.variable >= 1 && lit.variable <= assignment.size() &&
          assignment.bit(lit.variable - 1);
      if (value != lit.negated) {
        clause_true = true;
        break;
      }
    }
    if (!clause_true) return false;
  }
  return true;
}

CnfFormula decode_cnf(const BinaryWord& w) {
  std::vector<CnfClause> clauses;
  CnfClause current;
  std::size_t pos = 0;
  while (pos < w.size()) {
    bool sign = w.bit(pos++);
    // Unary variable index: count ones up to the 0 terminator.  Hitting the
    // end of input mid-token makes the fragment malformed; it is dropped.
    std::uint32_t v = 0;
    bool terminated = false;
    while (pos < w.size()) {
      if (w.bit(pos++)) {
        ++v;
      } else {
        terminated = true;
        break;
      }
    }
    if (!terminated) break;  // trailing fragment
    if (v == 0) {
      if (!sign) {
        // The 00 marker: close the clause (empty ones are dropped).
        if (!current.empty()) {
          clauses.push_back(std::move(current));
          current.clear();
        }
      }
      // "10" would be a variable index of 0: malformed literal, dropped.
      continue;
    }
    current.push_back(CnfLiteral{v, sign});
  }
  if (!current.empty()) clauses.push_back(std::move(current));
  if (clauses.empty()) return CnfFormula::default_formula();
  return CnfFormula(std::move(clauses));
}

BinaryWord encode_cnf(const CnfFormula& f) {
  BinaryWord w;
  bool first = true;
  for (const CnfClause& c : f.clauses()) {
    if (!first) {
      w.push_back(false);  // clause separator 00
      w.push_back(false);
    }
    first = false;
    for (const CnfLiteral& lit : c) {
      if (lit.variable == 0) {
        throw std::invalid_argument("variable index 0 is not encodable");
      }
      w.push_back(lit.negated);
      for (std::uint32_t i = 0; i < lit.variable; ++i) w.push_back(true);
      w.push_back(false);
    }
  }
  return w;
}

CnfFormula parse_dimacs(std::istream& in) {
  std::vector<CnfClause> clauses;
  CnfClause current;
  bool saw_header = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      saw_header = true;  // counts in the header are advisory here
      continue;
    }
    std::istringstream ls(line);
    long v;
    while (ls >> v) {
      if (v == 0) {
        if (current.empty()) {
          throw std::invalid_argument("empty clause in DIMACS input");
        }
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        long a = v < 0 ? -v : v;
        current.push_back(
            CnfLiteral{static_cast<std::uint32_t>(a), v < 0});
      }
    }
  }
  if (!saw_header) {
    throw std::invalid_argument("missing 'p cnf' header in DIMACS input");
  }
  if (!current.empty()) clauses.push_back(std::move(current));
  return CnfFormula(std::move(clauses));
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.variable_count() << ' ' << f.clauses().size() << '\n';
  for (const CnfClause& c : f.clauses()) {
    for (const CnfLiteral& lit : c) {
      out << (lit.negated ? "-" : "") << lit.variable << ' ';
    }
    out << "0\n";
  }
}

}  // namespace diaglab
