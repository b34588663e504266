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

#include "diaglab/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "diaglab/errors.hpp"
#include "diaglab/kleene.hpp"
#include "diaglab/machine.hpp"
#include "diaglab/verify.hpp"

namespace diaglab::cli {

namespace {

// One above the largest integer a double represents exactly.
const Nat kJsonNumberLimit = Nat(1) << 53;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

void emit(const Json& doc, const OutputOptions& output) {
  write_text(output.out_path, doc.dump(2) + "\n");
}

const Verifier& verifier_or_throw(const std::string& name) {
  const Verifier* v = find_verifier(name);
  if (!v) throw std::runtime_error("unknown verifier: " + name);
  return *v;
}

const GrowthFamily& family_or_throw(const std::string& name) {
  const GrowthFamily* f = find_family(name);
  if (!f) throw std::runtime_error("unknown growth family: " + name);
  return *f;
}

Json summary_json(std::uint64_t pass, std::uint64_t fail) {
  return Json{{"pass", pass}, {"fail", fail}};
}

}  // namespace

Json nat_json(const Nat& v) {
  if (v < kJsonNumberLimit) return Json(to_u64(v));
  return Json(v.get_str());
}

Json word_json(const BinaryWord& w) {
  return Json{{"bits", w.bits()}, {"index", nat_json(word_to_index(w))}};
}

int cmd_enumerate(const EnumerateOptions& opt) {
  Json rows = Json::array();
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  for (std::uint64_t n = 0; n < opt.count; ++n) {
    Nat idx = nat_of(n);
    BinaryWord w = index_to_word(idx);
    PairParts parts = unpair(idx);
    TuringMachine machine = decode_machine(idx);
    Nat recode = encode_machine(machine);
    bool ok = word_to_index(w) == idx &&
              index_is_even(w) == (n % 2 == 0) &&
              pair_code(parts.left, parts.right) == idx &&
              decode_machine(recode) == machine;
    (ok ? pass : fail) += 1;
    rows.push_back(Json{{"index", n},
                        {"word", w.bits()},
                        {"even", n % 2 == 0},
                        {"pair", Json{{"left", nat_json(parts.left)},
                                      {"right", nat_json(parts.right)}}},
                        {"machine", Json{{"states", machine.state_count()},
                                         {"recode", nat_json(recode)}}},
                        {"ok", ok}});
  }
  Json doc{{"command", "enumerate"},
           {"config", Json{{"count", opt.count}}},
           {"rows", rows},
           {"summary", summary_json(pass, fail)}};
  emit(doc, opt.output);
  return fail == 0 ? 0 : 1;
}

namespace {

Json step_json(const StepRecord& rec, const DivergenceVerdict& verdict) {
  bool found = verdict.counterexample_search.status == SearchStatus::Found;
  Json search{{"status", found ? "found" : "exhausted"},
              {"probes", verdict.counterexample_search.probes}};
  if (found) search["witness"] = nat_json(verdict.counterexample_search.witness);
  return Json{{"step", rec.step_index},
              {"source", nat_json(rec.source_index)},
              {"position", rec.position},
              {"expected", nat_json(rec.expected_value)},
              {"swapped", rec.swapped},
              {"scanned_position", rec.scanned_position},
              {"provisional", rec.provisional_partial},
              {"divergence", Json{{"accepted", verdict.accepted_at_expected},
                                  {"search", search},
                                  {"diverges", verdict.diverges},
                                  {"definitive", verdict.definitive}}}};
}

std::string diagonal_csv(const std::vector<StepRecord>& steps,
                         const std::vector<DivergenceVerdict>& verdicts) {
  std::ostringstream csv;
  csv << "step,source,position,expected,swapped,scanned_position,"
         "provisional,accepted,search_status,witness,probes,diverges,"
         "definitive\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const StepRecord& r = steps[i];
    const DivergenceVerdict& d = verdicts[i];
    bool found = d.counterexample_search.status == SearchStatus::Found;
    csv << r.step_index << ',' << r.source_index.get_str() << ','
        << r.position << ',' << r.expected_value.get_str() << ','
        << (r.swapped ? 1 : 0) << ',' << r.scanned_position << ','
        << (r.provisional_partial ? 1 : 0) << ','
        << (d.accepted_at_expected ? 1 : 0) << ','
        << (found ? "found" : "exhausted") << ','
        << (found ? d.counterexample_search.witness.get_str() : "") << ','
        << d.counterexample_search.probes << ',' << (d.diverges ? 1 : 0)
        << ',' << (d.definitive ? 1 : 0) << '\n';
  }
  return csv.str();
}

}  // namespace

int cmd_diagonal(const DiagonalOptions& opt) {
  const Verifier& v = verifier_or_throw(opt.verifier);
  const GrowthFamily& family = family_or_throw(opt.family);
  std::vector<Nat> sources = parse_stream_spec(opt.stream);

  Json doc{{"command", "diagonal"},
           {"config",
            Json{{"stream", opt.stream},
                 {"verifier", opt.verifier},
                 {"family", opt.family},
                 {"meta_budget", opt.budgets.meta_budget},
                 {"scan_ceiling", opt.budgets.scan_ceiling},
                 {"scan_step_cap", opt.budgets.scan_step_cap},
                 {"step_cap", opt.budgets.step_cap},
                 {"check_budget", opt.check_budget},
                 {"equivalence_samples", opt.equivalence_samples},
                 {"seed", opt.seed}}}};

  DiagonalState state;
  int error_code = 0;
  Json error;
  try {
    for (const Nat& e : sources) {
      diagonal_step(state, e, v, opt.budgets, family);
    }
  } catch (const TotalityViolationError& ex) {
    error = Json{{"type", "totality_violation"},
                 {"step", ex.step_index},
                 {"source", nat_json(ex.source_index)},
                 {"input", ex.input_value},
                 {"message", ex.what()}};
    error_code = 2;
  } catch (const ScanCeilingError& ex) {
    error = Json{{"type", "scan_ceiling"},
                 {"step", ex.step_index},
                 {"ceiling", ex.ceiling},
                 {"message", ex.what()}};
    error_code = 3;
  }

  EvalContext ctx{&family, ClockLimits{opt.budgets.step_cap}};
  std::vector<DivergenceVerdict> verdicts;
  verdicts.reserve(state.steps.size());
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  Json steps = Json::array();
  for (const StepRecord& rec : state.steps) {
    verdicts.push_back(
        check_divergence(v, state.phi, rec, opt.check_budget, ctx));
    (verdicts.back().diverges ? pass : fail) += 1;
    steps.push_back(step_json(rec, verdicts.back()));
  }

  Json prefix = Json::array();
  for (const auto& [position, code] : state.phi.moved_entries()) {
    prefix.push_back(Json::array({position, code}));
  }

  bool equivalence_ok =
      equivalence_check(v, state.phi, opt.equivalence_samples, opt.seed, ctx);
  if (!equivalence_ok) ++fail;

  doc["steps"] = steps;
  doc["phi_prefix"] = prefix;
  doc["equivalence_ok"] = equivalence_ok;
  if (error_code != 0) doc["error"] = error;
  doc["summary"] = summary_json(pass, fail);
  emit(doc, opt.output);
  if (!opt.output.csv_path.empty()) {
    write_text(opt.output.csv_path, diagonal_csv(state.steps, verdicts));
  }
  if (error_code != 0) return error_code;
  return fail == 0 ? 0 : 1;
}

int cmd_verify_axioms(const VerifyAxiomsOptions& opt) {
  const Verifier& v = verifier_or_throw(opt.verifier);
  constexpr std::size_t kMaxListed = 32;
  Json violations = Json::array();
  std::uint64_t checked = 0;
  std::uint64_t violated = 0;
  auto record = [&](const char* law, const Nat& x, const Nat& s) {
    ++violated;
    if (violations.size() < kMaxListed) {
      violations.push_back(
          Json{{"law", law}, {"x", nat_json(x)}, {"s", nat_json(s)}});
    }
  };

  const BinaryWord empty;
  ++checked;
  if (v.check(empty, empty)) record("rejects-empty-pair", 0, 0);
  for (std::uint64_t s = 1; s <= opt.smax; ++s) {
    ++checked;
    if (!v.check(empty, index_to_word(nat_of(s)))) {
      record("accepts-anything-on-empty-input", 0, nat_of(s));
    }
  }
  for (std::uint64_t x = 0; x <= opt.xmax; ++x) {
    ++checked;
    if (v.check(index_to_word(nat_of(x)), empty)) {
      record("rejects-empty-certificate", nat_of(x), 0);
    }
  }
  if (v.globally_rich()) {
    for (std::uint64_t x = 1; x <= opt.xmax; ++x) {
      BinaryWord input = index_to_word(nat_of(x));
      bool has_accept = false;
      bool has_reject = false;
      for (std::uint64_t s = 1; s <= opt.smax && !(has_accept && has_reject);
           ++s) {
        (v.check(input, index_to_word(nat_of(s))) ? has_accept
                                                  : has_reject) = true;
      }
      checked += 2;
      if (!has_accept) record("rich-accepting-certificate", nat_of(x), 0);
      if (!has_reject) record("rich-rejecting-certificate", nat_of(x), 0);
    }
  }

  Json doc{{"command", "verify-axioms"},
           {"config", Json{{"verifier", opt.verifier},
                           {"xmax", opt.xmax},
                           {"smax", opt.smax},
                           {"globally_rich", v.globally_rich()}}},
           {"violations", violations},
           {"summary", Json{{"checked", checked}, {"violations", violated}}}};
  emit(doc, opt.output);
  return violated == 0 ? 0 : 1;
}

namespace {

Json clause_json(const CnfClause& clause) {
  Json arr = Json::array();
  for (const CnfLiteral& lit : clause) {
    arr.push_back((lit.negated ? "-x" : "x") + std::to_string(lit.variable));
  }
  return arr;
}

}  // namespace

int cmd_sat(const SatOptions& opt) {
  CnfFormula formula = CnfFormula::default_formula();
  std::string source;
  if (!opt.dimacs_path.empty()) {
    std::ifstream in(opt.dimacs_path);
    if (!in) {
      throw std::runtime_error("cannot open DIMACS file: " + opt.dimacs_path);
    }
    formula = parse_dimacs(in);
    source = "dimacs";
  } else {
    formula = decode_cnf(BinaryWord::from_bits(opt.formula_bits));
    source = "bits";
  }
  BinaryWord bits = encode_cnf(formula);

  Json clauses = Json::array();
  for (const CnfClause& c : formula.clauses()) clauses.push_back(clause_json(c));

  std::uint32_t vars = formula.variable_count();
  Json result;
  int code = 0;
  try {
    if (vars > opt.max_variables) {
      throw InfeasibleBoundError("formula has " + std::to_string(vars) +
                                 " variables; ceiling is " +
                                 std::to_string(opt.max_variables));
    }
    bool satisfiable = false;
    BinaryWord assignment;
    for (std::uint64_t a = 0; a < (1ull << vars) && !satisfiable; ++a) {
      BinaryWord s;
      for (std::uint32_t i = 0; i < vars; ++i) s.push_back((a >> i) & 1);
      if (formula.satisfied_by(s)) {
        satisfiable = true;
        assignment = s;
      }
    }
    result = Json{{"satisfiable", satisfiable}};
    if (satisfiable) result["assignment"] = word_json(assignment);
  } catch (const InfeasibleBoundError& ex) {
    result = Json{{"error", "infeasible"}, {"message", ex.what()}};
    code = 4;
  }

  std::ostringstream dimacs;
  write_dimacs(dimacs, formula);
  Json doc{{"command", "sat"},
           {"config", Json{{"source", source},
                           {"max_variables", opt.max_variables}}},
           {"formula", Json{{"bits", bits.bits()},
                            {"index", nat_json(word_to_index(bits))},
                            {"variables", vars},
                            {"clauses", clauses},
                            {"dimacs", dimacs.str()}}},
           {"result", result}};
  emit(doc, opt.output);
  return code;
}

namespace {

struct HistoryAudit {
  Json doc;
  bool consistent = false;
  HistoryResult hist;
};

HistoryAudit history_audit(const Nat& e, const Nat& x,
                           std::uint64_t history_steps) {
  BinaryWord input = index_to_word(x);
  RunOutcome truth = run(decode_machine(e), input, history_steps);
  HistoryAudit out;
  out.hist = encode_history(e, input, history_steps);

  out.consistent = out.hist.halted == (truth.status == RunStatus::Halted);
  out.doc = Json{{"halted", out.hist.halted}, {"steps", out.hist.steps}};
  if (out.hist.halted) {
    bool t_accepts = kleene_T(e, x, out.hist.code);
    BinaryWord extracted = kleene_U(out.hist.code);
    out.consistent = out.consistent && t_accepts &&
                     extracted == truth.output && out.hist.steps == truth.steps;
    out.doc["code"] = nat_json(out.hist.code);
    out.doc["t_accepts"] = t_accepts;
    out.doc["output"] = word_json(extracted);
  }
  out.doc["consistent"] = out.consistent;
  return out;
}

}  // namespace

int cmd_kleene(const KleeneOptions& opt) {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;

  HistoryAudit history = history_audit(opt.e, opt.x, opt.history_steps);
  (history.consistent ? pass : fail) += 1;

  Json doc{{"command", "kleene-check"},
           {"config", Json{{"e", nat_json(opt.e)},
                           {"x", nat_json(opt.x)},
                           {"history_steps", opt.history_steps},
                           {"mu_budget", opt.mu_budget},
                           {"sweep", opt.sweep}}},
           {"history", history.doc}};

  if (opt.mu_budget > 0) {
    KleeneResult mu = phi_eval(opt.e, opt.x, nat_of(opt.mu_budget));
    bool found = mu.status == KleeneStatus::Found;
    Json mu_doc{{"status", found ? "found" : "exhausted"}};
    bool ok;
    if (found) {
      mu_doc["index"] = nat_json(mu.index);
      mu_doc["output"] = word_json(mu.output);
      // The history code is the unique accepted point, so a found mu-point
      // must be exactly it.
      ok = history.hist.halted && mu.index == history.hist.code;
    } else {
      ok = !history.hist.halted || history.hist.code > nat_of(opt.mu_budget);
    }
    mu_doc["consistent"] = ok;
    (ok ? pass : fail) += 1;
    doc["mu"] = mu_doc;
  }

  if (opt.sweep > 0) {
    std::uint64_t halted = 0;
    std::uint64_t sweep_ok = 0;
    for (std::uint64_t e = 0; e < opt.sweep; ++e) {
      HistoryAudit one = history_audit(nat_of(e), opt.x, opt.history_steps);
      if (one.hist.halted) ++halted;
      if (one.consistent) ++sweep_ok;
    }
    bool all_ok = sweep_ok == opt.sweep;
    (all_ok ? pass : fail) += 1;
    doc["sweep"] = Json{{"machines", opt.sweep},
                        {"halted", halted},
                        {"consistent", sweep_ok}};
  }

  doc["summary"] = summary_json(pass, fail);
  emit(doc, opt.output);
  return fail == 0 ? 0 : 1;
}

int cmd_unsound(const UnsoundOptions& opt) {
  BinaryWord input = index_to_word(opt.x);
  RunOutcome truth = run(decode_machine(opt.e), input, opt.history_steps);
  Json true_run{{"halted", truth.status == RunStatus::Halted},
                {"steps", truth.steps}};
  if (truth.status == RunStatus::Halted) {
    true_run["output"] = word_json(truth.output);
  }

  KleeneResult mu = phi_eval(opt.e, opt.x, opt.budget);
  KleeneResult q_false = unsound_total(
      opt.e, opt.x, [](const Nat&) { return false; }, opt.budget);
  KleeneResult escaped = unsound_total(
      opt.e, opt.x, [&](const Nat& y) { return y == opt.q_true_at; },
      opt.budget);

  auto result_json = [](const KleeneResult& r) {
    Json j{{"status",
            r.status == KleeneStatus::Found ? "found" : "exhausted"}};
    if (r.status == KleeneStatus::Found) {
      j["index"] = nat_json(r.index);
      j["output"] = word_json(r.output);
      j["via_escape"] = r.via_escape;
    }
    return j;
  };

  bool q_false_matches_mu = q_false.status == mu.status &&
                            (mu.status != KleeneStatus::Found ||
                             (q_false.index == mu.index &&
                              q_false.output == mu.output));
  bool escape_fired =
      escaped.status == KleeneStatus::Found && escaped.via_escape;
  bool output_wrong = truth.status == RunStatus::Halted &&
                      escape_fired && !(escaped.output == truth.output);

  std::uint64_t fail = 0;
  if (!q_false_matches_mu) ++fail;
  if (!escape_fired) ++fail;
  if (!output_wrong) ++fail;

  Json doc{{"command", "unsound-demo"},
           {"config", Json{{"e", nat_json(opt.e)},
                           {"x", nat_json(opt.x)},
                           {"q_true_at", nat_json(opt.q_true_at)},
                           {"budget", nat_json(opt.budget)},
                           {"history_steps", opt.history_steps}}},
           {"true_run", true_run},
           {"mu_search", result_json(mu)},
           {"q_false_search", result_json(q_false)},
           {"escaped_search", result_json(escaped)},
           {"q_false_matches_mu", q_false_matches_mu},
           {"escape_fired", escape_fired},
           {"soundness_broken", output_wrong},
           {"summary", summary_json(3 - fail, fail)}};
  emit(doc, opt.output);
  return fail == 0 ? 0 : 1;
}

}  // namespace diaglab::cli
