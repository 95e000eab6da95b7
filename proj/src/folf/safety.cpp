/*
Copyright 2026 The folf Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/


#include "folf/safety.hpp"

#include <algorithm>
#include <map>

#include "folf/grounder.hpp"

namespace folf {

namespace {

void walk(const Formula& f, bool antecedent, const std::set<std::string>& protect, SafetyReport& out) {
  switch (f.op()) {
    case Op::Pred:
    case Op::Equal:
      if (antecedent) return;
      for (const auto& t : f.args())
        if (t.is_var() && !protect.count(t.name)) out.unsafe_variables.insert(t.name);
      return;
    case Op::And:
    case Op::Or:
      walk(f.lhs(), antecedent, protect, out);
      walk(f.rhs(), antecedent, protect, out);
      return;
    case Op::Implies: {
      if (f.is_top()) return;
      auto g = rv(f.lhs());
      out.annotations.emplace_back(to_string(f.lhs()), g);
      walk(f.lhs(), true, protect, out);
      std::set<std::string> inner = protect;
      inner.insert(g.begin(), g.end());
      walk(f.rhs(), antecedent, inner, out);
      return;
    }
    case Op::Forall:
    case Op::Exists:
      walk(f.body(), antecedent, protect, out);
      return;
    default:
      return;
  }
}


Term rename_term(const Term& t, const std::map<std::string, std::string>& to) {
  return t.is_const() ? Term::constant(to.at(t.name)) : t;
}

Formula rename_constants(const Formula& f, const std::map<std::string, std::string>& to) {
  switch (f.op()) {
    case Op::Bottom:
      return f;
    case Op::Pred: {
      Terms args;
      for (const auto& t : f.args()) args.push_back(rename_term(t, to));
      return Formula::pred(f.symbol(), args);
    }
    case Op::Equal:
      return Formula::equal(rename_term(f.args()[0], to), rename_term(f.args()[1], to));
    case Op::And:
      return Formula::land(rename_constants(f.lhs(), to), rename_constants(f.rhs(), to));
    case Op::Or:
      return Formula::lor(rename_constants(f.lhs(), to), rename_constants(f.rhs(), to));
    case Op::Implies:
      return Formula::implies(rename_constants(f.lhs(), to), rename_constants(f.rhs(), to));
    case Op::Forall:
      return Formula::forall(f.symbol(), rename_constants(f.body(), to));
    case Op::Exists:
      return Formula::exists(f.symbol(), rename_constants(f.body(), to));
    default:
      throw Error(ErrorKind::NotFirstOrder, "reduction needs a first-order sentence");
  }
}

// Ground loops of g for every way of identifying its constants. Under U_F
// each element is named by a constant, so a model is, up to isomorphism, an
// Herbrand model of one such quotient; its loops are the ones that matter.
std::vector<AtomSet> quotient_ground_loops(const Formula& g, const Signature& sig) {
  std::vector<std::string> cs(sig.constants.begin(), sig.constants.end());
  if (cs.size() > 8) throw Error(ErrorKind::CapExceeded, "too many constants for the safety reduction");
  std::vector<AtomSet> out;
  std::set<std::string> seen;
  std::vector<std::size_t> block(cs.size(), 0);  // restricted growth string
  for (;;) {
    std::map<std::string, std::string> to;
    std::vector<std::string> universe;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      to[cs[k]] = cs[std::find(block.begin(), block.end(), block[k]) - block.begin()];
      if (to[cs[k]] == cs[k]) universe.push_back(cs[k]);
    }
    Formula ground = ground_expand(rename_constants(g, to), universe);
    for (auto& y : ground_loops(ground_dependencies(ground), ground_atoms(sig, universe)))
      if (seen.insert(to_string(y)).second) out.push_back(std::move(y));
    // next partition
    std::size_t k = cs.size();
    for (;;) {
      if (k <= 1) return out;
      --k;
      std::size_t top = *std::max_element(block.begin(), block.begin() + static_cast<long>(k));
      if (block[k] <= top) {
        ++block[k];
        std::fill(block.begin() + static_cast<long>(k) + 1, block.end(), 0);
        break;
      }
    }
  }
}

}  // namespace

std::set<std::string> rv(const Formula& f) {
  switch (f.op()) {
    case Op::Pred:
      return vars_of_terms(f.args());
    case Op::Equal:
      if (f.args()[0].is_var() && f.args()[1].is_var()) return {};
      return vars_of_terms(f.args());
    case Op::And: {
      auto a = rv(f.lhs()), b = rv(f.rhs());
      a.insert(b.begin(), b.end());
      return a;
    }
    case Op::Or: {
      auto a = rv(f.lhs()), b = rv(f.rhs());
      std::set<std::string> out;
      for (const auto& v : a)
        if (b.count(v)) out.insert(v);
      return out;
    }
    case Op::Forall:
    case Op::Exists: {
      auto a = rv(f.body());
      a.erase(f.symbol());
      return a;
    }
    default:
      return {};
  }
}

SafetyReport unsafe_vars(const Formula& f) {
  SafetyReport out;
  walk(is_rectified(f) ? f : rectify(f), false, {}, out);
  return out;
}

Formula u_f(const Formula& f, bool allow_empty) {
  Signature sig = signature_of(f);
  if (sig.constants.empty() && !allow_empty) throw Error(ErrorKind::EmptyUniverse, "U_F needs an object constant");
  std::vector<Formula> parts;
  for (const auto& [p, arity] : sig.predicates) {
    if (arity == 0) continue;
    std::vector<std::string> xs;
    Terms args;
    for (int i = 0; i < arity; ++i) {
      xs.push_back(arity == 1 ? "X" : "X" + std::to_string(i + 1));
      args.push_back(Term::var(xs.back()));
    }
    std::vector<Formula> each;
    for (const auto& x : xs) {
      std::vector<Formula> alts;
      for (const auto& c : sig.constants) alts.push_back(Formula::equal(Term::var(x), Term::constant(c)));
      each.push_back(Formula::disj(alts));
    }
    parts.push_back(Formula::forall(xs, Formula::implies(Formula::pred(p, args), Formula::conj(each))));
  }
  return Formula::conj(parts);
}

const char* to_string(ReductionPath p) { return p == ReductionPath::CompleteSet ? "complete-set" : "safety"; }

Reduction reduce(const Formula& f, int bound) {
  if (!is_sentence(f)) throw Error(ErrorKind::NotSentence, "reduction needs a sentence");
  Formula g = is_rectified(f) ? f : rectify(f);
  Formula h = is_sentence_normal_form(g) ? g : sentence_normal_form(g);
  Reduction out;

  auto report = complete_set(LoopSubject::of(h), bound);
  if (report.status == CompleteStatus::Complete) {
    std::vector<Formula> parts{g};
    for (const auto& y : report.loops) parts.push_back(flf(h, y));
    out.formula = Formula::conj(parts);
    out.parts = parts;
    out.loops = report.loops;
    return out;
  }

  auto safety = unsafe_vars(g);
  if (!safety.safe()) {
    std::string vars;
    for (const auto& v : safety.unsafe_variables) vars += (vars.empty() ? "" : ", ") + v;
    throw Error(ErrorKind::NotReducible, "not reducible under implemented conditions: no complete set of loops (" +
                                             report.reason + "); unsafe variables {" + vars + "}");
  }

  out.path = ReductionPath::Safety;
  out.loops = quotient_ground_loops(g, signature_of(g));
  std::vector<Formula> parts{g, u_f(g, true)};
  for (const auto& y : out.loops) parts.push_back(flf(g, y));
  out.formula = Formula::conj(parts);
  out.parts = parts;
  return out;
}

Reduction reduce(const Program& p, int bound) {
  Program q = p.kind() != RuleKind::Extended && !is_normal_form(p) ? program_normal_form(p) : p;
  auto report = complete_set(LoopSubject::of(q), bound);
  if (report.status != CompleteStatus::Complete) return reduce(fol_representation(p), bound);
  Reduction out;
  std::vector<Formula> parts{fol_representation(p)};
  for (const auto& y : report.loops) parts.push_back(flf(q, y));
  out.formula = Formula::conj(parts);
  out.parts = parts;
  out.loops = report.loops;
  return out;
}

}  // namespace folf
