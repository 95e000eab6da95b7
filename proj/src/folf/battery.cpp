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


#include "folf/battery.hpp"

#include "folf/grounder.hpp"
#include "folf/loops.hpp"
#include "folf/sm_transform.hpp"
#include "folf/stable.hpp"

namespace folf {

namespace {

std::string witness_name(const std::string& p) { return "__s_" + p; }

// NFES of f for a set Y whose atoms of predicate p range over a set S_p:
// p(t) & t differs from every member becomes a predicate variable holding
// p minus S_p.
Formula nfes_indexed(const Formula& f, const std::set<std::string>& preds) {
  switch (f.op()) {
    case Op::Pred:
      return preds.count(f.symbol()) ? Formula::pred_var(witness_name(f.symbol()), f.args()) : f;
    case Op::Equal:
    case Op::Bottom:
      return f;
    case Op::And:
      return Formula::land(nfes_indexed(f.lhs(), preds), nfes_indexed(f.rhs(), preds));
    case Op::Or:
      return Formula::lor(nfes_indexed(f.lhs(), preds), nfes_indexed(f.rhs(), preds));
    case Op::Implies:
      if (f.is_top()) return f;
      return Formula::land(Formula::implies(nfes_indexed(f.lhs(), preds), nfes_indexed(f.rhs(), preds)), f);
    case Op::Forall:
      return Formula::forall(f.symbol(), nfes_indexed(f.body(), preds));
    case Op::Exists:
      return Formula::exists(f.symbol(), nfes_indexed(f.body(), preds));
    default:
      throw Error(ErrorKind::NotFirstOrder, "loop formula battery needs a first-order sentence");
  }
}

bool size_indexed(const Formula& f, const Signature& sig, const Structure& s) {
  std::vector<std::string> preds;
  std::vector<std::uint64_t> masks;
  std::size_t k = 0;
  for (const auto& [p, _] : sig.predicates) {
    preds.push_back(p);
    masks.push_back(s.masks[k++]);
  }
  Formula g = rectify(f);
  for (std::uint64_t q = 1; q < (1ull << preds.size()); ++q) {
    std::set<std::string> chosen;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < preds.size(); ++i)
      if (q >> i & 1) {
        chosen.insert(preds[i]);
        idx.push_back(i);
      }
    // an empty extension leaves no way to satisfy /\Y
    bool vacuous = false;
    for (auto i : idx)
      if (!masks[i]) vacuous = true;
    if (vacuous) continue;
    Evaluator ev(nfes_indexed(g, chosen), sig);
    std::vector<std::uint64_t> sub(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) sub[j] = masks[idx[j]];
    while (true) {
      std::map<std::string, std::uint64_t> pv;
      for (std::size_t j = 0; j < idx.size(); ++j) pv[witness_name(preds[idx[j]])] = masks[idx[j]] & ~sub[j];
      if (ev.eval(s, {}, pv)) return false;
      // next combination of nonempty submasks
      std::size_t j = 0;
      for (; j < idx.size(); ++j) {
        sub[j] = (sub[j] - 1) & masks[idx[j]];
        if (sub[j]) break;
        sub[j] = masks[idx[j]];
      }
      if (j == idx.size()) break;
    }
  }
  return true;
}

bool all_hold(const std::vector<AtomSet>& sets, const Formula& f, const Signature& sig, const Structure& s) {
  for (const auto& y : sets)
    if (!Evaluator(flf(f, y), sig).eval(s)) return false;
  return true;
}

std::vector<AtomSet> bounded_sets(const Signature& sig, int n) {
  LoopSubject everything;
  everything.signature = sig;
  int max_atoms = 0, max_arity = 0;
  std::map<std::string, int> bound;
  for (const auto& [p, a] : sig.predicates) {
    bound[p] = static_cast<int>(tuple_count(n, a));
    max_atoms += bound[p];
    max_arity = std::max(max_arity, a);
  }
  for (const auto& [p, a] : sig.predicates)
    for (const auto& [q, b] : sig.predicates) {
      Terms x, y;
      for (int i = 0; i < a; ++i) x.push_back(Term::var("A" + std::to_string(i)));
      for (int i = 0; i < b; ++i) y.push_back(Term::var("B" + std::to_string(i)));
      everything.pairs.push_back({Formula::pred(p, x), Formula::pred(q, y)});
    }
  auto e = enumerate_loops(everything, max_atoms, max_atoms * max_arity, 200000);
  if (e.truncated) throw Error(ErrorKind::CapExceeded, "too many atom sets for the exhaustive battery");
  std::vector<AtomSet> out;
  for (const auto& y : e.loops) {
    std::map<std::string, int> count;
    bool ok = true;
    for (const auto& a : y)
      if (++count[a.symbol()] > bound[a.symbol()]) ok = false;
    if (ok) out.push_back(y);
  }
  return out;
}

}  // namespace

bool check_flf_battery(const Formula& f, const Interpretation& i, BatteryMode mode) {
  if (!is_sentence(f)) throw Error(ErrorKind::NotSentence, "loop formula battery needs a sentence");
  Signature sig = joint_signature(f);
  for (const auto& [c, _] : i.constants) sig.constants.insert(c);
  Structure s = to_structure(i, sig);
  switch (mode) {
    case BatteryMode::SizeIndexed:
      return size_indexed(f, sig, s);
    case BatteryMode::AllSets:
      return all_hold(bounded_sets(sig, i.size), f, sig, s);
    case BatteryMode::Loops: {
      LoopSubject subject = LoopSubject::of(f);
      auto report = complete_set(subject, 6);
      if (report.status == CompleteStatus::Complete) return all_hold(report.loops, f, sig, s);
      int atoms = 0;
      for (const auto& [p, a] : sig.predicates) {
        if (a > 1) throw Error(ErrorKind::Kind, "loops battery needs a complete set or a unary signature");
        atoms += static_cast<int>(tuple_count(i.size, a));
      }
      auto e = enumerate_loops(subject, atoms, atoms, 200000);
      if (e.truncated) throw Error(ErrorKind::CapExceeded, "too many loops for the battery");
      return all_hold(e.loops, f, sig, s);
    }
  }
  return false;
}

Prop1Report prop1_harness(const Program& p, const std::set<std::string>& extra) {
  if (p.kind() != RuleKind::Nondisjunctive || !is_normal_form(p))
    throw Error(ErrorKind::Kind, "the harness needs a nondisjunctive program in normal form");
  Signature sig = p.signature;
  auto universe = herbrand_universe(sig, extra);
  sig.constants.insert(universe.begin(), universe.end());
  AtomSet atoms = ground_atoms(sig, universe);
  if (atoms.size() > 10) throw Error(ErrorKind::CapExceeded, "too many ground atoms for the harness");

  Formula f = fol_representation(p);
  Program g = ground_program(p, extra, true);
  auto subsets = [&]() {
    std::vector<AtomSet> out;
    for (std::uint64_t m = 1; m < (1ull << atoms.size()); ++m) {
      AtomSet y;
      for (std::size_t k = 0; k < atoms.size(); ++k)
        if (m >> k & 1) y.push_back(atoms[k]);
      out.push_back(y);
    }
    return out;
  }();
  auto compile_all = [&](const std::vector<Formula>& fs) {
    std::vector<Evaluator> out;
    for (const auto& x : fs) out.emplace_back(x, sig);
    return out;
  };

  std::vector<Formula> b_forms, c_forms, d_forms, e_forms;
  for (const auto& y : subsets) {
    b_forms.push_back(flf(p, y));
    d_forms.push_back(prop_loop_formula(g, y));
  }
  for (const auto& y : enumerate_loops(LoopSubject::of(p), 3, 2).loops) c_forms.push_back(flf(p, y));
  auto gloops = ground_loops(ground_dependencies(g), atoms);
  for (const auto& y : gloops) {
    c_forms.push_back(flf(p, y));
    e_forms.push_back(prop_loop_formula(g, y));
  }
  auto used = atoms_occurring(g);
  for (const auto& a : atoms)
    if (!used.count(to_string(a))) e_forms.push_back(Formula::neg(a));

  auto b_ev = compile_all(b_forms), c_ev = compile_all(c_forms), d_ev = compile_all(d_forms),
       e_ev = compile_all(e_forms);
  Evaluator model(f, sig);
  auto holds = [](const std::vector<Evaluator>& evs, const Structure& s) {
    for (const auto& ev : evs)
      if (!ev.eval(s)) return false;
    return true;
  };

  Prop1Report report;
  report.ground_loops = gloops.size();
  for (std::uint64_t m = 0; m < (1ull << atoms.size()); ++m) {
    AtomSet chosen;
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (m >> k & 1) chosen.push_back(atoms[k]);
    Interpretation i = herbrand(sig, chosen);
    Structure s = to_structure(i, sig);
    if (!model.eval(s)) continue;
    ++report.models;
    Prop1Row row{to_string(i), is_stable(f, i), holds(b_ev, s), holds(c_ev, s), holds(d_ev, s), holds(e_ev, s)};
    if (!(row.a == row.b && row.a == row.c && row.a == row.d && row.a == row.e)) report.disagreements.push_back(row);
  }
  return report;
}

}  // namespace folf
