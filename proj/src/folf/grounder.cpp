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


#include "folf/grounder.hpp"

#include <algorithm>
#include <map>

namespace folf {

namespace {

Formula expand(const Formula& f, const std::vector<std::string>& universe, Substitution& env) {
  switch (f.op()) {
    case Op::Bottom:
      return f;
    case Op::Pred:
      return Formula::pred(f.symbol(), apply_subst(f.args(), env));
    case Op::Equal: {
      Term a = apply_subst(f.args()[0], env), b = apply_subst(f.args()[1], env);
      if (a.is_const() && b.is_const()) return a == b ? Formula::top() : Formula::bottom();
      return Formula::equal(a, b);
    }
    case Op::And:
      return Formula::land(expand(f.lhs(), universe, env), expand(f.rhs(), universe, env));
    case Op::Or:
      return Formula::lor(expand(f.lhs(), universe, env), expand(f.rhs(), universe, env));
    case Op::Implies:
      if (f.is_top()) return f;
      return Formula::implies(expand(f.lhs(), universe, env), expand(f.rhs(), universe, env));
    case Op::Forall:
    case Op::Exists: {
      std::vector<Formula> parts;
      auto saved = env.find(f.symbol()) == env.end() ? std::optional<Term>() : std::optional<Term>(env.at(f.symbol()));
      for (const auto& c : universe) {
        env[f.symbol()] = Term::constant(c);
        parts.push_back(expand(f.body(), universe, env));
      }
      if (saved)
        env[f.symbol()] = *saved;
      else
        env.erase(f.symbol());
      return f.op() == Op::Forall ? Formula::conj(parts) : Formula::disj(parts);
    }
    default:
      throw Error(ErrorKind::NotFirstOrder, "cannot ground a second-order formula");
  }
}

}  // namespace

std::vector<std::string> herbrand_universe(const Signature& sig, const std::set<std::string>& extra) {
  std::set<std::string> all = sig.constants;
  all.insert(extra.begin(), extra.end());
  if (all.empty()) throw Error(ErrorKind::EmptyUniverse, "empty Herbrand universe");
  return {all.begin(), all.end()};
}

AtomSet ground_atoms(const Signature& sig, const std::vector<std::string>& universe) {
  AtomSet out;
  for (const auto& [p, arity] : sig.predicates) {
    if (arity > 0 && universe.empty()) continue;
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
      Terms args;
      for (auto i : idx) args.push_back(Term::constant(universe[i]));
      out.push_back(Formula::pred(p, args));
      int k = arity - 1;
      while (k >= 0 && ++idx[k] == universe.size()) idx[k--] = 0;
      if (k < 0) break;
    }
  }
  return out;
}

Formula ground_expand(const Formula& f, const std::vector<std::string>& universe) {
  Substitution env;
  return simplify(expand(f, universe, env), true);
}

Program ground_program(const Program& p, const std::set<std::string>& extra, bool keep_false_rules) {
  auto universe = herbrand_universe(p.signature, extra);
  Program out;
  out.queries = p.queries;
  std::set<std::string> seen;
  for (const auto& r : p.rules) {
    auto fv = free_vars(r.as_implication());
    std::vector<std::string> vars(fv.begin(), fv.end());
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      Substitution theta;
      for (std::size_t i = 0; i < vars.size(); ++i) theta[vars[i]] = Term::constant(universe[idx[i]]);
      Formula head = ground_expand(apply_subst(r.head, theta), universe);
      std::vector<Formula> items;
      bool dead = head.is_top();
      bool false_body = false;
      for (const auto& item : r.body_items) {
        if (dead) break;
        Formula g = ground_expand(apply_subst(item, theta), universe);
        if (g.is_bottom()) {
          false_body = true;
          if (!keep_false_rules) dead = true;
        }
        if (!g.is_top() && !g.is_bottom()) items.push_back(g);
      }
      if (false_body && !dead) items.insert(items.begin(), Formula::bottom());
      if (!dead) {
        bool has_body = !items.empty();
        Rule g = make_rule(head, std::move(items), has_body);
        if (seen.insert(to_string(g)).second) out.rules.push_back(g);
      }
      int k = static_cast<int>(vars.size()) - 1;
      while (k >= 0 && ++idx[k] == universe.size()) idx[k--] = 0;
      if (k < 0) break;
    }
  }
  out.signature = p.signature;
  out.signature.constants.insert(universe.begin(), universe.end());
  return out;
}

Formula ground_sentence(const Formula& f, const std::set<std::string>& extra) {
  if (!is_sentence(f)) throw Error(ErrorKind::NotSentence, "grounding needs a sentence");
  return ground_expand(f, herbrand_universe(signature_of(f), extra));
}

std::set<std::string> atoms_occurring(const Program& ground) {
  std::set<std::string> out;
  for (const auto& r : ground.rules)
    for (const auto& a : atoms_of(r.as_implication()))
      if (a.op() == Op::Pred) out.insert(to_string(a));
  return out;
}

std::vector<DepPair> ground_dependencies(const Program& ground) { return depends_pairs(ground); }

std::vector<DepPair> ground_dependencies(const Formula& ground) { return depends_pairs(ground); }

std::vector<AtomSet> ground_loops(const std::vector<DepPair>& deps, const AtomSet& atoms, std::size_t max_loops) {
  std::map<std::string, std::size_t> id;
  for (const auto& a : atoms) id.emplace(to_string(a), id.size());
  std::vector<Formula> by_id(id.size());
  for (const auto& a : atoms) by_id[id.at(to_string(a))] = a;
  std::size_t n = by_id.size();
  std::vector<std::set<std::size_t>> out_edges(n), in_edges(n);
  for (const auto& d : deps) {
    auto h = id.find(to_string(d.head)), b = id.find(to_string(d.body));
    if (h == id.end() || b == id.end() || h->second == b->second) continue;
    out_edges[h->second].insert(b->second);
    in_edges[b->second].insert(h->second);
  }

  auto strong = [&](const std::vector<std::size_t>& s) {
    std::set<std::size_t> members(s.begin(), s.end());
    for (const auto* edges : {&out_edges, &in_edges}) {
      std::set<std::size_t> seen{s.front()};
      std::vector<std::size_t> stack{s.front()};
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : (*edges)[v])
          if (members.count(w) && seen.insert(w).second) stack.push_back(w);
      }
      if (seen.size() != members.size()) return false;
    }
    return true;
  };

  std::vector<AtomSet> loops;
  std::set<std::vector<std::size_t>> level;
  for (std::size_t i = 0; i < n; ++i) level.insert({i});
  while (!level.empty()) {
    std::set<std::vector<std::size_t>> next;
    for (const auto& s : level) {
      if (strong(s)) {
        AtomSet y;
        for (auto i : s) y.push_back(by_id[i]);
        loops.push_back(y);
        if (loops.size() > max_loops) throw Error(ErrorKind::CapExceeded, "too many ground loops");
      }
      std::set<std::size_t> cand;
      for (auto v : s) {
        cand.insert(out_edges[v].begin(), out_edges[v].end());
        cand.insert(in_edges[v].begin(), in_edges[v].end());
      }
      for (auto w : cand) {
        if (std::binary_search(s.begin(), s.end(), w)) continue;
        auto t = s;
        t.insert(std::upper_bound(t.begin(), t.end(), w), w);
        next.insert(t);
      }
      if (next.size() > 4 * max_loops) throw Error(ErrorKind::CapExceeded, "too many ground atom sets");
    }
    level = std::move(next);
  }
  return loops;
}

Formula prop_loop_formula(const Program& ground, const AtomSet& y) {
  Formula support;
  switch (ground.kind()) {
    case RuleKind::Nondisjunctive:
      support = fes_nondisjunctive(ground, y);
      break;
    case RuleKind::Disjunctive:
      support = fes_disjunctive(ground, y);
      break;
    case RuleKind::Extended:
      support = efes(ground, y);
      break;
  }
  return simplify(Formula::implies(Formula::conj(y), support), true);
}

Formula prop_loop_formula(const Formula& ground, const AtomSet& y) {
  return simplify(Formula::implies(Formula::conj(y), Formula::neg(nfes(ground, y))), true);
}

}  // namespace folf
