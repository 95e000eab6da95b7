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


#include "folf/deps.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace folf {

namespace {

void add_pair(std::vector<DepPair>& out, const Formula& h, const Formula& b) {
  DepPair d{h, b};
  if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
}

void walk(const Formula& f, bool strictly_positive, std::vector<DepPair>& out) {
  switch (f.op()) {
    case Op::Implies: {
      if (!strictly_positive || f.is_top()) return;
      std::vector<Formula> heads;
      for (const auto& o : positive_occurrences(f.rhs()))
        if (o.strictly_positive) heads.push_back(o.atom);
      for (const auto& o : positive_occurrences(f.lhs()))
        if (o.positive && !o.in_negative)
          for (const auto& h : heads) add_pair(out, h, o.atom);
      walk(f.rhs(), true, out);
      return;
    }
    case Op::And:
    case Op::Or:
    case Op::Forall:
    case Op::Exists:
      for (const auto& k : f.kids()) walk(k, strictly_positive, out);
      return;
    default:
      return;
  }
}

}  // namespace

std::vector<DepPair> depends_pairs(const Formula& f) {
  std::vector<DepPair> out;
  walk(rectify(f), true, out);
  return out;
}

std::vector<DepPair> depends_pairs(const Program& p) {
  std::vector<DepPair> out;
  for (const auto& r : p.rules) {
    if (r.kind == RuleKind::Extended) {
      for (const auto& d : depends_pairs(r.as_implication())) add_pair(out, d.head, d.body);
      continue;
    }
    for (const auto& h : r.head_atoms)
      for (const auto& b : r.pos_body)
        if (b.op() == Op::Pred) add_pair(out, h, b);
  }
  return out;
}

std::vector<std::vector<std::string>> predicate_sccs(const Signature& sig, const std::vector<DepPair>& pairs) {
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& [p, _] : sig.predicates) succ[p];
  for (const auto& d : pairs) {
    succ[d.head.symbol()].push_back(d.body.symbol());
    succ[d.body.symbol()];
  }
  // Tarjan
  std::map<std::string, int> index, low;
  std::map<std::string, bool> on_stack;
  std::vector<std::string> stack;
  std::vector<std::vector<std::string>> out;
  int counter = 0;
  std::function<void(const std::string&)> visit = [&](const std::string& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const auto& w : succ[v]) {
      if (!index.count(w)) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::string> comp;
      std::string w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(comp);
    }
  };
  for (const auto& [v, _] : succ)
    if (!index.count(v)) visit(v);
  return out;
}

}  // namespace folf
