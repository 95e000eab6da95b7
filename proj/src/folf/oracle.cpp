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


#include "folf/oracle.hpp"

#include <algorithm>
#include <limits>

#include "folf/sm_transform.hpp"

namespace folf {

std::uint64_t tuple_count(int size, int arity) {
  std::uint64_t c = 1;
  for (int i = 0; i < arity; ++i) {
    c *= static_cast<std::uint64_t>(size);
    if (c > (1ull << 32)) return c;
  }
  return c;
}

int tuple_index(const std::vector<int>& tuple, int size) {
  int idx = 0;
  for (int v : tuple) idx = idx * size + v;
  return idx;
}

std::vector<int> tuple_at(int index, int size, int arity) {
  std::vector<int> t(arity);
  for (int i = arity - 1; i >= 0; --i) {
    t[i] = index % size;
    index /= size;
  }
  return t;
}

namespace {

void require_small(int size, int arity) {
  if (tuple_count(size, arity) > 64)
    throw Error(ErrorKind::CapExceeded, "relation of arity " + std::to_string(arity) + " over " +
                                            std::to_string(size) + " elements exceeds 64 tuples");
}

}  // namespace

Structure to_structure(const Interpretation& i, const Signature& sig) {
  Structure s;
  s.size = i.size;
  if (i.size < 1) throw Error(ErrorKind::EmptyUniverse, "interpretation has an empty universe");
  for (const auto& c : sig.constants) {
    auto it = i.constants.find(c);
    if (it == i.constants.end()) throw Error(ErrorKind::Kind, "unmapped constant " + c);
    if (it->second < 0 || it->second >= i.size) throw Error(ErrorKind::Kind, "constant " + c + " outside universe");
    s.constants.push_back(it->second);
  }
  for (const auto& [p, arity] : sig.predicates) {
    require_small(i.size, arity);
    std::uint64_t m = 0;
    auto it = i.relations.find(p);
    if (it != i.relations.end())
      for (const auto& t : it->second) {
        if (static_cast<int>(t.size()) != arity) throw Error(ErrorKind::Arity, "tuple of wrong arity for " + p);
        for (int v : t)
          if (v < 0 || v >= i.size) throw Error(ErrorKind::Kind, "tuple element outside universe for " + p);
        m |= 1ull << tuple_index(t, i.size);
      }
    s.masks.push_back(m);
  }
  return s;
}

Interpretation to_interpretation(const Structure& s, const Signature& sig) {
  Interpretation i;
  i.size = s.size;
  std::size_t k = 0;
  for (const auto& c : sig.constants) i.constants[c] = s.constants[k++];
  k = 0;
  for (const auto& [p, arity] : sig.predicates) {
    auto& rel = i.relations[p];
    std::uint64_t m = s.masks[k++];
    for (int t = 0; t < 64; ++t)
      if (m >> t & 1ull) rel.insert(tuple_at(t, s.size, arity));
  }
  return i;
}

Interpretation herbrand(const Signature& sig, const std::vector<Formula>& atoms) {
  if (sig.constants.empty()) throw Error(ErrorKind::EmptyUniverse, "empty Herbrand universe");
  Interpretation i;
  i.size = static_cast<int>(sig.constants.size());
  int k = 0;
  for (const auto& c : sig.constants) i.constants[c] = k++;
  for (const auto& [p, _] : sig.predicates) i.relations[p];
  for (const auto& a : atoms) {
    std::vector<int> t;
    for (const auto& arg : a.args()) {
      auto it = i.constants.find(arg.name);
      if (!arg.is_const() || it == i.constants.end())
        throw Error(ErrorKind::Kind, "atom " + to_string(a) + " is not ground over the signature");
      t.push_back(it->second);
    }
    i.relations[a.symbol()].insert(t);
  }
  return i;
}

std::vector<Formula> true_atoms(const Interpretation& i, const Signature& sig) {
  std::vector<std::string> names(i.size);
  for (int e = 0; e < i.size; ++e) names[e] = "e" + std::to_string(e);
  for (const auto& [c, e] : i.constants) names[e] = c;
  std::vector<Formula> out;
  for (const auto& [p, tuples] : i.relations) {
    if (!sig.predicates.count(p)) continue;
    for (const auto& t : tuples) {
      Terms args;
      for (int v : t) args.push_back(Term::constant(names[v]));
      out.push_back(Formula::pred(p, args));
    }
  }
  std::sort(out.begin(), out.end(), [](const Formula& a, const Formula& b) { return to_string(a) < to_string(b); });
  return out;
}

// ---------------------------------------------------------------------------
// Evaluator

struct INode {
  Op op = Op::Bottom;
  int rel = -1;           // relation slot for Pred / PredVar
  std::vector<int> args;  // >= 0: variable slot, < 0: constant -(k+1)
  std::vector<int> kids;
  int var = -1;
  std::vector<int> pslots, parity, pbound;
  double cost = 1;
  bool memo = false;
  std::vector<int> memo_rels;
  std::set<int> free_objs, free_rels;  // compile-time only
};

struct Evaluator::Impl {
  std::vector<INode> nodes;
  int root = -1;
  int var_slots = 0;
  int rel_slots = 0;
  int sig_preds = 0;
  bool use_bounds = true;
  std::vector<std::string> free_obj_names;
  std::vector<int> free_obj_slots;
  std::map<std::string, int> free_rel_slots;
  std::map<std::string, int> const_index;
  std::map<std::string, int> pred_index;

  std::map<std::string, std::vector<int>> var_scope, rel_scope;

  int compile(const Formula& f) {
    INode n;
    n.op = f.op();
    auto term = [&](const Term& t) -> int {
      if (t.is_const()) {
        auto it = const_index.find(t.name);
        if (it == const_index.end()) throw Error(ErrorKind::Kind, "unmapped constant " + t.name);
        return -(it->second + 1);
      }
      auto& st = var_scope[t.name];
      if (st.empty()) {
        st.push_back(var_slots++);
        free_obj_names.push_back(t.name);
        free_obj_slots.push_back(st.back());
      }
      n.free_objs.insert(st.back());
      return st.back();
    };
    switch (f.op()) {
      case Op::Bottom:
        break;
      case Op::Pred: {
        auto it = pred_index.find(f.symbol());
        if (it == pred_index.end()) throw Error(ErrorKind::Kind, "unmapped predicate " + f.symbol());
        n.rel = it->second;
        for (const auto& t : f.args()) n.args.push_back(term(t));
        break;
      }
      case Op::PredVar: {
        auto& st = rel_scope[f.symbol()];
        if (st.empty()) {
          st.push_back(rel_slots++);
          free_rel_slots[f.symbol()] = st.back();
        }
        n.rel = st.back();
        n.free_rels.insert(n.rel);
        for (const auto& t : f.args()) n.args.push_back(term(t));
        break;
      }
      case Op::Equal:
        for (const auto& t : f.args()) n.args.push_back(term(t));
        break;
      case Op::And:
      case Op::Or:
      case Op::Implies:
        n.kids = {compile(f.lhs()), compile(f.rhs())};
        n.cost = 1 + nodes[n.kids[0]].cost + nodes[n.kids[1]].cost;
        for (int k : n.kids) {
          n.free_objs.insert(nodes[k].free_objs.begin(), nodes[k].free_objs.end());
          n.free_rels.insert(nodes[k].free_rels.begin(), nodes[k].free_rels.end());
        }
        break;
      case Op::Forall:
      case Op::Exists: {
        n.var = var_slots++;
        var_scope[f.symbol()].push_back(n.var);
        n.kids = {compile(f.body())};
        var_scope[f.symbol()].pop_back();
        const INode& b = nodes[n.kids[0]];
        n.cost = 4 * b.cost + 1;
        n.free_objs = b.free_objs;
        n.free_objs.erase(n.var);
        n.free_rels = b.free_rels;
        break;
      }
      case Op::SoForall:
      case Op::SoExists: {
        for (const auto& d : f.pvars()) {
          int bound = -1;
          if (!d.bound_by.empty()) {
            auto st = rel_scope.find(d.bound_by);
            if (st != rel_scope.end() && !st->second.empty())
              bound = st->second.back();
            else if (auto pi = pred_index.find(d.bound_by); pi != pred_index.end())
              bound = pi->second;
          }
          n.pbound.push_back(bound);
          n.parity.push_back(d.arity);
        }
        for (const auto& d : f.pvars()) {
          int slot = rel_slots++;
          n.pslots.push_back(slot);
          rel_scope[d.name].push_back(slot);
        }
        n.kids = {compile(f.body())};
        for (const auto& d : f.pvars()) rel_scope[d.name].pop_back();
        const INode& b = nodes[n.kids[0]];
        n.cost = 1000 * b.cost + 1;
        n.free_objs = b.free_objs;
        n.free_rels = b.free_rels;
        for (int s : n.pslots) n.free_rels.erase(s);
        for (int s : n.pbound)
          if (s >= sig_preds) n.free_rels.insert(s);
        n.memo = n.free_objs.empty();
        n.memo_rels.assign(n.free_rels.begin(), n.free_rels.end());
        break;
      }
    }
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  struct State {
    const Structure* s;
    std::vector<int> vars;
    std::vector<std::uint64_t> rels;
    std::vector<std::map<std::vector<std::uint64_t>, bool>> memo;
  };

  int value(const State& st, int a) const { return a >= 0 ? st.vars[a] : st.s->constants[-a - 1]; }

  bool eval(State& st, int id) const {
    const INode& n = nodes[id];
    switch (n.op) {
      case Op::Bottom:
        return false;
      case Op::Pred:
      case Op::PredVar: {
        int idx = 0;
        for (int a : n.args) idx = idx * st.s->size + value(st, a);
        return st.rels[n.rel] >> idx & 1ull;
      }
      case Op::Equal:
        return value(st, n.args[0]) == value(st, n.args[1]);
      case Op::And: {
        int a = n.kids[0], b = n.kids[1];
        if (nodes[b].cost < nodes[a].cost) std::swap(a, b);
        return eval(st, a) && eval(st, b);
      }
      case Op::Or: {
        int a = n.kids[0], b = n.kids[1];
        if (nodes[b].cost < nodes[a].cost) std::swap(a, b);
        return eval(st, a) || eval(st, b);
      }
      case Op::Implies: {
        int a = n.kids[0], b = n.kids[1];
        if (nodes[b].cost < nodes[a].cost) return eval(st, b) || !eval(st, a);
        return !eval(st, a) || eval(st, b);
      }
      case Op::Forall:
      case Op::Exists: {
        bool all = n.op == Op::Forall;
        int saved = st.vars[n.var];
        bool result = all;
        for (int e = 0; e < st.s->size; ++e) {
          st.vars[n.var] = e;
          if (eval(st, n.kids[0]) != all) {
            result = !all;
            break;
          }
        }
        st.vars[n.var] = saved;
        return result;
      }
      case Op::SoForall:
      case Op::SoExists: {
        std::vector<std::uint64_t> key;
        if (n.memo) {
          for (int r : n.memo_rels) key.push_back(st.rels[r]);
          auto it = st.memo[id].find(key);
          if (it != st.memo[id].end()) return it->second;
        }
        bool r = so(st, n, 0);
        if (n.memo) st.memo[id].emplace(std::move(key), r);
        return r;
      }
    }
    return false;
  }

  bool so(State& st, const INode& n, std::size_t j) const {
    bool all = n.op == Op::SoForall;
    if (j == n.pslots.size()) return eval(st, n.kids[0]);
    std::uint64_t count = tuple_count(st.s->size, n.parity[j]);
    if (count > 63) throw Error(ErrorKind::CapExceeded, "predicate variable ranges over more than 63 tuples");
    int slot = n.pslots[j];
    std::uint64_t saved = st.rels[slot];
    bool result = all;
    auto visit = [&](std::uint64_t m) {
      st.rels[slot] = m;
      if (so(st, n, j + 1) != all) {
        result = !all;
        return false;
      }
      return true;
    };
    if (use_bounds && n.pbound[j] >= 0) {
      std::uint64_t b = st.rels[n.pbound[j]];
      for (std::uint64_t m = b;; m = (m - 1) & b) {
        if (!visit(m)) break;
        if (m == 0) break;
      }
    } else {
      std::uint64_t limit = 1ull << count;
      for (std::uint64_t m = 0; m < limit; ++m)
        if (!visit(m)) break;
    }
    st.rels[slot] = saved;
    return result;
  }
};

Evaluator::Evaluator(const Formula& f, const Signature& sig, bool use_bounds) : impl_(std::make_unique<Impl>()) {
  impl_->use_bounds = use_bounds;
  int k = 0;
  for (const auto& c : sig.constants) impl_->const_index[c] = k++;
  k = 0;
  for (const auto& [p, _] : sig.predicates) impl_->pred_index[p] = k++;
  impl_->sig_preds = k;
  impl_->rel_slots = k;
  impl_->root = impl_->compile(f);
}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

const std::vector<std::string>& Evaluator::free_variables() const { return impl_->free_obj_names; }

bool Evaluator::eval(const Structure& s, const std::map<std::string, int>& free_vars,
                     const std::map<std::string, std::uint64_t>& pvars) const {
  Impl::State st;
  st.s = &s;
  st.vars.assign(impl_->var_slots, 0);
  st.rels.assign(impl_->rel_slots, 0);
  for (int i = 0; i < impl_->sig_preds; ++i) st.rels[i] = s.masks[i];
  for (std::size_t i = 0; i < impl_->free_obj_names.size(); ++i) {
    auto it = free_vars.find(impl_->free_obj_names[i]);
    if (it == free_vars.end()) throw Error(ErrorKind::NotSentence, "no value for free variable " + impl_->free_obj_names[i]);
    st.vars[impl_->free_obj_slots[i]] = it->second;
  }
  for (const auto& [name, slot] : impl_->free_rel_slots) {
    auto it = pvars.find(name);
    if (it == pvars.end()) throw Error(ErrorKind::NotSentence, "no value for predicate variable " + name);
    st.rels[slot] = it->second;
  }
  st.memo.resize(impl_->nodes.size());
  return impl_->eval(st, impl_->root);
}

Signature joint_signature(const Formula& f, const Signature& extra) {
  Signature sig = extra;
  merge_signature(sig, signature_of(f));
  return sig;
}

bool evaluate(const Formula& f, const Interpretation& i, const PredicateAssignment& a,
              const std::map<std::string, int>& env) {
  Signature sig;
  for (const auto& [c, _] : i.constants) sig.constants.insert(c);
  Signature fs = signature_of(f);
  for (const auto& [p, arity] : fs.predicates) sig.predicates[p] = arity;
  for (const auto& c : fs.constants)
    if (!sig.constants.count(c)) throw Error(ErrorKind::Kind, "unmapped constant " + c);
  Structure s = to_structure(i, sig);
  std::map<std::string, std::uint64_t> pv;
  for (const auto& [name, tuples] : a) {
    std::uint64_t m = 0;
    for (const auto& t : tuples) m |= 1ull << tuple_index(t, i.size);
    pv[name] = m;
  }
  return Evaluator(f, sig).eval(s, env, pv);
}

void check_caps(const Signature& sig, int size, const OracleLimits& limits) {
  if (size > limits.max_universe)
    throw Error(ErrorKind::CapExceeded, "universe size " + std::to_string(size) + " exceeds cap " +
                                            std::to_string(limits.max_universe));
  std::uint64_t total = 0;
  for (const auto& [_, arity] : sig.predicates) total += tuple_count(size, arity);
  if (total > static_cast<std::uint64_t>(limits.max_tuples))
    throw Error(ErrorKind::CapExceeded, "interpretation has " + std::to_string(total) + " tuples, cap is " +
                                            std::to_string(limits.max_tuples));
}

void for_each_structure(const Signature& sig, int size, const std::function<bool(const Structure&)>& visit) {
  Structure s;
  s.size = size;
  std::size_t nc = sig.constants.size();
  s.constants.assign(nc, 0);
  std::vector<std::uint64_t> limit;
  for (const auto& [_, arity] : sig.predicates) {
    require_small(size, arity);
    std::uint64_t c = tuple_count(size, arity);
    limit.push_back(c >= 64 ? std::numeric_limits<std::uint64_t>::max() : (1ull << c) - 1);
  }
  for (;;) {
    s.masks.assign(limit.size(), 0);
    for (;;) {
      if (!visit(s)) return;
      std::size_t k = limit.size();
      while (k > 0 && s.masks[k - 1] == limit[k - 1]) s.masks[--k] = 0;
      if (k == 0) break;
      ++s.masks[k - 1];
    }
    std::size_t k = nc;
    while (k > 0 && s.constants[k - 1] == size - 1) s.constants[--k] = 0;
    if (k == 0) break;
    ++s.constants[k - 1];
  }
}

bool is_stable(const Formula& f, const Interpretation& i, const OracleLimits& limits) {
  Signature sig = signature_of(f);
  check_caps(sig, i.size, limits);
  Signature full = sig;
  for (const auto& [c, _] : i.constants) full.constants.insert(c);
  return Evaluator(sm(f), full).eval(to_structure(i, full));
}

}  // namespace folf
