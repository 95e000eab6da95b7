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


#include "folf/stable.hpp"

#include <algorithm>
#include <functional>

#include "folf/deps.hpp"
#include "folf/grounder.hpp"

namespace folf {

namespace {

std::string element(int e) { return "_e" + std::to_string(e); }

Term map_term(const Term& t, const std::map<std::string, int>& cmap) {
  if (!t.is_const()) return t;
  auto it = cmap.find(t.name);
  if (it == cmap.end()) throw Error(ErrorKind::Internal, "unmapped constant " + t.name);
  return Term::constant(element(it->second));
}

Formula map_constants(const Formula& f, const std::map<std::string, int>& cmap) {
  switch (f.op()) {
    case Op::Bottom:
      return f;
    case Op::Pred: {
      Terms args;
      for (const auto& t : f.args()) args.push_back(map_term(t, cmap));
      return Formula::pred(f.symbol(), args);
    }
    case Op::Equal:
      return Formula::equal(map_term(f.args()[0], cmap), map_term(f.args()[1], cmap));
    case Op::And:
      return Formula::land(map_constants(f.lhs(), cmap), map_constants(f.rhs(), cmap));
    case Op::Or:
      return Formula::lor(map_constants(f.lhs(), cmap), map_constants(f.rhs(), cmap));
    case Op::Implies:
      if (f.is_top()) return f;
      return Formula::implies(map_constants(f.lhs(), cmap), map_constants(f.rhs(), cmap));
    case Op::Forall:
      return Formula::forall(f.symbol(), map_constants(f.body(), cmap));
    case Op::Exists:
      return Formula::exists(f.symbol(), map_constants(f.body(), cmap));
    default:
      throw Error(ErrorKind::NotFirstOrder, "stable model search needs a first-order sentence");
  }
}

// Propositional DAG with Kleene evaluation (0 false, 1 true, 2 unknown).
struct Circuit {
  enum Kind : unsigned char { False, True, Atom, And, Or, Imp };
  struct Node {
    Kind kind;
    int atom = -1;
    std::vector<int> kids;
  };
  std::vector<Node> nodes;
  const std::map<std::string, int>* ids = nullptr;

  int add(Node n) {
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  void flatten(const Formula& f, Op op, std::vector<int>& kids) {
    if (f.op() == op && !f.is_top()) {
      flatten(f.lhs(), op, kids);
      flatten(f.rhs(), op, kids);
    } else {
      kids.push_back(compile(f));
    }
  }

  int compile(const Formula& f) {
    if (f.is_top()) return add({True, -1, {}});
    switch (f.op()) {
      case Op::Bottom:
        return add({False, -1, {}});
      case Op::Pred:
        return add({Atom, ids->at(to_string(f)), {}});
      case Op::And:
      case Op::Or: {
        std::vector<int> kids;
        flatten(f, f.op(), kids);
        return add({f.op() == Op::And ? And : Or, -1, kids});
      }
      case Op::Implies: {
        int a = compile(f.lhs());
        int b = compile(f.rhs());
        return add({Imp, -1, {a, b}});
      }
      default:
        throw Error(ErrorKind::Internal, "unexpected node in a ground formula");
    }
  }

  int eval(int n, const std::vector<signed char>& v) const {
    const Node& node = nodes[n];
    switch (node.kind) {
      case False:
        return 0;
      case True:
        return 1;
      case Atom:
        return v[node.atom];
      case And: {
        int r = 1;
        for (int k : node.kids) {
          int x = eval(k, v);
          if (x == 0) return 0;
          if (x == 2) r = 2;
        }
        return r;
      }
      case Or: {
        int r = 0;
        for (int k : node.kids) {
          int x = eval(k, v);
          if (x == 1) return 1;
          if (x == 2) r = 2;
        }
        return r;
      }
      case Imp: {
        int a = eval(node.kids[0], v);
        if (a == 0) return 1;
        int b = eval(node.kids[1], v);
        if (b == 1) return 1;
        return a == 1 && b == 0 ? 0 : 2;
      }
    }
    return 2;
  }

  // Value of F*(u) with p fixed to the total assignment x; `classic` holds
  // each node's value under x.
  int star(int n, const std::vector<signed char>& x, const std::vector<signed char>& u,
           const std::vector<signed char>& classic) const {
    const Node& node = nodes[n];
    switch (node.kind) {
      case False:
        return 0;
      case True:
        return 1;
      case Atom:
        return x[node.atom] ? u[node.atom] : 0;
      case And: {
        int r = 1;
        for (int k : node.kids) {
          int y = star(k, x, u, classic);
          if (y == 0) return 0;
          if (y == 2) r = 2;
        }
        return r;
      }
      case Or: {
        int r = 0;
        for (int k : node.kids) {
          int y = star(k, x, u, classic);
          if (y == 1) return 1;
          if (y == 2) r = 2;
        }
        return r;
      }
      case Imp: {
        if (!classic[n]) return 0;
        int a = star(node.kids[0], x, u, classic);
        if (a == 0) return 1;
        int b = star(node.kids[1], x, u, classic);
        if (b == 1) return 1;
        return a == 1 && b == 0 ? 0 : 2;
      }
    }
    return 2;
  }

  void classic_values(const std::vector<signed char>& x, std::vector<signed char>& out) const {
    out.assign(nodes.size(), 0);
    // children are always added before their parents
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      const Node& node = nodes[n];
      switch (node.kind) {
        case False:
          out[n] = 0;
          break;
        case True:
          out[n] = 1;
          break;
        case Atom:
          out[n] = x[node.atom];
          break;
        case And:
          out[n] = std::all_of(node.kids.begin(), node.kids.end(), [&](int k) { return out[k] == 1; });
          break;
        case Or:
          out[n] = std::any_of(node.kids.begin(), node.kids.end(), [&](int k) { return out[k] == 1; });
          break;
        case Imp:
          out[n] = !out[node.kids[0]] || out[node.kids[1]];
          break;
      }
    }
  }
};

void split_conj(const Formula& f, std::vector<Formula>& out) {
  if (f.op() == Op::And) {
    split_conj(f.lhs(), out);
    split_conj(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

// Loop formula equivalent to the usual one in every model of `ground`:
// conjuncts of the ground formula that do not mention Y, and the classical
// copy NFES keeps of an implication conjunct, already follow from it.
Formula pruning_loop_formula(const std::vector<Formula>& conjuncts, const AtomSet& y) {
  std::set<std::string> ys;
  for (const auto& a : y) ys.insert(to_string(a));
  std::vector<Formula> parts;
  for (const auto& c : conjuncts) {
    bool touches = false;
    for (const auto& a : atoms_of(c))
      if (ys.count(to_string(a))) touches = true;
    if (!touches) continue;
    if (c.op() == Op::Implies && !c.is_top())
      parts.push_back(Formula::implies(nfes(c.lhs(), y), nfes(c.rhs(), y)));
    else
      parts.push_back(nfes(c, y));
  }
  return simplify(Formula::implies(Formula::conj(y), Formula::neg(Formula::conj(parts))), true);
}

class Search {
 public:
  Search(const Formula& ground, const AtomSet& atoms, const std::vector<int>& order, const StableLimits& limits)
      : order_(order) {
    for (const auto& a : atoms) ids_.emplace(to_string(a), ids_.size());
    circuit_.ids = &ids_;
    root_ = circuit_.compile(ground);
    std::vector<AtomSet> loops;
    try {
      loops = ground_loops(ground_dependencies(ground), used_atoms(ground, atoms), limits.max_loops);
    } catch (const Error&) {
      loops.clear();
      for (const auto& a : used_atoms(ground, atoms)) loops.push_back({a});
    }
    watch_.resize(atoms.size());
    std::vector<Formula> conjuncts;
    split_conj(ground, conjuncts);
    for (const auto& l : loops) {
      Loop loop;
      for (const auto& a : l) loop.atoms.push_back(ids_.at(to_string(a)));
      loop.root = circuit_.compile(pruning_loop_formula(conjuncts, l));
      for (int a : loop.atoms) watch_[a].push_back(loops_.size());
      loops_.push_back(std::move(loop));
    }
    vals_.assign(atoms.size(), 0);
    for (int a : order_) vals_[a] = 2;
  }

  std::vector<std::vector<signed char>> run() {
    descend(0);
    return found_;
  }

 private:
  struct Loop {
    std::vector<int> atoms;
    int root = 0;
    int true_count = 0;
  };

  static AtomSet used_atoms(const Formula& ground, const AtomSet& atoms) {
    std::set<std::string> used;
    for (const auto& a : atoms_of(ground))
      if (a.op() == Op::Pred) used.insert(to_string(a));
    AtomSet out;
    for (const auto& a : atoms)
      if (used.count(to_string(a))) out.push_back(a);
    return out;
  }

  bool consistent() const {
    if (circuit_.eval(root_, vals_) == 0) return false;
    for (const auto& l : loops_)
      if (l.true_count == static_cast<int>(l.atoms.size()) && circuit_.eval(l.root, vals_) == 0) return false;
    return true;
  }

  void set(int atom, signed char v) {
    if (vals_[atom] == 1)
      for (auto i : watch_[atom]) --loops_[i].true_count;
    vals_[atom] = v;
    if (v == 1)
      for (auto i : watch_[atom]) ++loops_[i].true_count;
  }

  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      if (circuit_.eval(root_, vals_) == 1 && minimal()) found_.push_back(vals_);
      return;
    }
    int atom = order_[depth];
    for (signed char v : {0, 1}) {
      set(atom, v);
      if (consistent()) descend(depth + 1);
    }
    set(atom, 2);
  }

  // No u strictly below the current total assignment satisfies F*(u).
  bool minimal() {
    std::vector<signed char> classic;
    circuit_.classic_values(vals_, classic);
    std::vector<int> members;
    for (std::size_t a = 0; a < vals_.size(); ++a)
      if (vals_[a] == 1) members.push_back(static_cast<int>(a));
    std::vector<signed char> u(vals_.size(), 0);
    for (int a : members) u[a] = 2;
    std::function<bool(std::size_t, bool)> smaller = [&](std::size_t i, bool dropped) -> bool {
      int s = circuit_.star(root_, vals_, u, classic);
      if (s == 0) return false;
      if (i == members.size()) return dropped && s == 1;
      for (signed char v : {0, 1}) {
        u[members[i]] = v;
        if (smaller(i + 1, dropped || v == 0)) return true;
      }
      u[members[i]] = 2;
      return false;
    };
    return !smaller(0, false);
  }

  std::map<std::string, int> ids_;
  Circuit circuit_;
  int root_ = 0;
  std::vector<Loop> loops_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<int> order_;
  std::vector<signed char> vals_;
  std::vector<std::vector<signed char>> found_;
};

bool interpretation_less(const Interpretation& a, const Interpretation& b) {
  return std::tie(a.size, a.constants, a.relations) < std::tie(b.size, b.constants, b.relations);
}

}  // namespace

std::vector<Interpretation> stable_models(const Formula& f, const Signature& sig, int size,
                                          const std::map<std::string, int>& constants, const StableLimits& limits) {
  if (!is_sentence(f)) throw Error(ErrorKind::NotSentence, "stable models need a sentence");
  std::vector<std::string> universe;
  for (int e = 0; e < size; ++e) universe.push_back(element(e));
  Formula ground = ground_expand(map_constants(f, constants), universe);
  AtomSet atoms = ground_atoms(sig, universe);
  if (atoms.size() > limits.max_atoms)
    throw Error(ErrorKind::CapExceeded, std::to_string(atoms.size()) + " ground atoms exceed the search limit");

  std::set<std::string> used;
  for (const auto& a : atoms_of(ground))
    if (a.op() == Op::Pred) used.insert(to_string(a));
  std::map<std::string, int> rank;
  int r = 0;
  for (const auto& comp : predicate_sccs(sig, depends_pairs(f)))
    for (const auto& p : comp) rank[p] = r++;
  std::vector<int> order;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (used.count(to_string(atoms[i]))) order.push_back(static_cast<int>(i));
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rank[atoms[a].symbol()] < rank[atoms[b].symbol()]; });

  Search search(ground, atoms, order, limits);
  std::vector<Interpretation> out;
  for (const auto& vals : search.run()) {
    Interpretation i;
    i.size = size;
    i.constants = constants;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (vals[a] != 1) continue;
      std::vector<int> tuple;
      for (const auto& t : atoms[a].args()) tuple.push_back(std::stoi(t.name.substr(2)));
      i.relations[atoms[a].symbol()].insert(tuple);
    }
    out.push_back(std::move(i));
  }
  std::sort(out.begin(), out.end(), interpretation_less);
  return out;
}

std::vector<Interpretation> answer_sets(const Formula& f, const std::set<std::string>& extra,
                                        const StableLimits& limits) {
  Signature sig = signature_of(f);
  auto universe = herbrand_universe(sig, extra);
  sig.constants.insert(universe.begin(), universe.end());
  std::map<std::string, int> cmap;
  for (std::size_t i = 0; i < universe.size(); ++i) cmap[universe[i]] = static_cast<int>(i);
  return stable_models(f, sig, static_cast<int>(universe.size()), cmap, limits);
}

std::vector<Interpretation> answer_sets(const Program& p, const std::set<std::string>& extra,
                                        const StableLimits& limits) {
  Formula f = fol_representation(p);
  Signature sig = p.signature;
  auto universe = herbrand_universe(sig, extra);
  sig.constants.insert(universe.begin(), universe.end());
  std::map<std::string, int> cmap;
  for (std::size_t i = 0; i < universe.size(); ++i) cmap[universe[i]] = static_cast<int>(i);
  return stable_models(f, sig, static_cast<int>(universe.size()), cmap, limits);
}

bool EntailmentReport::entailed() const {
  return std::all_of(sizes.begin(), sizes.end(), [](const SizeVerdict& v) { return v.entailed; });
}

EntailmentReport entails_sm(const Formula& gamma, const Formula& query, int max_universe,
                            const StableLimits& limits) {
  if (!is_sentence(query)) throw Error(ErrorKind::NotSentence, "the query must be a sentence");
  Signature sig = joint_signature(gamma, signature_of(query));
  std::vector<std::string> consts(sig.constants.begin(), sig.constants.end());
  EntailmentReport report;
  for (int n = 1; n <= max_universe; ++n) {
    SizeVerdict v;
    v.size = n;
    std::vector<int> idx(consts.size(), 0);
    while (true) {
      std::map<std::string, int> cmap;
      for (std::size_t i = 0; i < consts.size(); ++i) cmap[consts[i]] = idx[i];
      for (const auto& m : stable_models(gamma, sig, n, cmap, limits)) {
        ++v.stable_models;
        if (!evaluate(query, m)) {
          v.entailed = false;
          if (!v.counter_model) v.counter_model = m;
        }
      }
      int k = static_cast<int>(consts.size()) - 1;
      while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
      if (k < 0) break;
    }
    report.sizes.push_back(std::move(v));
  }
  return report;
}

EntailmentReport entails_sm(const Program& gamma, const Formula& query, int max_universe,
                            const StableLimits& limits) {
  return entails_sm(fol_representation(gamma), query, max_universe, limits);
}

std::string to_string(const Interpretation& i, bool names) {
  std::map<int, std::string> name_of;
  if (names)
    for (const auto& [c, e] : i.constants) name_of.emplace(e, c);
  std::vector<std::string> atoms;
  for (const auto& [p, tuples] : i.relations)
    for (const auto& t : tuples) {
      std::string s = p;
      if (!t.empty()) {
        s += "(";
        for (std::size_t k = 0; k < t.size(); ++k) {
          if (k) s += ",";
          auto it = name_of.find(t[k]);
          s += it != name_of.end() ? it->second : std::to_string(t[k]);
        }
        s += ")";
      }
      atoms.push_back(s);
    }
  std::sort(atoms.begin(), atoms.end());
  std::string out = "{";
  for (std::size_t k = 0; k < atoms.size(); ++k) out += (k ? ", " : "") + atoms[k];
  return out + "}";
}

}  // namespace folf
