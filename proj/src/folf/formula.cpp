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

#include "folf/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

namespace folf {

// ---------------------------------------------------------------------------
// construction

Formula Formula::make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

Formula::Formula() : node_(bottom().node_) {}

Formula Formula::bottom() {
  static const std::shared_ptr<const Node> node = std::make_shared<const Node>(Node{});
  return Formula(node);
}

Formula Formula::top() { return implies(bottom(), bottom()); }

Formula Formula::pred(std::string name, Terms args) {
  Node n;
  n.op = Op::Pred;
  n.symbol = std::move(name);
  n.args = std::move(args);
  return make(std::move(n));
}

Formula Formula::equal(Term lhs, Term rhs) {
  Node n;
  n.op = Op::Equal;
  n.args = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Formula Formula::pred_var(std::string name, Terms args) {
  Node n;
  n.op = Op::PredVar;
  n.symbol = std::move(name);
  n.args = std::move(args);
  return make(std::move(n));
}

Formula Formula::land(Formula a, Formula b) {
  Node n;
  n.op = Op::And;
  n.kids = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula Formula::lor(Formula a, Formula b) {
  Node n;
  n.op = Op::Or;
  n.kids = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula Formula::implies(Formula a, Formula b) {
  Node n;
  n.op = Op::Implies;
  n.kids = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula Formula::neg(Formula a) { return implies(std::move(a), bottom()); }

Formula Formula::iff(Formula a, Formula b) { return land(implies(a, b), implies(b, a)); }

Formula Formula::forall(std::string var, Formula body) {
  Node n;
  n.op = Op::Forall;
  n.symbol = std::move(var);
  n.kids = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
  Node n;
  n.op = Op::Exists;
  n.symbol = std::move(var);
  n.kids = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::forall(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

Formula Formula::exists(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}

Formula Formula::so_forall(std::vector<PredVarDecl> vars, Formula body) {
  Node n;
  n.op = Op::SoForall;
  n.pvars = std::move(vars);
  n.kids = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::so_exists(std::vector<PredVarDecl> vars, Formula body) {
  Node n;
  n.op = Op::SoExists;
  n.pvars = std::move(vars);
  n.kids = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::conj(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = land(acc, fs[i]);
  return acc;
}

Formula Formula::disj(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = lor(acc, fs[i]);
  return acc;
}

Formula Formula::tuple_neq(const Terms& a, const Terms& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Arity, "tuple_neq: length mismatch");
  std::vector<Formula> eqs;
  for (std::size_t i = 0; i < a.size(); ++i) eqs.push_back(equal(a[i], b[i]));
  return neg(conj(eqs));
}

bool Formula::is_top() const {
  return op() == Op::Implies && lhs().is_bottom() && rhs().is_bottom();
}

bool Formula::is_negation() const { return op() == Op::Implies && rhs().is_bottom() && !lhs().is_bottom(); }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  const Node& a = *node_;
  const Node& b = *o.node_;
  if (a.op != b.op || a.symbol != b.symbol || a.args != b.args || a.pvars != b.pvars) return false;
  if (a.kids.size() != b.kids.size()) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!(a.kids[i] == b.kids[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// queries

std::set<std::string> vars_of_terms(const Terms& ts) {
  std::set<std::string> out;
  for (const auto& t : ts)
    if (t.is_var()) out.insert(t.name);
  return out;
}

namespace {

void collect_free(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::Bottom:
      return;
    case Op::Pred:
    case Op::Equal:
    case Op::PredVar:
      for (const auto& t : f.args())
        if (t.is_var() && !bound.count(t.name)) out.insert(t.name);
      return;
    case Op::Forall:
    case Op::Exists: {
      auto it = bound.insert(f.symbol());
      collect_free(f.body(), bound, out);
      bound.erase(it);
      return;
    }
    default:
      for (const auto& k : f.kids()) collect_free(k, bound, out);
  }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  if (f.is_quantifier()) out.insert(f.symbol());
  for (const auto& t : f.args())
    if (t.is_var()) out.insert(t.name);
  for (const auto& k : f.kids()) collect_all(k, out);
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

bool is_first_order(const Formula& f) {
  if (f.op() == Op::PredVar || f.op() == Op::SoForall || f.op() == Op::SoExists) return false;
  for (const auto& k : f.kids())
    if (!is_first_order(k)) return false;
  return true;
}

namespace {

bool negative_in(const Formula& f, bool in_antecedent) {
  switch (f.op()) {
    case Op::Pred:
    case Op::PredVar:
      return in_antecedent;
    case Op::Bottom:
    case Op::Equal:
      return true;
    case Op::Implies:
      return negative_in(f.lhs(), true) && negative_in(f.rhs(), in_antecedent);
    default:
      for (const auto& k : f.kids())
        if (!negative_in(k, in_antecedent)) return false;
      return true;
  }
}

}  // namespace

bool is_negative(const Formula& f) { return negative_in(f, false); }

bool is_rectified(const Formula& f) {
  std::set<std::string> binders;
  bool ok = true;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.is_quantifier() && !binders.insert(g.symbol()).second) ok = false;
    for (const auto& k : g.kids()) walk(k);
  };
  walk(f);
  if (!ok) return false;
  for (const auto& v : free_vars(f))
    if (binders.count(v)) return false;
  return true;
}

void merge_signature(Signature& a, const Signature& b) {
  a.constants.insert(b.constants.begin(), b.constants.end());
  for (const auto& [p, n] : b.predicates) {
    auto [it, inserted] = a.predicates.emplace(p, n);
    if (!inserted && it->second != n)
      throw Error(ErrorKind::Arity, "predicate " + p + " used with arities " + std::to_string(it->second) +
                                        " and " + std::to_string(n));
  }
}

Signature signature_of(const Formula& f) {
  Signature sig;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    for (const auto& t : g.args())
      if (t.is_const()) sig.constants.insert(t.name);
    if (g.op() == Op::Pred) {
      Signature one;
      one.predicates[g.symbol()] = static_cast<int>(g.args().size());
      merge_signature(sig, one);
    }
    for (const auto& k : g.kids()) walk(k);
  };
  walk(f);
  return sig;
}

namespace {

void occurrences(const Formula& f, int depth, bool in_neg, std::vector<Occurrence>& out) {
  bool neg_here = in_neg || (f.op() != Op::Pred && is_negative(f));
  switch (f.op()) {
    case Op::Pred: {
      Occurrence o;
      o.atom = f;
      o.antecedent_depth = depth;
      o.positive = depth % 2 == 0;
      o.strictly_positive = depth == 0;
      o.in_negative = in_neg;
      out.push_back(o);
      return;
    }
    case Op::Implies:
      occurrences(f.lhs(), depth + 1, neg_here, out);
      occurrences(f.rhs(), depth, neg_here, out);
      return;
    default:
      for (const auto& k : f.kids()) occurrences(k, depth, neg_here, out);
  }
}

}  // namespace

std::vector<Occurrence> positive_occurrences(const Formula& f) {
  std::vector<Occurrence> out;
  occurrences(f, 0, false, out);
  return out;
}

std::vector<Formula> atoms_of(const Formula& f) {
  std::vector<Formula> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.op() == Op::Pred) out.push_back(g);
    for (const auto& k : g.kids()) walk(k);
  };
  walk(f);
  return out;
}

// ---------------------------------------------------------------------------
// renaming and substitution

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  std::string stem = base;
  while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (!used.count(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string cand = stem + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

namespace {

Formula rebuild(const Formula& f, std::vector<Formula> kids) {
  switch (f.op()) {
    case Op::And:
      return Formula::land(kids[0], kids[1]);
    case Op::Or:
      return Formula::lor(kids[0], kids[1]);
    case Op::Implies:
      return Formula::implies(kids[0], kids[1]);
    case Op::Forall:
      return Formula::forall(f.symbol(), kids[0]);
    case Op::Exists:
      return Formula::exists(f.symbol(), kids[0]);
    case Op::SoForall:
      return Formula::so_forall(f.pvars(), kids[0]);
    case Op::SoExists:
      return Formula::so_exists(f.pvars(), kids[0]);
    default:
      return f;
  }
}

Terms rename_terms(const Terms& ts, const std::map<std::string, std::string>& ren) {
  Terms out = ts;
  for (auto& t : out)
    if (t.is_var()) {
      auto it = ren.find(t.name);
      if (it != ren.end()) t.name = it->second;
    }
  return out;
}

Formula with_args(const Formula& f, Terms args) {
  switch (f.op()) {
    case Op::Pred:
      return Formula::pred(f.symbol(), std::move(args));
    case Op::PredVar:
      return Formula::pred_var(f.symbol(), std::move(args));
    case Op::Equal:
      return Formula::equal(args[0], args[1]);
    default:
      return f;
  }
}

// Renames binders according to `should_rename`, consistently substituting
// bound occurrences. Free occurrences are renamed through `free_ren`.
Formula rename_binders(const Formula& f, std::map<std::string, std::string> scope,
                       const std::function<bool(const std::string&)>& should_rename,
                       std::set<std::string>& used) {
  if (f.is_atom()) return with_args(f, rename_terms(f.args(), scope));
  if (f.is_quantifier()) {
    std::string v = f.symbol();
    std::string nv = v;
    if (should_rename(v)) {
      nv = fresh_name(v, used);
      used.insert(nv);
    }
    scope[v] = nv;
    Formula body = rename_binders(f.body(), scope, should_rename, used);
    return f.op() == Op::Forall ? Formula::forall(nv, body) : Formula::exists(nv, body);
  }
  std::vector<Formula> kids;
  for (const auto& k : f.kids()) kids.push_back(rename_binders(k, scope, should_rename, used));
  return rebuild(f, std::move(kids));
}

}  // namespace

Formula rectify(const Formula& f) {
  std::set<std::string> used = all_vars(f);
  const std::set<std::string> frees = free_vars(f);
  std::set<std::string> seen;
  auto should = [&](const std::string& v) {
    if (frees.count(v) || seen.count(v)) return true;
    seen.insert(v);
    return false;
  };
  return rename_binders(f, {}, should, used);
}

Formula rename_apart(const Formula& f, const std::set<std::string>& avoid) {
  std::set<std::string> used = all_vars(f);
  used.insert(avoid.begin(), avoid.end());
  std::map<std::string, std::string> free_ren;
  for (const auto& v : free_vars(f))
    if (avoid.count(v)) {
      std::string nv = fresh_name(v, used);
      used.insert(nv);
      free_ren[v] = nv;
    }
  auto should = [&](const std::string& v) { return avoid.count(v) > 0; };
  return rename_binders(f, free_ren, should, used);
}

Term apply_subst(const Term& t, const Substitution& theta) {
  if (!t.is_var()) return t;
  auto it = theta.find(t.name);
  return it == theta.end() ? t : it->second;
}

Terms apply_subst(const Terms& ts, const Substitution& theta) {
  Terms out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(apply_subst(t, theta));
  return out;
}

Formula apply_subst(const Formula& f, const Substitution& theta) {
  if (theta.empty()) return f;
  if (f.is_atom()) return with_args(f, apply_subst(f.args(), theta));
  if (f.is_quantifier()) {
    const std::string& v = f.symbol();
    Substitution inner = theta;
    inner.erase(v);
    std::set<std::string> body_free = free_vars(f.body());
    for (const auto& [from, to] : inner)
      if (to.is_var() && to.name == v && body_free.count(from))
        throw Error(ErrorKind::Capture, "substitution capture: " + from + " -> " + v + " under binder " + v);
    Formula body = apply_subst(f.body(), inner);
    return f.op() == Op::Forall ? Formula::forall(v, body) : Formula::exists(v, body);
  }
  std::vector<Formula> kids;
  for (const auto& k : f.kids()) kids.push_back(apply_subst(k, theta));
  return rebuild(f, std::move(kids));
}

Formula universal_closure(const Formula& f) {
  auto fv = free_vars(f);
  return Formula::forall(std::vector<std::string>(fv.begin(), fv.end()), f);
}

// ---------------------------------------------------------------------------
// normal form for sentences

namespace {

Formula normalize_sp(const Formula& f, int depth, std::set<std::string>& used) {
  if (f.op() == Op::Pred) {
    if (depth != 0) return f;
    bool has_const = std::any_of(f.args().begin(), f.args().end(), [](const Term& t) { return t.is_const(); });
    if (!has_const) return f;
    Terms args = f.args();
    std::vector<std::string> vars;
    std::vector<Formula> guards;
    for (auto& t : args)
      if (t.is_const()) {
        std::string v = fresh_name("X", used);
        used.insert(v);
        guards.push_back(Formula::equal(Term::var(v), t));
        vars.push_back(v);
        t = Term::var(v);
      }
    return Formula::forall(vars, Formula::implies(Formula::conj(guards), Formula::pred(f.symbol(), args)));
  }
  if (f.is_atom() || f.is_bottom()) return f;
  if (f.op() == Op::Implies) {
    if (f.is_top()) return f;
    return Formula::implies(normalize_sp(f.lhs(), depth + 1, used), normalize_sp(f.rhs(), depth, used));
  }
  std::vector<Formula> kids;
  for (const auto& k : f.kids()) kids.push_back(normalize_sp(k, depth, used));
  return rebuild(f, std::move(kids));
}

}  // namespace

Formula sentence_normal_form(const Formula& f) {
  std::set<std::string> used = all_vars(f);
  return normalize_sp(f, 0, used);
}

bool is_sentence_normal_form(const Formula& f) {
  for (const auto& o : positive_occurrences(f))
    if (o.strictly_positive)
      for (const auto& t : o.atom.args())
        if (t.is_const()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// simplification

Formula simplify(const Formula& f, bool unique_names) {
  switch (f.op()) {
    case Op::Bottom:
    case Op::Pred:
    case Op::PredVar:
      return f;
    case Op::Equal: {
      const Term& a = f.args()[0];
      const Term& b = f.args()[1];
      if (a == b) return Formula::top();
      if (unique_names && a.is_const() && b.is_const()) return Formula::bottom();
      return f;
    }
    case Op::And: {
      Formula a = simplify(f.lhs(), unique_names);
      Formula b = simplify(f.rhs(), unique_names);
      if (a.is_bottom() || b.is_bottom()) return Formula::bottom();
      if (a.is_top()) return b;
      if (b.is_top()) return a;
      if (a == b) return a;
      return Formula::land(a, b);
    }
    case Op::Or: {
      Formula a = simplify(f.lhs(), unique_names);
      Formula b = simplify(f.rhs(), unique_names);
      if (a.is_top() || b.is_top()) return Formula::top();
      if (a.is_bottom()) return b;
      if (b.is_bottom()) return a;
      if (a == b) return a;
      return Formula::lor(a, b);
    }
    case Op::Implies: {
      if (f.is_top()) return f;
      Formula a = simplify(f.lhs(), unique_names);
      Formula b = simplify(f.rhs(), unique_names);
      if (a.is_bottom() || b.is_top()) return Formula::top();
      if (a.is_top()) return b;
      if (a == b) return Formula::top();
      if (b.is_bottom() && a.is_negation() && a.lhs().is_top()) return Formula::top();
      return Formula::implies(a, b);
    }
    case Op::Forall:
    case Op::Exists: {
      Formula body = simplify(f.body(), unique_names);
      if (body.is_top() || body.is_bottom()) return body;
      if (!free_vars(body).count(f.symbol())) return body;
      return f.op() == Op::Forall ? Formula::forall(f.symbol(), body) : Formula::exists(f.symbol(), body);
    }
    case Op::SoForall:
    case Op::SoExists: {
      Formula body = simplify(f.body(), unique_names);
      if (body.is_top() || body.is_bottom()) return body;
      return f.op() == Op::SoForall ? Formula::so_forall(f.pvars(), body) : Formula::so_exists(f.pvars(), body);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

struct Canon {
  int next_bound = 0;
  int next_free = 0;
  int next_ordinal = 0;
  std::map<std::string, std::string> free_map;
  std::map<std::string, int> ordinal;  // canonical name -> first-seen ordinal

  std::string free_name(const std::string& v) {
    auto it = free_map.find(v);
    if (it != free_map.end()) return it->second;
    std::string n = "F" + std::to_string(next_free++);
    free_map[v] = n;
    ordinal[n] = next_ordinal++;
    return n;
  }

  Terms terms(const Terms& ts, const std::map<std::string, std::string>& scope) {
    Terms out = ts;
    for (auto& t : out)
      if (t.is_var()) {
        auto it = scope.find(t.name);
        t.name = it != scope.end() ? it->second : free_name(t.name);
      }
    return out;
  }

  std::pair<int, std::string> key(const Term& t) {
    if (t.is_var()) return {ordinal.count(t.name) ? ordinal[t.name] : 0, ""};
    return {1 << 30, t.name};
  }

  Formula run(const Formula& f, std::map<std::string, std::string> scope) {
    if (f.op() == Op::Equal) {
      Terms a = terms(f.args(), scope);
      if (key(a[1]) < key(a[0])) std::swap(a[0], a[1]);
      return Formula::equal(a[0], a[1]);
    }
    if (f.is_atom()) return with_args(f, terms(f.args(), scope));
    if (f.is_quantifier()) {
      std::string n = "V" + std::to_string(next_bound++);
      ordinal[n] = next_ordinal++;
      scope[f.symbol()] = n;
      Formula body = run(f.body(), scope);
      return f.op() == Op::Forall ? Formula::forall(n, body) : Formula::exists(n, body);
    }
    std::vector<Formula> kids;
    for (const auto& k : f.kids()) kids.push_back(run(k, scope));
    return rebuild(f, std::move(kids));
  }
};

}  // namespace

Formula canonical(const Formula& f) {
  Canon c;
  return c.run(f, {});
}

// ---------------------------------------------------------------------------
// printing

std::string to_string(const Term& t) { return t.name; }

namespace {

enum Prec { kImp = 1, kOr = 2, kAnd = 3, kUnary = 4 };

int prec_of(const Formula& f) {
  switch (f.op()) {
    case Op::Implies:
      return (f.is_top() || f.is_negation()) ? kUnary : kImp;
    case Op::Or:
      return kOr;
    case Op::And:
      return kAnd;
    default:
      return kUnary;
  }
}

void print(std::ostream& os, const Formula& f, int ctx);

void print_args(std::ostream& os, const Terms& args) {
  if (args.empty()) return;
  os << '(';
  for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i].name;
  os << ')';
}

void print_inner(std::ostream& os, const Formula& f) {
  switch (f.op()) {
    case Op::Bottom:
      os << "false";
      return;
    case Op::Pred:
    case Op::PredVar:
      os << f.symbol();
      print_args(os, f.args());
      return;
    case Op::Equal:
      os << f.args()[0].name << " = " << f.args()[1].name;
      return;
    case Op::And:
      print(os, f.lhs(), kAnd);
      os << " & ";
      print(os, f.rhs(), kUnary);
      return;
    case Op::Or:
      print(os, f.lhs(), kOr);
      os << " | ";
      print(os, f.rhs(), kAnd);
      return;
    case Op::Implies:
      if (f.is_top()) {
        os << "true";
      } else if (f.is_negation()) {
        if (f.lhs().op() == Op::Equal) {
          os << f.lhs().args()[0].name << " != " << f.lhs().args()[1].name;
        } else {
          os << '-';
          print(os, f.lhs(), kUnary);
        }
      } else {
        print(os, f.lhs(), kOr);
        os << " -> ";
        print(os, f.rhs(), kImp);
      }
      return;
    case Op::Forall:
    case Op::Exists: {
      os << (f.op() == Op::Forall ? "forall" : "exists");
      Formula cur = f;
      while (cur.op() == f.op()) {
        os << ' ' << cur.symbol();
        cur = cur.body();
      }
      os << ' ';
      print(os, cur, kUnary);
      return;
    }
    case Op::SoForall:
    case Op::SoExists:
      os << (f.op() == Op::SoForall ? "FORALL" : "EXISTS");
      for (const auto& pv : f.pvars()) os << ' ' << pv.name << '/' << pv.arity;
      os << ' ';
      print(os, f.body(), kUnary);
      return;
  }
}

void print(std::ostream& os, const Formula& f, int ctx) {
  bool paren = prec_of(f) < ctx;
  if (paren) os << '(';
  print_inner(os, f);
  if (paren) os << ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(os, f, kImp);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

}  // namespace folf
