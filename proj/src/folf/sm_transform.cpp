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


#include "folf/sm_transform.hpp"

#include <algorithm>
#include <map>

#include "folf/deps.hpp"

namespace folf {

namespace {

std::vector<std::string> tuple_vars(int arity) {
  if (arity == 1) return {"X"};
  std::vector<std::string> out;
  for (int i = 1; i <= arity; ++i) out.push_back("X" + std::to_string(i));
  return out;
}

Terms as_terms(const std::vector<std::string>& vs) {
  Terms ts;
  for (const auto& v : vs) ts.push_back(Term::var(v));
  return ts;
}

std::map<std::string, std::size_t> index_of(const PredTuple& p) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) out[p.names[i]] = i;
  return out;
}

// Prefix used for the tuple quantified one level below `prefix`.
std::string next_prefix(const std::string& prefix) {
  static const std::vector<std::string> order{"__u_", "__v_", "__w_", "__s_", "__t_"};
  auto it = std::find(order.begin(), order.end(), prefix);
  if (it != order.end() && it + 1 != order.end()) return *(it + 1);
  return prefix.substr(0, prefix.size() - 1) + "v_";
}

std::string prefix_of(const PredTuple& u) {
  if (u.names.empty()) return "__u_";
  const std::string& n = u.names.front();
  auto pos = n.find('_', 2);
  return n.substr(0, pos + 1);
}

PredTuple tuple_with_prefix(const PredTuple& p, const std::string& prefix, const PredTuple* bound,
                            std::vector<PredVarDecl>& decls) {
  decls.clear();
  for (std::size_t i = 0; i < p.size(); ++i)
    decls.push_back({prefix + p.names[i], p.arities[i], bound ? bound->names[i] : std::string()});
  return PredTuple::variables(decls);
}

}  // namespace

PredList predicates_of(const Formula& f) {
  PredList out;
  for (const auto& [name, arity] : signature_of(f).predicates) out.emplace_back(name, arity);
  return out;
}

std::vector<PredVarDecl> pred_vars(const PredList& preds, const std::string& prefix,
                                   const std::vector<std::string>& bounds) {
  std::vector<PredVarDecl> out;
  for (std::size_t i = 0; i < preds.size(); ++i)
    out.push_back({prefix + preds[i].first, preds[i].second, i < bounds.size() ? bounds[i] : std::string()});
  return out;
}

PredTuple PredTuple::constants(const PredList& preds) {
  PredTuple t;
  t.is_var = false;
  for (const auto& [n, a] : preds) {
    t.names.push_back(n);
    t.arities.push_back(a);
  }
  return t;
}

PredTuple PredTuple::variables(const std::vector<PredVarDecl>& vars) {
  PredTuple t;
  for (const auto& v : vars) {
    t.names.push_back(v.name);
    t.arities.push_back(v.arity);
  }
  return t;
}

Formula PredTuple::atom(std::size_t i, const Terms& args) const {
  return is_var ? Formula::pred_var(names[i], args) : Formula::pred(names[i], args);
}

Formula tuple_le(const PredTuple& u, const PredTuple& p) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto xs = tuple_vars(u.arities[i]);
    parts.push_back(Formula::forall(xs, Formula::implies(u.atom(i, as_terms(xs)), p.atom(i, as_terms(xs)))));
  }
  return Formula::conj(parts);
}

Formula tuple_eq(const PredTuple& u, const PredTuple& p) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto xs = tuple_vars(u.arities[i]);
    parts.push_back(Formula::forall(xs, Formula::iff(u.atom(i, as_terms(xs)), p.atom(i, as_terms(xs)))));
  }
  return Formula::conj(parts);
}

Formula tuple_lt(const PredTuple& u, const PredTuple& p) {
  if (u.size() == 0) return Formula::bottom();
  return Formula::land(tuple_le(u, p), Formula::neg(tuple_eq(u, p)));
}

namespace {

Formula star_rec(const Formula& f, const std::map<std::string, std::size_t>& idx, const PredTuple& u) {
  switch (f.op()) {
    case Op::Pred:
      return u.atom(idx.at(f.symbol()), f.args());
    case Op::Equal:
    case Op::Bottom:
      return f;
    case Op::And:
      return Formula::land(star_rec(f.lhs(), idx, u), star_rec(f.rhs(), idx, u));
    case Op::Or:
      return Formula::lor(star_rec(f.lhs(), idx, u), star_rec(f.rhs(), idx, u));
    case Op::Implies:
      if (f.is_top()) return f;
      return Formula::land(Formula::implies(star_rec(f.lhs(), idx, u), star_rec(f.rhs(), idx, u)), f);
    case Op::Forall:
      return Formula::forall(f.symbol(), star_rec(f.body(), idx, u));
    case Op::Exists:
      return Formula::exists(f.symbol(), star_rec(f.body(), idx, u));
    default:
      throw Error(ErrorKind::NotFirstOrder, "star: second-order input");
  }
}

Formula nes_rec(const Formula& f, const std::map<std::string, std::size_t>& idx, const PredTuple& u) {
  switch (f.op()) {
    case Op::Pred:
      return Formula::land(f, Formula::neg(u.atom(idx.at(f.symbol()), f.args())));
    case Op::Equal:
    case Op::Bottom:
      return f;
    case Op::And:
      return Formula::land(nes_rec(f.lhs(), idx, u), nes_rec(f.rhs(), idx, u));
    case Op::Or:
      return Formula::lor(nes_rec(f.lhs(), idx, u), nes_rec(f.rhs(), idx, u));
    case Op::Implies:
      if (f.is_top()) return f;
      return Formula::land(Formula::implies(nes_rec(f.lhs(), idx, u), nes_rec(f.rhs(), idx, u)), f);
    case Op::Forall:
      return Formula::forall(f.symbol(), nes_rec(f.body(), idx, u));
    case Op::Exists:
      return Formula::exists(f.symbol(), nes_rec(f.body(), idx, u));
    default:
      throw Error(ErrorKind::NotFirstOrder, "nes: second-order input");
  }
}

}  // namespace

Formula star(const Formula& f, const PredTuple& p, const PredTuple& u) { return star_rec(f, index_of(p), u); }

Formula sm(const Formula& f) {
  if (!is_sentence(f)) throw Error(ErrorKind::NotSentence, "SM requires a sentence");
  PredList preds = predicates_of(f);
  if (preds.empty()) return f;
  PredTuple p = PredTuple::constants(preds);
  std::vector<PredVarDecl> decls;
  PredTuple u = tuple_with_prefix(p, "__u_", &p, decls);
  return Formula::land(f, Formula::neg(Formula::so_exists(decls, Formula::land(tuple_lt(u, p), star(f, p, u)))));
}

Formula nes(const Formula& f, const PredTuple& p, const PredTuple& u) { return nes_rec(f, index_of(p), u); }

Formula nonempty(const PredTuple& u) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto xs = tuple_vars(u.arities[i]);
    parts.push_back(Formula::exists(xs, u.atom(i, as_terms(xs))));
  }
  return Formula::disj(parts);
}

Formula edge_formula(const Formula& f, const PredTuple& p, const PredTuple& v, const PredTuple& u) {
  auto idx = index_of(p);
  std::vector<Formula> parts;
  for (const auto& d : depends_pairs(f)) {
    std::size_t i = idx.at(d.head.symbol()), j = idx.at(d.body.symbol());
    std::vector<std::string> zs;
    for (const auto* ts : {&d.head.args(), &d.body.args()})
      for (const auto& t : *ts)
        if (t.is_var() && std::find(zs.begin(), zs.end(), t.name) == zs.end()) zs.push_back(t.name);
    Formula body = Formula::land(Formula::land(v.atom(i, d.head.args()), u.atom(j, d.body.args())),
                                 Formula::neg(v.atom(j, d.body.args())));
    parts.push_back(Formula::exists(zs, body));
  }
  return Formula::disj(parts);
}

Formula sc(const Formula& f, const PredTuple& p, const PredTuple& u) {
  std::vector<PredVarDecl> decls;
  PredTuple v = tuple_with_prefix(p, next_prefix(prefix_of(u)), &u, decls);
  Formula inner = Formula::implies(Formula::land(tuple_lt(v, u), nonempty(v)), edge_formula(f, p, v, u));
  return Formula::land(nonempty(u), Formula::so_forall(decls, inner));
}

Formula loop_formula_2nd(const Formula& f, const PredTuple& p, const PredTuple& u) {
  if (u.size() == 0) return Formula::bottom();
  std::vector<PredVarDecl> decls;
  PredTuple v = tuple_with_prefix(p, next_prefix(prefix_of(u)), &u, decls);
  Formula inner = Formula::implies(Formula::land(tuple_le(v, u), sc(f, p, v)), edge_formula(f, p, v, u));
  return Formula::lor(sc(f, p, u), Formula::land(nonempty(u), Formula::so_forall(decls, inner)));
}

Formula prop2_form(const Formula& f, Prop2Variant variant) {
  if (!is_sentence(f)) throw Error(ErrorKind::NotSentence, "second-order loop form requires a sentence");
  PredList preds = predicates_of(f);
  if (preds.empty()) return f;
  Formula g = rectify(f);
  PredTuple p = PredTuple::constants(preds);
  std::vector<PredVarDecl> decls;
  PredTuple u = tuple_with_prefix(p, "__u_", &p, decls);
  Formula cond = variant == Prop2Variant::Nonempty ? nonempty(u) : loop_formula_2nd(g, p, u);
  Formula inner = Formula::implies(Formula::land(tuple_le(u, p), cond), Formula::neg(nes(g, p, u)));
  return Formula::land(f, Formula::so_forall(decls, inner));
}

}  // namespace folf
