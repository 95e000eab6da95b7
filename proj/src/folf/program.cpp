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

#include "folf/program.hpp"

#include <sstream>

namespace folf {

const char* to_string(RuleKind k) {
  switch (k) {
    case RuleKind::Nondisjunctive:
      return "nondisjunctive";
    case RuleKind::Disjunctive:
      return "disjunctive";
    case RuleKind::Extended:
      return "extended";
  }
  return "?";
}

Formula Rule::as_implication() const { return has_body ? Formula::implies(body, head) : head; }

RuleKind Program::kind() const {
  RuleKind k = RuleKind::Nondisjunctive;
  for (const auto& r : rules)
    if (static_cast<int>(r.kind) > static_cast<int>(k)) k = r.kind;
  return k;
}

namespace {

bool head_disjunction(const Formula& f, std::vector<Formula>& out) {
  if (f.op() == Op::Pred) {
    out.push_back(f);
    return true;
  }
  if (f.op() == Op::Or) return head_disjunction(f.lhs(), out) && head_disjunction(f.rhs(), out);
  return false;
}

// Every implication occurrence must lie inside a negative formula.
bool implications_guarded(const Formula& f) {
  if (f.op() == Op::Implies) return is_negative(f);
  for (const auto& k : f.kids())
    if (!implications_guarded(k)) return false;
  return true;
}

}  // namespace

Rule make_rule(Formula head, std::vector<Formula> body_items, bool has_body) {
  Rule r;
  r.head = head;
  r.has_body = has_body && !body_items.empty();
  r.body_items = std::move(body_items);
  r.body = Formula::conj(r.body_items);

  bool classical_body = true;
  for (const auto& item : r.body_items) {
    if (item.op() == Op::Pred || item.op() == Op::Equal)
      r.pos_body.push_back(item);
    else if (is_negative(item))
      r.neg_body.push_back(item);
    else
      classical_body = false;
  }
  std::vector<Formula> atoms;
  bool classical_head = head.is_bottom() || head_disjunction(head, atoms);
  if (classical_body && classical_head) {
    r.head_atoms = atoms;
    r.kind = atoms.size() == 1 ? RuleKind::Nondisjunctive : RuleKind::Disjunctive;
  } else {
    r.kind = RuleKind::Extended;
    r.pos_body.clear();
    r.neg_body.clear();
    if (!implications_guarded(head) || !implications_guarded(r.body))
      throw Error(ErrorKind::Kind, "implication outside negative formula in extended rule");
  }
  return r;
}

Signature signature_of(const Program& p) {
  Signature sig;
  for (const auto& r : p.rules) merge_signature(sig, signature_of(r.as_implication()));
  return sig;
}

Formula fol_representation(const Program& p) {
  std::vector<Formula> parts;
  for (const auto& r : p.rules) parts.push_back(universal_closure(r.as_implication()));
  return Formula::conj(parts);
}

namespace {

// Replaces constants of strictly positive head atoms by variables bound to
// them through `eqs`; one variable per distinct constant. With `distinct`,
// a variable repeated inside one atom is also split off, so every head atom
// has pairwise distinct variables.
Formula lift_head(const Formula& f, int depth, std::map<std::string, std::string>& var_for,
                  std::set<std::string>& used, std::vector<Formula>& eqs, bool distinct = false) {
  if (f.op() == Op::Pred) {
    if (depth != 0) return f;
    Terms args = f.args();
    std::set<std::string> seen;
    for (auto& t : args) {
      if (t.is_const()) {
        auto it = var_for.find(t.name);
        if (it == var_for.end()) {
          std::string v = fresh_name("X", used);
          used.insert(v);
          it = var_for.emplace(t.name, v).first;
          eqs.push_back(Formula::equal(Term::var(v), t));
        }
        t = Term::var(it->second);
      }
      if (distinct && !seen.insert(t.name).second) {
        std::string v = fresh_name(t.name, used);
        used.insert(v);
        eqs.push_back(Formula::equal(Term::var(v), t));
        t = Term::var(v);
      }
    }
    return Formula::pred(f.symbol(), args);
  }
  switch (f.op()) {
    case Op::And:
      return Formula::land(lift_head(f.lhs(), depth, var_for, used, eqs), lift_head(f.rhs(), depth, var_for, used, eqs));
    case Op::Or:
      return Formula::lor(lift_head(f.lhs(), depth, var_for, used, eqs), lift_head(f.rhs(), depth, var_for, used, eqs));
    case Op::Implies:
      if (f.is_top()) return f;
      return Formula::implies(lift_head(f.lhs(), depth + 1, var_for, used, eqs),
                              lift_head(f.rhs(), depth, var_for, used, eqs));
    case Op::Forall:
      return Formula::forall(f.symbol(), lift_head(f.body(), depth, var_for, used, eqs));
    case Op::Exists:
      return Formula::exists(f.symbol(), lift_head(f.body(), depth, var_for, used, eqs));
    default:
      return f;
  }
}

}  // namespace

Program program_normal_form(const Program& p) {
  Program out;
  out.queries = p.queries;
  for (const auto& r : p.rules) {
    std::set<std::string> used = all_vars(r.as_implication());
    std::map<std::string, std::string> var_for;
    std::vector<Formula> eqs;
    Formula head = lift_head(r.head, 0, var_for, used, eqs, r.kind != RuleKind::Extended);
    if (eqs.empty()) {
      out.rules.push_back(r);
      continue;
    }
    std::vector<Formula> items = eqs;
    items.insert(items.end(), r.body_items.begin(), r.body_items.end());
    out.rules.push_back(make_rule(head, items, true));
  }
  out.signature = signature_of(out);
  return out;
}

bool is_normal_form(const Program& p) {
  for (const auto& r : p.rules) {
    for (const auto& o : positive_occurrences(r.head))
      if (o.strictly_positive)
        for (const auto& t : o.atom.args())
          if (t.is_const()) return false;
    if (r.kind == RuleKind::Extended) continue;
    for (const auto& a : r.head_atoms) {
      std::set<std::string> seen;
      for (const auto& t : a.args())
        if (!seen.insert(t.name).second) return false;
    }
  }
  return true;
}

std::string to_string(const Rule& r) {
  std::ostringstream os;
  if (!r.head_atoms.empty()) {
    for (std::size_t i = 0; i < r.head_atoms.size(); ++i) os << (i ? " ; " : "") << to_string(r.head_atoms[i]);
  } else {
    os << to_string(r.head);
  }
  if (r.has_body) {
    os << " :- ";
    for (std::size_t i = 0; i < r.body_items.size(); ++i) {
      const Formula& item = r.body_items[i];
      os << (i ? ", " : "");
      if (item.is_negation() && item.lhs().op() != Op::Equal) {
        std::string inner = to_string(item.lhs());
        bool wrap = !(item.lhs().is_atom() || item.lhs().is_quantifier() || item.lhs().is_negation());
        os << "not " << (wrap ? "(" + inner + ")" : inner);
      } else {
        os << to_string(item);
      }
    }
  }
  os << '.';
  return os.str();
}

std::string to_string(const Program& p) {
  std::ostringstream os;
  for (const auto& r : p.rules) os << to_string(r) << '\n';
  for (const auto& q : p.queries) os << "#query " << to_string(q) << ".\n";
  return os.str();
}

}  // namespace folf
