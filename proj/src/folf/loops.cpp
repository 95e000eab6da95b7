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


#include "folf/loops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace folf {

namespace {

constexpr int kConstBase = 1 << 20;

// Encoded atom: predicate index followed by arguments; variables are small
// ids, constants kConstBase + index.
using CAtom = std::vector<int>;
using CSet = std::vector<CAtom>;

struct Codec {
  std::vector<std::string> preds;
  std::vector<int> arity;
  std::vector<std::string> consts;
  std::map<std::string, int> pred_id, const_id;

  explicit Codec(const Signature& sig) {
    for (const auto& [p, a] : sig.predicates) {
      pred_id[p] = static_cast<int>(preds.size());
      preds.push_back(p);
      arity.push_back(a);
    }
    for (const auto& c : sig.constants) {
      const_id[c] = static_cast<int>(consts.size());
      consts.push_back(c);
    }
  }

  static std::string var_name(int v) { return v == 0 ? "Z" : "Z" + std::to_string(v); }

  Formula decode(const CAtom& a) const {
    Terms args;
    for (std::size_t i = 1; i < a.size(); ++i)
      args.push_back(a[i] >= kConstBase ? Term::constant(consts[a[i] - kConstBase]) : Term::var(var_name(a[i])));
    return Formula::pred(preds[a[0]], args);
  }

  AtomSet decode(const CSet& s) const {
    AtomSet out;
    for (const auto& a : s) out.push_back(decode(a));
    return out;
  }
};

int count_vars(const CSet& s) {
  int k = 0;
  for (const auto& a : s)
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i] < kConstBase) k = std::max(k, a[i] + 1);
  return k;
}

CSet relabel(const CSet& s, const std::vector<int>& perm) {
  CSet out = s;
  for (auto& a : out)
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i] < kConstBase) a[i] = perm[a[i]];
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Variables numbered 0..k-1 in order of first occurrence after sorting.
CSet compact(const CSet& s) {
  std::map<int, int> ren;
  CSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& a : sorted)
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i] < kConstBase && !ren.count(a[i])) {
        int n = static_cast<int>(ren.size());
        ren[a[i]] = n;
      }
  int top = 0;
  for (const auto& [v, _] : ren) top = std::max(top, v + 1);
  std::vector<int> perm(top, 0);
  for (const auto& [v, n] : ren) perm[v] = n;
  return relabel(s, perm);
}

// Smallest relabelling over all variable permutations (first-occurrence
// order for sets with many variables).
CSet canonical(const CSet& s) {
  CSet base = compact(s);
  int k = count_vars(base);
  if (k <= 1 || k > 7) return base;
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  CSet best = base;
  while (std::next_permutation(perm.begin(), perm.end())) {
    CSet c = relabel(base, perm);
    if (c < best) best = c;
  }
  return best;
}

struct CPair {
  CAtom head, body;  // template variables numbered per pair
  int nvars = 0;
};

std::vector<CPair> encode_pairs(const Codec& codec, const std::vector<DepPair>& pairs) {
  std::vector<CPair> out;
  for (const auto& d : pairs) {
    CPair cp;
    std::map<std::string, int> ids;
    auto enc = [&](const Formula& atom) {
      CAtom a{codec.pred_id.at(atom.symbol())};
      for (const auto& t : atom.args()) {
        if (t.is_const()) {
          a.push_back(kConstBase + codec.const_id.at(t.name));
        } else {
          auto [it, _] = ids.emplace(t.name, static_cast<int>(ids.size()));
          a.push_back(it->second);
        }
      }
      return a;
    };
    cp.head = enc(d.head);
    cp.body = enc(d.body);
    cp.nvars = static_cast<int>(ids.size());
    out.push_back(cp);
  }
  return out;
}

bool cmatch(const CAtom& pat, const CAtom& a, std::vector<int>& theta) {
  if (pat[0] != a[0] || pat.size() != a.size()) return false;
  for (std::size_t i = 1; i < pat.size(); ++i) {
    if (pat[i] >= kConstBase) {
      if (pat[i] != a[i]) return false;
    } else if (theta[pat[i]] < 0) {
      theta[pat[i]] = a[i];
    } else if (theta[pat[i]] != a[i]) {
      return false;
    }
  }
  return true;
}

bool cedge(const std::vector<CPair>& pairs, const CAtom& a, const CAtom& b) {
  for (const auto& p : pairs) {
    std::vector<int> theta(p.nvars, -1);
    if (cmatch(p.head, a, theta) && cmatch(p.body, b, theta)) return true;
  }
  return false;
}

bool cstrong(const std::vector<CPair>& pairs, const CSet& s) {
  std::size_t n = s.size();
  if (n <= 1) return true;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) adj[i][j] = cedge(pairs, s[i], s[j]);
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && (forward ? adj[v][w] : adj[w][v])) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return reach(true) && reach(false);
}

// All atoms whose variables are drawn from 0..k-1 plus fresh ones numbered
// from k upwards in order of first use, with at most max_vars in total.
void atoms_over(const Codec& codec, int k, int max_vars, const std::function<void(const CAtom&)>& emit) {
  for (std::size_t p = 0; p < codec.preds.size(); ++p) {
    CAtom a{static_cast<int>(p)};
    std::function<void(int, int)> rec = [&](int pos, int next) {
      if (pos == codec.arity[p]) {
        emit(a);
        return;
      }
      for (std::size_t c = 0; c < codec.consts.size(); ++c) {
        a.push_back(kConstBase + static_cast<int>(c));
        rec(pos + 1, next);
        a.pop_back();
      }
      for (int v = 0; v <= next && v < max_vars; ++v) {
        a.push_back(v);
        rec(pos + 1, v == next ? next + 1 : next);
        a.pop_back();
      }
    };
    rec(0, k);
  }
}

std::optional<Substitution> subsumes_rec(const AtomSet& y1, const AtomSet& y2, std::size_t i, Substitution& theta,
                                         std::vector<int>& covered, int uncovered) {
  if (static_cast<int>(y1.size() - i) < uncovered) return std::nullopt;
  if (i == y1.size()) return uncovered == 0 ? std::optional<Substitution>(theta) : std::nullopt;
  const Formula& a = y1[i];
  for (std::size_t j = 0; j < y2.size(); ++j) {
    const Formula& b = y2[j];
    if (a.symbol() != b.symbol() || a.args().size() != b.args().size()) continue;
    Substitution ext = theta;
    bool ok = true;
    for (std::size_t k = 0; k < a.args().size() && ok; ++k) {
      const Term& s = a.args()[k];
      const Term& t = b.args()[k];
      if (s.is_const()) {
        ok = s == t;
      } else {
        auto it = ext.find(s.name);
        if (it == ext.end())
          ext.emplace(s.name, t);
        else
          ok = it->second == t;
      }
    }
    if (!ok) continue;
    bool fresh = covered[j]++ == 0;
    auto r = subsumes_rec(y1, y2, i + 1, ext, covered, uncovered - (fresh ? 1 : 0));
    --covered[j];
    if (r) return r;
  }
  return std::nullopt;
}

bool match_atom(const Formula& pat, const Formula& a, Substitution& theta) {
  if (pat.symbol() != a.symbol() || pat.args().size() != a.args().size()) return false;
  for (std::size_t i = 0; i < pat.args().size(); ++i) {
    const Term& s = pat.args()[i];
    const Term& t = a.args()[i];
    if (s.is_const()) {
      if (s != t) return false;
      continue;
    }
    auto it = theta.find(s.name);
    if (it == theta.end())
      theta.emplace(s.name, t);
    else if (it->second != t)
      return false;
  }
  return true;
}

// /\_{p(t') in Y} t != t' for the predicate of `atom`.
std::vector<Formula> inequalities(const Formula& atom, const AtomSet& y) {
  std::vector<Formula> out;
  for (const auto& b : y)
    if (b.symbol() == atom.symbol() && b.args().size() == atom.args().size())
      out.push_back(Formula::tuple_neq(atom.args(), b.args()));
  return out;
}

Formula exists_outside(const Formula& body, const std::set<std::string>& scope_vars, const AtomSet& y) {
  std::set<std::string> yv = vars_of(y);
  std::vector<std::string> zs;
  for (const auto& v : scope_vars)
    if (!yv.count(v)) zs.push_back(v);
  return Formula::exists(zs, body);
}

std::set<std::string> free_vars_all(const std::vector<Formula>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) {
    auto v = free_vars(f);
    out.insert(v.begin(), v.end());
  }
  return out;
}

}  // namespace

std::set<std::string> vars_of(const AtomSet& y) {
  std::set<std::string> out;
  for (const auto& a : y)
    for (const auto& t : a.args())
      if (t.is_var()) out.insert(t.name);
  return out;
}

AtomSet canonical_atoms(const AtomSet& y) {
  Signature sig;
  for (const auto& a : y) {
    sig.predicates[a.symbol()] = static_cast<int>(a.args().size());
    for (const auto& t : a.args())
      if (t.is_const()) sig.constants.insert(t.name);
  }
  Codec codec(sig);
  std::map<std::string, int> ids;
  CSet s;
  for (const auto& a : y) {
    CAtom c{codec.pred_id.at(a.symbol())};
    for (const auto& t : a.args()) {
      if (t.is_const()) {
        c.push_back(kConstBase + codec.const_id.at(t.name));
      } else {
        auto [it, _] = ids.emplace(t.name, static_cast<int>(ids.size()));
        c.push_back(it->second);
      }
    }
    s.push_back(c);
  }
  return codec.decode(canonical(s));
}

std::string to_string(const AtomSet& y) {
  std::string out = "{";
  for (std::size_t i = 0; i < y.size(); ++i) out += (i ? ", " : "") + to_string(y[i]);
  return out + "}";
}

std::optional<Substitution> subsumes(const AtomSet& y1, const AtomSet& y2) {
  AtomSet a = y1, b = y2;
  auto less = [](const Formula& x, const Formula& y) { return to_string(x) < to_string(y); };
  std::sort(b.begin(), b.end(), less);
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::sort(a.begin(), a.end(), less);
  a.erase(std::unique(a.begin(), a.end()), a.end());
  Substitution theta;
  std::vector<int> covered(b.size(), 0);
  return subsumes_rec(a, b, 0, theta, covered, static_cast<int>(b.size()));
}

LoopSubject LoopSubject::of(const Program& p) { return {depends_pairs(p), p.signature}; }

LoopSubject LoopSubject::of(const Formula& f) { return {depends_pairs(f), signature_of(f)}; }

bool has_edge(const std::vector<DepPair>& pairs, const Formula& a, const Formula& b) {
  for (const auto& d : pairs) {
    Substitution theta;
    if (match_atom(d.head, a, theta) && match_atom(d.body, b, theta)) return true;
  }
  return false;
}

bool strongly_connected(const std::vector<DepPair>& pairs, const AtomSet& y) {
  Signature sig;
  for (const auto& a : y) {
    sig.predicates[a.symbol()] = static_cast<int>(a.args().size());
    for (const auto& t : a.args())
      if (t.is_const()) sig.constants.insert(t.name);
  }
  std::vector<DepPair> relevant;
  for (const auto& d : pairs) {
    if (!sig.predicates.count(d.head.symbol()) || !sig.predicates.count(d.body.symbol())) continue;
    bool ok = true;
    for (const auto* atom : {&d.head, &d.body})
      for (const auto& t : atom->args())
        if (t.is_const() && !sig.constants.count(t.name)) ok = false;
    if (ok) relevant.push_back(d);
  }
  for (const auto& a : y)
    for (const auto& d : relevant) (void)d, (void)a;
  Codec codec(sig);
  auto cp = encode_pairs(codec, relevant);
  std::map<std::string, int> ids;
  CSet s;
  for (const auto& a : y) {
    CAtom c{codec.pred_id.at(a.symbol())};
    for (const auto& t : a.args()) {
      if (t.is_const()) {
        c.push_back(kConstBase + codec.const_id.at(t.name));
      } else {
        auto [it, _] = ids.emplace(t.name, static_cast<int>(ids.size()));
        c.push_back(it->second);
      }
    }
    s.push_back(c);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return cstrong(cp, s);
}

LoopEnumeration enumerate_loops(const LoopSubject& subject, int max_atoms, int max_vars, std::size_t max_sets) {
  LoopEnumeration out;
  Codec codec(subject.signature);
  auto pairs = encode_pairs(codec, subject.pairs);
  std::set<CSet> level;
  atoms_over(codec, 0, max_vars, [&](const CAtom& a) { level.insert(canonical(CSet{a})); });
  for (int size = 1; size <= max_atoms && !level.empty(); ++size) {
    for (const auto& s : level)
      if (cstrong(pairs, s)) out.loops.push_back(codec.decode(s));
    if (size == max_atoms) break;
    std::set<CSet> next;
    for (const auto& s : level) {
      int k = count_vars(s);
      atoms_over(codec, k, max_vars, [&](const CAtom& b) {
        if (std::find(s.begin(), s.end(), b) != s.end()) return;
        bool adjacent = false;
        for (const auto& a : s)
          if (cedge(pairs, a, b) || cedge(pairs, b, a)) {
            adjacent = true;
            break;
          }
        if (!adjacent) return;
        CSet t = s;
        t.push_back(b);
        next.insert(canonical(t));
      });
      if (max_sets && next.size() > max_sets) {
        out.truncated = true;
        return out;
      }
    }
    level = std::move(next);
    if (level.empty()) out.saturated = true;
  }
  return out;
}

const char* to_string(CompleteStatus s) { return s == CompleteStatus::Complete ? "complete" : "bound-exhausted"; }

std::vector<AtomSet> prune_subsumed(const std::vector<AtomSet>& loops) {
  std::vector<AtomSet> uniq;
  for (const auto& y : loops) {
    AtomSet c = canonical_atoms(y);
    if (std::find(uniq.begin(), uniq.end(), c) == uniq.end()) uniq.push_back(c);
  }
  std::vector<AtomSet> out;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < uniq.size() && !redundant; ++j)
      if (i != j && subsumes(uniq[j], uniq[i]) && !subsumes(uniq[i], uniq[j])) redundant = true;
    if (!redundant) out.push_back(uniq[i]);
  }
  std::stable_sort(out.begin(), out.end(), [](const AtomSet& a, const AtomSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return to_string(a) < to_string(b);
  });
  return out;
}

CompleteSetReport complete_set(const LoopSubject& s, int bound) {
  constexpr std::size_t kMaxSets = 20000;
  CompleteSetReport report;
  auto sccs = predicate_sccs(s.signature, s.pairs);
  std::map<std::string, std::size_t> comp;
  for (std::size_t i = 0; i < sccs.size(); ++i)
    for (const auto& p : sccs[i]) comp[p] = i;

  std::vector<AtomSet> loops;
  for (const auto& [p, arity] : s.signature.predicates) {
    Terms args;
    for (int i = 0; i < arity; ++i) args.push_back(Term::var(Codec::var_name(i)));
    loops.push_back({Formula::pred(p, args)});
  }

  std::string failure;
  for (const auto& d : s.pairs) {
    if (comp[d.head.symbol()] != comp[d.body.symbol()]) continue;
    bool ok = true;
    for (const auto& t : d.head.args())
      if (t.is_const()) ok = false;
    std::set<std::string> hv = vars_of_terms(d.head.args()), bv = vars_of_terms(d.body.args());
    for (const auto& v : hv)
      if (!bv.count(v)) ok = false;
    if (!ok) {
      failure = "dependency " + to_string(d.head) + " on " + to_string(d.body) +
                " inside a cycle does not keep its variables";
      break;
    }
  }

  if (!failure.empty()) {
    auto e = enumerate_loops(s, bound, bound, kMaxSets);
    for (const auto& y : e.loops)
      if (y.size() > 1) loops.push_back(y);
    report.loops = loops.size() <= 500 ? prune_subsumed(loops) : loops;
    report.status = CompleteStatus::BoundExhausted;
    report.reason = failure;
    return report;
  }

  report.status = CompleteStatus::Complete;
  for (const auto& scc : sccs) {
    LoopSubject sub;
    int max_arity = 0;
    for (const auto& p : scc) {
      int a = s.signature.predicates.at(p);
      sub.signature.predicates[p] = a;
      max_arity = std::max(max_arity, a);
    }
    for (const auto& d : s.pairs)
      if (comp[d.head.symbol()] == comp[scc.front()] && comp[d.body.symbol()] == comp[scc.front()])
        sub.pairs.push_back(d);
    if (sub.pairs.empty()) continue;
    for (const auto* atom : {&sub.pairs.front().head}) (void)atom;
    for (const auto& d : sub.pairs)
      for (const auto* atom : {&d.head, &d.body})
        for (const auto& t : atom->args())
          if (t.is_const()) sub.signature.constants.insert(t.name);
    sub.signature.constants.insert(s.signature.constants.begin(), s.signature.constants.end());
    auto e = enumerate_loops(sub, bound, max_arity, kMaxSets);
    for (const auto& y : e.loops)
      if (y.size() > 1) loops.push_back(y);
    if (!e.saturated || e.truncated) {
      report.status = CompleteStatus::BoundExhausted;
      report.reason = "loops of component {" + scc.front() + ", ..} not saturated within " + std::to_string(bound) +
                      " atoms";
    }
  }
  report.loops = prune_subsumed(loops);
  return report;
}

// ---------------------------------------------------------------------------
// External support formulas

Rule rename_rule_apart(const Rule& r, const std::set<std::string>& avoid) {
  Formula ren = rename_apart(r.as_implication(), avoid);
  if (!r.has_body) return make_rule(ren, {}, false);
  std::size_t n = r.body_items.size();
  std::vector<Formula> items(n);
  Formula cur = ren.lhs();
  for (std::size_t i = n - 1; i > 0; --i) {
    items[i] = cur.rhs();
    cur = cur.lhs();
  }
  items[0] = cur;
  return make_rule(ren.rhs(), items, true);
}

Formula fes_nondisjunctive(const Program& p, const AtomSet& y) {
  for (const auto& r : p.rules)
    if (r.kind != RuleKind::Nondisjunctive)
      throw Error(ErrorKind::Kind, "external support formula (3) needs a nondisjunctive program");
  std::set<std::string> yv = vars_of(y);
  std::vector<Formula> disjuncts;
  for (const auto& r0 : p.rules) {
    if (r0.head_atoms.empty()) continue;
    Rule r = rename_rule_apart(r0, yv);
    const Formula& head = r.head_atoms.front();
    for (const auto& target : y) {
      Substitution theta;
      if (!match_atom(head, target, theta)) continue;
      std::vector<Formula> parts;
      std::vector<Formula> scope{apply_subst(head, theta)};
      for (const auto& b : r.pos_body) parts.push_back(apply_subst(b, theta));
      for (const auto& n : r.neg_body) parts.push_back(apply_subst(n, theta));
      scope.insert(scope.end(), parts.begin(), parts.end());
      for (const auto& b : r.pos_body)
        if (b.op() == Op::Pred)
          for (const auto& ne : inequalities(apply_subst(b, theta), y)) parts.push_back(ne);
      Formula d = exists_outside(Formula::conj(parts), free_vars_all(scope), y);
      if (std::find(disjuncts.begin(), disjuncts.end(), d) == disjuncts.end()) disjuncts.push_back(d);
    }
  }
  return Formula::disj(disjuncts);
}

Formula fes_disjunctive(const Program& p, const AtomSet& y, ThetaMode mode) {
  for (const auto& r : p.rules)
    if (r.kind == RuleKind::Extended)
      throw Error(ErrorKind::Kind, "external support formula (5) needs a disjunctive program");
  std::set<std::string> yv = vars_of(y);
  std::vector<Term> yterms;
  for (const auto& a : y)
    for (const auto& t : a.args())
      if (std::find(yterms.begin(), yterms.end(), t) == yterms.end()) yterms.push_back(t);

  std::vector<Formula> disjuncts;
  for (const auto& r0 : p.rules) {
    Rule r = rename_rule_apart(r0, yv);
    std::set<std::string> head_vars;
    for (const auto& a : r.head_atoms)
      for (const auto& t : a.args())
        if (t.is_var()) head_vars.insert(t.name);

    std::vector<Substitution> thetas;
    auto add_theta = [&](const Substitution& th) {
      if (std::find(thetas.begin(), thetas.end(), th) == thetas.end()) thetas.push_back(th);
    };
    if (mode == ThetaMode::MostGeneral) {
      for (const auto& a : r.head_atoms)
        for (const auto& target : y) {
          Substitution th;
          if (!match_atom(a, target, th)) continue;
          for (const auto& v : head_vars) th.emplace(v, Term::var(v));
          add_theta(th);
        }
    } else {
      std::vector<std::string> hv(head_vars.begin(), head_vars.end());
      Substitution th;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == hv.size()) {
          for (const auto& a : r.head_atoms)
            if (std::find(y.begin(), y.end(), apply_subst(a, th)) != y.end()) {
              add_theta(th);
              return;
            }
          return;
        }
        th[hv[i]] = Term::var(hv[i]);
        rec(i + 1);
        for (const auto& t : yterms) {
          th[hv[i]] = t;
          rec(i + 1);
        }
        th.erase(hv[i]);
      };
      rec(0);
    }

    for (const auto& th : thetas) {
      std::vector<Formula> head_inst;
      for (const auto& a : r.head_atoms) {
        Formula ai = apply_subst(a, th);
        if (std::find(head_inst.begin(), head_inst.end(), ai) == head_inst.end()) head_inst.push_back(ai);
      }
      std::vector<Formula> parts;
      for (const auto& b : r.pos_body) parts.push_back(apply_subst(b, th));
      for (const auto& n : r.neg_body) parts.push_back(apply_subst(n, th));
      std::vector<Formula> scope = head_inst;
      scope.insert(scope.end(), parts.begin(), parts.end());
      for (const auto& b : r.pos_body)
        if (b.op() == Op::Pred)
          for (const auto& ne : inequalities(apply_subst(b, th), y)) parts.push_back(ne);
      std::vector<Formula> outside;
      for (const auto& a : head_inst) {
        std::vector<Formula> c{a};
        for (const auto& ne : inequalities(a, y)) c.push_back(ne);
        outside.push_back(Formula::conj(c));
      }
      parts.push_back(Formula::neg(Formula::disj(outside)));
      Formula d = exists_outside(Formula::conj(parts), free_vars_all(scope), y);
      if (std::find(disjuncts.begin(), disjuncts.end(), d) == disjuncts.end()) disjuncts.push_back(d);
    }
  }
  return Formula::disj(disjuncts);
}

Formula nfes(const Formula& f, const AtomSet& y, bool negative_shortcut) {
  if (negative_shortcut && f.op() != Op::Pred && is_negative(f)) return f;
  switch (f.op()) {
    case Op::Pred: {
      std::vector<Formula> c{f};
      for (const auto& ne : inequalities(f, y)) c.push_back(ne);
      return Formula::conj(c);
    }
    case Op::Equal:
    case Op::Bottom:
      return f;
    case Op::And:
      return Formula::land(nfes(f.lhs(), y, negative_shortcut), nfes(f.rhs(), y, negative_shortcut));
    case Op::Or:
      return Formula::lor(nfes(f.lhs(), y, negative_shortcut), nfes(f.rhs(), y, negative_shortcut));
    case Op::Implies:
      if (f.is_top()) return f;
      return Formula::land(Formula::implies(nfes(f.lhs(), y, negative_shortcut), nfes(f.rhs(), y, negative_shortcut)),
                           f);
    case Op::Forall:
      return Formula::forall(f.symbol(), nfes(f.body(), y, negative_shortcut));
    case Op::Exists:
      return Formula::exists(f.symbol(), nfes(f.body(), y, negative_shortcut));
    default:
      throw Error(ErrorKind::NotFirstOrder, "NFES of a second-order formula");
  }
}

Formula efes(const Program& p, const AtomSet& y) {
  std::set<std::string> yv = vars_of(y);
  std::set<std::string> ypreds;
  for (const auto& a : y) ypreds.insert(a.symbol());
  std::vector<Formula> disjuncts;
  for (const auto& r0 : p.rules) {
    bool relevant = false;
    for (const auto& o : positive_occurrences(r0.head))
      if (o.strictly_positive && ypreds.count(o.atom.symbol())) relevant = true;
    if (!relevant) continue;
    Rule r = rename_rule_apart(r0, yv);
    Formula not_head = Formula::neg(nfes(r.head, y, true));
    Formula body = r.has_body ? Formula::land(nfes(r.body, y, true), not_head) : not_head;
    std::set<std::string> fv = free_vars(r.as_implication());
    Formula d = exists_outside(body, fv, y);
    if (std::find(disjuncts.begin(), disjuncts.end(), d) == disjuncts.end()) disjuncts.push_back(d);
  }
  return Formula::disj(disjuncts);
}

Formula flf(const Program& p, const AtomSet& y) {
  Formula support;
  switch (p.kind()) {
    case RuleKind::Nondisjunctive:
      support = fes_nondisjunctive(is_normal_form(p) ? p : program_normal_form(p), y);
      break;
    case RuleKind::Disjunctive:
      support = fes_disjunctive(is_normal_form(p) ? p : program_normal_form(p), y);
      break;
    case RuleKind::Extended:
      support = efes(p, y);
      break;
  }
  return universal_closure(Formula::implies(Formula::conj(y), support));
}

Formula flf(const Formula& f, const AtomSet& y) {
  Formula g = rename_apart(rectify(f), vars_of(y));
  return universal_closure(Formula::implies(Formula::conj(y), Formula::neg(nfes(g, y))));
}

}  // namespace folf
