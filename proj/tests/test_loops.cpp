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


#include "doctest.h"
#include "folf/loops.hpp"
#include "folf/parser.hpp"

using namespace folf;

namespace {

Formula F(const char* s) { return parse_formula(s); }

AtomSet Y(const char* facts) {
  AtomSet y;
  for (const auto& r : parse_program(facts).rules) y.push_back(r.head);
  return y;
}

bool same(const Formula& a, const Formula& b) { return canonical(simplify(a)) == canonical(simplify(b)); }

const char* kPqr = "p(X) :- q(X). q(Y) :- p(Y). p(X) :- not r(X).";
const char* kInsurance =
    "gotmarried(X,Y) :- spouse(X,Y).\n"
    "spouse(X,Y) :- gotmarried(X,Y), not divorced(X,Y).\n"
    "exists W discount(X,W) :- spouse(X,Y), not exists Z accident(X,Z).\n"
    "exists Y gotmarried(marge,Y).\n";

std::vector<std::string> strings(const std::vector<AtomSet>& loops) {
  std::vector<std::string> out;
  for (const auto& y : loops) out.push_back(to_string(y));
  return out;
}

}  // namespace

TEST_CASE("canonical atom sets ignore variable names") {
  CHECK(canonical_atoms(Y("p(A,B). p(B,A).")) == canonical_atoms(Y("p(V,U). p(U,V).")));
  CHECK(to_string(canonical_atoms(Y("q(W). p(W)."))) == "{p(Z), q(Z)}");
  CHECK(canonical_atoms(Y("p(A,B).")) != canonical_atoms(Y("p(A,A).")));
}

TEST_CASE("subsumption") {
  CHECK(subsumes(Y("p(X)."), Y("p(a).")));
  CHECK(subsumes(Y("p(X)."), Y("p(Y).")));
  CHECK_FALSE(subsumes(Y("p(a)."), Y("p(X).")));
  CHECK(subsumes(Y("p(X). p(Y)."), Y("p(Z).")));
  CHECK_FALSE(subsumes(Y("p(X)."), Y("p(Y). p(Z).")));
  auto th = subsumes(Y("p(X,Y)."), Y("p(a,b)."));
  REQUIRE(th);
  CHECK(th->at("X") == Term::constant("a"));
}

TEST_CASE("dependency edges and strong connectivity") {
  auto s = LoopSubject::of(parse_program(kPqr));
  CHECK(has_edge(s.pairs, F("p(a)"), F("q(a)")));
  CHECK_FALSE(has_edge(s.pairs, F("p(a)"), F("q(b)")));
  CHECK_FALSE(has_edge(s.pairs, F("p(a)"), F("r(a)")));
  CHECK(strongly_connected(s.pairs, Y("p(Z). q(Z).")));
  CHECK_FALSE(strongly_connected(s.pairs, Y("p(Z). q(W).")));
  CHECK_FALSE(strongly_connected(s.pairs, Y("p(Z). r(Z).")));
}

TEST_CASE("complete set for the p q r program") {
  auto r = complete_set(LoopSubject::of(parse_program(kPqr)), 6);
  CHECK(r.status == CompleteStatus::Complete);
  CHECK(strings(r.loops) == std::vector<std::string>{"{p(Z)}", "{q(Z)}", "{r(Z)}", "{p(Z), q(Z)}"});
}

TEST_CASE("unbounded loops exhaust the bound") {
  auto r = complete_set(LoopSubject::of(parse_program("p(X) :- p(Y).")), 6);
  CHECK(r.status == CompleteStatus::BoundExhausted);
  CHECK_FALSE(r.reason.empty());
  auto e = enumerate_loops(LoopSubject::of(parse_program("p(X) :- p(Y).")), 4, 4);
  // one loop per size: {p(Z)}, {p(Z),p(Z1)}, ...
  CHECK(e.loops.size() == 4);
  CHECK_FALSE(e.saturated);

  auto g = complete_set(LoopSubject::of(F("forall Y forall X (q(X) & p(Y) -> p(X))")), 6);
  CHECK(g.status == CompleteStatus::BoundExhausted);
}

TEST_CASE("complete sets for sentences and the insurance program") {
  auto r = complete_set(LoopSubject::of(F("forall X p(X)")), 6);
  CHECK(r.status == CompleteStatus::Complete);
  CHECK(strings(r.loops) == std::vector<std::string>{"{p(Z)}"});

  auto ins = complete_set(LoopSubject::of(parse_program(kInsurance)), 6);
  CHECK(ins.status == CompleteStatus::Complete);
  CHECK(strings(ins.loops) == std::vector<std::string>{"{accident(Z,Z1)}", "{discount(Z,Z1)}", "{divorced(Z,Z1)}",
                                                       "{gotmarried(Z,Z1)}", "{spouse(Z,Z1)}",
                                                       "{gotmarried(Z,Z1), spouse(Z,Z1)}"});
}

TEST_CASE("loop formulas of the p q r program") {
  Program p = parse_program(kPqr);
  CHECK(to_string(flf(p, Y("p(Z)."))) == "forall Z (p(Z) -> q(Z) | -r(Z))");
  CHECK(to_string(flf(p, Y("q(Z)."))) == "forall Z (q(Z) -> p(Z))");
  CHECK(same(flf(p, Y("r(Z).")), F("forall Z (r(Z) -> false)")));
  CHECK(to_string(flf(p, Y("p(Z). q(Z)."))) ==
        "forall Z (p(Z) & q(Z) -> q(Z) & Z != Z | p(Z) & Z != Z | -r(Z))");
}

TEST_CASE("loop formula of p(X) :- p(Y) for three atoms") {
  Formula got = flf(parse_program("p(X) :- p(Y)."), Y("p(X1). p(X2). p(X3)."));
  CHECK(same(got, F("forall X1 X2 X3 (p(X1) & p(X2) & p(X3) -> exists Y (p(Y) & Y != X1 & Y != X2 & Y != X3))")));
}

TEST_CASE("loop formula of a program outside normal form") {
  Formula got = flf(parse_program("p(a) :- p(b). p(b) :- p(c)."), Y("p(X)."));
  CHECK(same(got, F("forall X (p(X) -> (X = a & p(b) & X != b) | (X = b & p(c) & X != c))")));
}

TEST_CASE("repeated head variables support through equality") {
  Program p = parse_program("q(Y,Y).");
  CHECK(same(flf(p, Y("q(Z,Z1).")), F("forall Z Z1 (q(Z,Z1) -> Z1 = Z)")));
  CHECK(same(flf(p, Y("q(Z,Z).")), F("forall Z (q(Z,Z) -> true)")));
}

TEST_CASE("disjunctive loop formula") {
  Program p = parse_program("p(X,Y) ; p(Y,Z) :- q(X).");
  Formula want = F(
      "forall U V (p(U,V) -> exists Z (q(U) & -(p(V,Z) & -(V = U & Z = V))) | "
      "exists X (q(X) & -(p(X,U) & -(X = U & U = V))))");
  CHECK(same(flf(p, Y("p(U,V).")), want));
  CHECK_THROWS(fes_nondisjunctive(p, Y("p(U,V).")));
}

TEST_CASE("extended support formulas") {
  Program p = parse_program(kPqr);
  CHECK(same(efes(p, Y("p(Z).")), F("exists X (q(X) & -(p(X) & X != Z)) | exists X (-r(X) & -(p(X) & X != Z))")));
  CHECK(same(efes(p, Y("q(Z).")), F("exists Y (p(Y) & -(q(Y) & Y != Z))")));
  CHECK(efes(p, Y("r(Z).")).op() == Op::Bottom);
  CHECK(same(efes(p, Y("p(Z). q(Z).")),
             F("exists X (q(X) & X != Z & -(p(X) & X != Z)) | exists Y (p(Y) & Y != Z & -(q(Y) & Y != Z)) | "
               "exists X (-r(X) & -(p(X) & X != Z))")));
}

TEST_CASE("insurance loop formulas") {
  Program p = parse_program(kInsurance);
  CHECK(same(flf(p, Y("divorced(U,V).")), F("forall U V (divorced(U,V) -> false)")));
  CHECK(same(flf(p, Y("accident(U,V).")), F("forall U V (accident(U,V) -> false)")));
  CHECK(same(flf(p, Y("discount(U,V).")),
             F("forall U V (discount(U,V) -> exists X Y (spouse(X,Y) & -exists Z accident(X,Z) & "
               "-exists W (discount(X,W) & -(X = U & W = V))))")));
  CHECK(same(flf(p, Y("gotmarried(U,V).")),
             F("forall U V (gotmarried(U,V) -> exists X Y (spouse(X,Y) & -(gotmarried(X,Y) & -(X = U & Y = V))) | "
               "-exists Y (gotmarried(marge,Y) & -(marge = U & Y = V)))")));
  CHECK(same(flf(p, Y("spouse(U,V).")),
             F("forall U V (spouse(U,V) -> exists X Y (gotmarried(X,Y) & -divorced(X,Y) & "
               "-(spouse(X,Y) & -(X = U & Y = V))))")));
}

TEST_CASE("sentence loop formulas use the negated support") {
  Formula f = F("forall X p(X)");
  CHECK(to_string(flf(f, Y("p(Z)."))) == "forall Z (p(Z) -> -forall X (p(X) & X != Z))");
  CHECK(same(nfes(F("-q(X)"), Y("q(Z).")), F("-(q(X) & X != Z) & -q(X)")));
  CHECK(nfes(F("-q(X)"), Y("q(Z)."), true) == F("-q(X)"));
}

TEST_CASE("renaming a rule apart keeps its shape") {
  Program p = parse_program("p(X) :- q(X,Y), not r(Y).");
  Rule r = rename_rule_apart(p.rules.front(), {"X", "Y"});
  CHECK(r.body_items.size() == 2);
  CHECK(r.head_atoms.size() == 1);
  auto fv = free_vars(r.as_implication());
  CHECK_FALSE(fv.count("X"));
  CHECK_FALSE(fv.count("Y"));
}
