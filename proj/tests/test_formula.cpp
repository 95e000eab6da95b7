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
#include "folf/formula.hpp"
#include "folf/parser.hpp"
#include "folf/program.hpp"
#include "folf/sm_transform.hpp"

using namespace folf;

namespace {
Formula F(const char* s) { return parse_formula(s); }
std::set<std::string> S(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }
}  // namespace

TEST_CASE("free variables") {
  CHECK(free_vars(F("p(X) & exists Y q(Y)")) == S({"X"}));
  CHECK(free_vars(Formula::bottom()).empty());
  CHECK(free_vars(F("forall X (q(X) & p(Y) -> p(X))")) == S({"Y"}));
}

TEST_CASE("rectify renames repeated and clashing binders") {
  CHECK(to_string(rectify(F("forall X p(X) & forall X q(X)"))) == "forall X p(X) & forall X1 q(X1)");
  CHECK(rectify(F("p(X) -> p(X)")) == F("p(X) -> p(X)"));
  CHECK(to_string(rectify(F("exists X p(X) & q(X)"))) == "exists X1 p(X1) & q(X)");
  Formula g = rectify(F("forall X (p(X) & exists X q(X)) & forall X r(X)"));
  CHECK(is_rectified(g));
  CHECK(rectify(g) == g);
}

TEST_CASE("negative formulas") {
  CHECK(is_negative(F("-p(X)")));
  CHECK_FALSE(is_negative(F("p(X)")));
  CHECK(is_negative(F("-exists Z accident(X,Z)")));
  CHECK(is_negative(F("X = Y")));
  CHECK_FALSE(is_negative(F("-p(X) -> q(X)")));
}

TEST_CASE("substitution") {
  Substitution th{{"X", Term::constant("a")}};
  CHECK(apply_subst(F("p(X,Y)"), th) == F("p(a,Y)"));
  CHECK(apply_subst(F("exists Z q(Z,X)"), {{"X", Term::var("Z1")}}) == F("exists Z q(Z,Z1)"));
  CHECK(apply_subst(F("p(X)"), {}) == F("p(X)"));
  CHECK_THROWS_AS(apply_subst(F("exists Z q(Z,X)"), {{"X", Term::var("Z")}}), Error);
}

TEST_CASE("universal closure is lexicographic") {
  CHECK(universal_closure(F("p(X)")) == F("forall X p(X)"));
  CHECK(universal_closure(F("forall X p(X)")) == F("forall X p(X)"));
  CHECK(universal_closure(F("p(Y) & q(X)")) == F("forall X Y (p(Y) & q(X))"));
}

TEST_CASE("occurrence polarity") {
  auto occ = positive_occurrences(F("q(X) -> p(X)"));
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].atom == F("q(X)"));
  CHECK_FALSE(occ[0].positive);
  CHECK(occ[1].strictly_positive);
  occ = positive_occurrences(F("--p(X)"));
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].positive);
  CHECK_FALSE(occ[0].strictly_positive);
  CHECK(occ[0].in_negative);
  occ = positive_occurrences(F("-r(X) -> p(X)"));
  CHECK(occ[0].in_negative);
  CHECK_FALSE(occ[1].in_negative);
}

TEST_CASE("negative formulas have no strictly positive atoms") {
  for (const char* s : {"-p(X)", "--p(X) & -q(Y)", "(p(X) -> q(X)) -> false", "a = b"}) {
    Formula f = F(s);
    REQUIRE(is_negative(f));
    for (const auto& o : positive_occurrences(f)) CHECK_FALSE(o.strictly_positive);
  }
}

TEST_CASE("program normal form") {
  Program p = parse_program("p(a) :- p(b).");
  Program n = program_normal_form(p);
  CHECK(to_string(n) == "p(X) :- X = a, p(b).\n");
  CHECK(to_string(program_normal_form(parse_program("p(X) :- q(X)."))) == "p(X) :- q(X).\n");
  CHECK(to_string(program_normal_form(parse_program("q(b)."))) == "q(X) :- X = b.\n");
  CHECK(is_normal_form(n));
  // Head atoms end up with pairwise distinct variables.
  CHECK(to_string(program_normal_form(parse_program("q(Y,Y) :- p(Y)."))) == "q(Y,Y1) :- Y1 = Y, p(Y).\n");
  CHECK(to_string(program_normal_form(parse_program("q(a,a)."))) == "q(X,X1) :- X = a, X1 = X.\n");
  CHECK_FALSE(is_normal_form(parse_program("q(Y,Y).")));
  CHECK(is_normal_form(parse_program("exists W q(W,W) :- p(X).")));
  CHECK_FALSE(is_normal_form(p));
}

TEST_CASE("sentence normal form") {
  Formula g = sentence_normal_form(F("p(a) & forall X (q(X) -> p(b))"));
  CHECK(is_sentence_normal_form(g));
  CHECK(to_string(g) == "forall X1 (X1 = a -> p(X1)) & forall X (q(X) -> forall X2 (X2 = b -> p(X2)))");
}

TEST_CASE("parse programs") {
  Program p = parse_program("r(X) :- p(X), not q(X).");
  REQUIRE(p.rules.size() == 1);
  CHECK(p.rules[0].kind == RuleKind::Nondisjunctive);
  CHECK(p.rules[0].negative_part() == F("-q(X)"));
  p = parse_program("exists W discount(X,W) :- spouse(X,Y), not exists Z accident(X,Z).");
  CHECK(p.rules[0].kind == RuleKind::Extended);
  p = parse_program("p(X,Y) ; p(Y,Z) :- q(X).");
  CHECK(p.rules[0].kind == RuleKind::Disjunctive);
  CHECK(p.rules[0].head_atoms.size() == 2);
  p = parse_program(":- p(X).\nfalse :- q(X).");
  CHECK(p.rules[0].head.is_bottom());
  CHECK(p.rules[1].head.is_bottom());
}

TEST_CASE("parse errors carry positions and kinds") {
  try {
    parse_program("p(X) :- q(X)\nr(a).");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Syntax);
    CHECK(std::string(e.what()).rfind("2:1:", 0) == 0);
  }
  try {
    parse_program("p(a). p(a,b).");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Arity);
  }
  try {
    parse_program("p(X) :- (q(X) -> r(X)).");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Kind);
  }
}

TEST_CASE("parse formulas") {
  Formula q = F("forall X (q(X) -> p(X))");
  CHECK(q == Formula::forall("X", Formula::implies(F("q(X)"), F("p(X)"))));
  CHECK(to_string(F("p(a) & q(b) & forall X (p(X) & -q(X) -> r(X))")) ==
        "p(a) & q(b) & forall X (p(X) & -q(X) -> r(X))");
  CHECK(F("-exists X Y spouse(X,Y)") ==
        Formula::neg(Formula::exists("X", Formula::exists("Y", F("spouse(X,Y)")))));
}

TEST_CASE("FOL representation") {
  Program ex1 = parse_program("p(a). q(b). r(X) :- p(X), not q(X).");
  CHECK(fol_representation(ex1) == F("p(a) & q(b) & forall X (p(X) & -q(X) -> r(X))"));
  CHECK(fol_representation(parse_program("")).is_top());
  Program one = parse_program("p(X) :- q(X,Y).");
  CHECK(fol_representation(one) == universal_closure(F("q(X,Y) -> p(X)")));
}

TEST_CASE("round trip through the printer") {
  for (const char* text : {"p(a).\nq(b).\nr(X) :- p(X), not q(X).\n",
                           "p(X,Y) ; p(Y,Z) :- q(X).\nfalse :- p(X,X), X != a.\n",
                           "exists W discount(X,W) :- spouse(X,Y), not exists Z accident(X,Z).\n"
                           "#query forall X (discount(X,plan1) -> X = marge).\n"}) {
    Program a = parse_program(text);
    Program b = parse_program(to_string(a));
    CHECK(to_string(a) == to_string(b));
    CHECK(fol_representation(a) == fol_representation(b));
  }
}

TEST_CASE("second-order quantifiers parse back") {
  Formula f = parse_formula("forall X Y ((q(X) -> p(X)) & (p(Y) -> q(Y)) & (-r(X) -> p(X)))");
  for (const Formula& g : {sm(f), prop2_form(f, Prop2Variant::Loop)}) {
    Formula back = parse_formula(to_string(g));
    CHECK(to_string(back) == to_string(g));
    CHECK_FALSE(is_first_order(back));
  }
  Formula h = parse_formula("EXISTS u/1 (u(a) & p(a)) & FORALL u/2 (u(a,b) -> p(b))");
  CHECK(to_string(h) == "EXISTS u/1 (u(a) & p(a)) & FORALL u/2 (u(a,b) -> p(b))");
  CHECK(signature_of(h).predicates == std::map<std::string, int>{{"p", 1}});
  CHECK_THROWS_AS(parse_formula("EXISTS u/1 u(a,b)"), Error);
}
