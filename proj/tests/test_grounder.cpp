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
#include "folf/grounder.hpp"
#include "folf/parser.hpp"

using namespace folf;

namespace {

Formula F(const char* s) { return parse_formula(s); }

AtomSet Y(const char* facts) {
  AtomSet y;
  for (const auto& r : parse_program(facts).rules) y.push_back(r.head);
  return y;
}

std::vector<std::string> strings(const std::vector<AtomSet>& loops) {
  std::vector<std::string> out;
  for (const auto& y : loops) out.push_back(to_string(y));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("grounding programs") {
  CHECK(to_string(ground_program(parse_program("p(a). r(X) :- p(X)."))) == "p(a).\nr(a) :- p(a).\n");
  Program nf = parse_program("p(X) :- X = a, p(b). p(X) :- X = b, p(c).");
  nf.signature.constants.insert("c");
  CHECK(to_string(ground_program(nf)) == "p(a) :- p(b).\np(b) :- p(c).\n");
  CHECK(to_string(ground_program(parse_program("p(X) :- q(X). q(Y) :- p(Y). p(X) :- not r(X)."), {"c"})) ==
        "p(c) :- q(c).\nq(c) :- p(c).\np(c) :- not r(c).\n");
  CHECK_THROWS_AS(ground_program(parse_program("p(X) :- q(X).")), Error);
}

TEST_CASE("grounding sentences") {
  Formula f = F("exists X p(X) & q(a) & q(b)");
  CHECK(to_string(ground_sentence(F("exists X p(X) & a = a & (b = b -> q(a)) & (q(b) | q(a))"))) ==
        "(p(a) | p(b)) & q(a) & (q(b) | q(a))");
  CHECK(ground_sentence(F("p(a) & a = b")).is_bottom());
  CHECK(ground_sentence(F("a = a")).is_top());
  Formula e1 = F("p(a) & q(b) & forall X (p(X) & -q(X) -> r(X))");
  CHECK(ground_sentence(e1) == F("p(a) & q(b) & ((p(a) & -q(a) -> r(a)) & (p(b) & -q(b) -> r(b)))"));
  CHECK(to_string(ground_sentence(f)) == "(p(a) | p(b)) & q(a) & q(b)");
  CHECK_THROWS_AS(ground_sentence(F("p(X)")), Error);
}

TEST_CASE("ground atoms and universes") {
  Signature sig;
  sig.predicates = {{"p", 2}, {"q", 0}};
  auto atoms = ground_atoms(sig, {"a", "b"});
  CHECK(to_string(atoms) == "{p(a,a), p(a,b), p(b,a), p(b,b), q}");
  CHECK(atoms.size() == 5);
  CHECK(to_string(atoms.front()) == "p(a,a)");
  CHECK_THROWS_AS(herbrand_universe(Signature{}), Error);
}

TEST_CASE("ground loops") {
  Program g = ground_program(parse_program("p(X) :- X = a, p(b). p(X) :- X = b, p(c). p(c) :- p(b)."));
  auto loops = ground_loops(ground_dependencies(g), ground_atoms(g.signature, {"a", "b", "c"}));
  CHECK(strings(loops) == std::vector<std::string>{"{p(a)}", "{p(b), p(c)}", "{p(b)}", "{p(c)}"});
}

TEST_CASE("literal grounding keeps dependencies of false rules") {
  Program nf = parse_program("p(X) :- X = a, p(b). p(X) :- X = b, p(c).");
  nf.signature.constants.insert("c");
  Program g = ground_program(nf, {}, true);
  CHECK(g.rules.size() == 6);
  auto loops = ground_loops(ground_dependencies(g), ground_atoms(g.signature, {"a", "b", "c"}));
  CHECK(strings(loops) == std::vector<std::string>{"{p(a)}", "{p(b), p(c)}", "{p(b)}", "{p(c)}"});
  // a false rule never supports its head
  CHECK(prop_loop_formula(g, Y("p(c).")) == F("p(c) -> false"));
}

TEST_CASE("propositional loop formulas") {
  Program g = ground_program(parse_program("p(X) :- q(X). q(Y) :- p(Y). p(X) :- not r(X)."), {"c"});
  CHECK(prop_loop_formula(g, Y("p(c). q(c).")) == F("p(c) & q(c) -> -r(c)"));
  CHECK(prop_loop_formula(g, Y("r(c).")) == F("r(c) -> false"));
  CHECK(prop_loop_formula(Program{}, Y("a. b.")) == F("a & b -> false"));

  // ground pqr sentence: p(c) and q(c) only support each other
  Formula gs = ground_sentence(F("forall X ((q(X) -> p(X)) & (p(X) -> q(X)) & (-r(X) -> p(X))) & s(c)"));
  CHECK(to_string(prop_loop_formula(gs, Y("p(c). q(c)."))) ==
        "p(c) & q(c) -> -((q(c) -> p(c)) & (p(c) -> q(c)) & (--r(c) & (-r(c) -> p(c))) & s(c))");
  // a fact supports itself
  CHECK(prop_loop_formula(gs, Y("s(c).")).is_top());
}
