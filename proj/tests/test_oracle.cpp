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
#include "folf/oracle.hpp"
#include "folf/parser.hpp"
#include "folf/sm_transform.hpp"

using namespace folf;

namespace {
Formula F(const char* s) { return parse_formula(s); }
}  // namespace

TEST_CASE("classical evaluation") {
  Interpretation i;
  i.size = 2;
  i.constants = {{"a", 0}, {"b", 1}, {"c", 0}};
  CHECK_FALSE(evaluate(Formula::bottom(), i));
  CHECK_FALSE(evaluate(F("a = b"), i));
  CHECK(evaluate(F("a = c"), i));
  i.relations["p"] = {{0}};
  CHECK(evaluate(F("exists X p(X)"), i));
  CHECK_FALSE(evaluate(F("forall X p(X)"), i));
  CHECK(evaluate(F("p(X)"), i, {}, {{"X", 0}}));
}

TEST_CASE("example 1 answer set is stable") {
  Formula f = F("p(a) & q(b) & forall X (p(X) & -q(X) -> r(X))");
  Interpretation h = herbrand(signature_of(f), {F("p(a)"), F("q(b)"), F("r(a)")});
  CHECK(evaluate(f, h));
  CHECK(is_stable(f, h));
  Interpretation bigger = herbrand(signature_of(f), {F("p(a)"), F("q(b)"), F("r(a)"), F("r(b)")});
  CHECK(evaluate(f, bigger));
  CHECK_FALSE(is_stable(f, bigger));
}

TEST_CASE("p-xy with p total over two elements is not stable") {
  Formula f = F("forall X Y (p(Y) -> p(X))");
  Interpretation i;
  i.size = 2;
  i.relations["p"] = {{0}, {1}};
  CHECK(evaluate(f, i));
  CHECK_FALSE(is_stable(f, i));
}

TEST_CASE("non-Herbrand model of p-abc is not stable") {
  Formula f = F("(p(b) -> p(a)) & (p(c) -> p(b))");
  Interpretation i;
  i.size = 2;
  i.constants = {{"a", 0}, {"b", 1}, {"c", 0}};
  i.relations["p"] = {{0}, {1}};
  CHECK(evaluate(f, i));
  CHECK_FALSE(is_stable(f, i));
}

TEST_CASE("pruned and unpruned second-order evaluation agree") {
  Formula f = F("forall X Y (q(X) -> p(X)) & forall X (p(X) -> q(X)) & forall X (-r(X) -> p(X))");
  for (Formula g : {sm(f), prop2_form(f, Prop2Variant::Nonempty), prop2_form(f, Prop2Variant::Loop)}) {
    Signature sig = signature_of(f);
    Evaluator fast(g, sig, true), slow(g, sig, false);
    int n = 0;
    for_each_structure(sig, 2, [&](const Structure& s) {
      CHECK(fast.eval(s) == slow.eval(s));
      ++n;
      return true;
    });
    CHECK(n == 64);
  }
}

TEST_CASE("caps are enforced") {
  Formula f = F("forall X Y (p(X,Y) -> q(X,Y))");
  Interpretation i;
  i.size = 3;
  CHECK_THROWS_AS(is_stable(f, i), Error);
  CHECK_NOTHROW(is_stable(f, i, OracleLimits::unlimited()));
}
