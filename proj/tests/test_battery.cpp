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
#include "folf/battery.hpp"
#include "folf/loops.hpp"
#include "folf/parser.hpp"

using namespace folf;

namespace {

Formula F(const char* s) { return parse_formula(s); }

template <typename Fn>
void each_interpretation(const Signature& sig, int n, Fn fn) {
  for_each_structure(sig, n, [&](const Structure& s) {
    fn(to_interpretation(s, sig));
    return true;
  });
}

}  // namespace

TEST_CASE("size-indexed battery on p(X) :- p(Y) is the three-atom loop formula") {
  Formula f = F("forall X Y (p(Y) -> p(X))");
  Formula eq = flf(f, {F("p(X1)"), F("p(X2)"), F("p(X3)")});
  Signature sig = signature_of(f);
  int n_models = 0;
  each_interpretation(sig, 3, [&](const Interpretation& i) {
    CHECK(check_flf_battery(f, i, BatteryMode::SizeIndexed) == evaluate(eq, i));
    if (evaluate(f, i)) {
      ++n_models;
      CHECK(is_stable(f, i) == check_flf_battery(f, i, BatteryMode::SizeIndexed));
    }
  });
  CHECK(n_models == 2);
}

TEST_CASE("p total over two elements is a model but violates the two-atom loop formula") {
  Formula f = F("forall X Y (p(Y) -> p(X))");
  Interpretation i;
  i.size = 2;
  i.relations["p"] = {{0}, {1}};
  CHECK(evaluate(f, i));
  CHECK_FALSE(is_stable(f, i));
  CHECK_FALSE(evaluate(flf(f, {F("p(X1)"), F("p(X2)")}), i));
  CHECK_FALSE(check_flf_battery(f, i, BatteryMode::SizeIndexed));
}

TEST_CASE("battery modes agree on small unary inputs") {
  for (const char* text : {"forall X Y (p(Y) -> p(X))", "forall X ((q(X) -> p(X)) & (p(X) -> q(X)) & (-r(X) -> p(X)))",
                           "forall X (p(X) | q(X))", "p(a) & forall X (p(X) -> q(X))"}) {
    Formula f = F(text);
    Signature sig = signature_of(f);
    for (int n = 1; n <= 2; ++n)
      each_interpretation(sig, n, [&](const Interpretation& i) {
        if (!evaluate(f, i)) return;
        bool stable = is_stable(f, i);
        CHECK_MESSAGE(check_flf_battery(f, i, BatteryMode::SizeIndexed) == stable, text);
        CHECK_MESSAGE(check_flf_battery(f, i, BatteryMode::AllSets) == stable, text);
        CHECK_MESSAGE(check_flf_battery(f, i, BatteryMode::Loops) == stable, text);
      });
  }
}

TEST_CASE("loops battery on pqr over one constant") {
  Formula f = F("forall X Y ((q(X) -> p(X)) & (p(Y) -> q(Y)) & (-r(X) -> p(X)))");
  Interpretation i;
  i.size = 1;
  i.constants = {{"c", 0}};
  i.relations["p"] = {{0}};
  i.relations["q"] = {{0}};
  CHECK(check_flf_battery(f, i, BatteryMode::Loops));
}

TEST_CASE("loop formula characterizations agree on the worked programs") {
  auto ex1 = prop1_harness(program_normal_form(parse_program("p(a). q(b). r(X) :- p(X), not q(X).")));
  CHECK(ex1.ok());
  CHECK(ex1.models > 0);

  auto pqr = prop1_harness(parse_program("p(X) :- q(X). q(Y) :- p(Y). p(X) :- not r(X)."), {"c"});
  CHECK(pqr.ok());

  Program abc = parse_program("p(X) :- X = a, p(b). p(X) :- X = b, p(c).");
  abc.signature.constants.insert("c");
  auto r = prop1_harness(abc);
  CHECK(r.ok());
  CHECK(r.ground_loops == 4);  // three singletons and {p(b), p(c)}
}
