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
#include "folf/safety.hpp"
#include "folf/sm_transform.hpp"

using namespace folf;

namespace {

Formula F(const char* s) { return parse_formula(s); }

// Number of structures of the given sizes on which SM[f] and g disagree.
int disagreements(const Formula& f, const Formula& g, int max_size) {
  Signature sig = joint_signature(f, signature_of(g));
  Evaluator lhs(sm(f), sig), rhs(g, sig);
  int bad = 0;
  for (int n = 1; n <= max_size; ++n)
    for_each_structure(sig, n, [&](const Structure& s) {
      if (lhs.eval(s) != rhs.eval(s)) ++bad;
      return true;
    });
  return bad;
}

const char* kInsurance1 =
    "forall X Y (spouse(X,Y) -> gotmarried(X,Y)) & "
    "forall X Y (gotmarried(X,Y) & -divorced(X,Y) -> spouse(X,Y)) & "
    "forall X Y (spouse(X,Y) & -exists Z accident(X,Z) -> exists W discount(X,W))";

}  // namespace

TEST_CASE("restricted variables") {
  CHECK(rv(F("p(X,Y)")) == std::set<std::string>{"X", "Y"});
  CHECK(rv(F("X = Y")).empty());
  CHECK(rv(F("X = a")) == std::set<std::string>{"X"});
  CHECK(rv(F("p(X) | q(Y)")).empty());
  CHECK(rv(F("p(X) | q(X) & r(Y)")) == std::set<std::string>{"X"});
  CHECK(rv(F("p(X) -> q(X)")).empty());
  CHECK(rv(F("exists Y p(X,Y)")) == std::set<std::string>{"X"});
  CHECK(rv(Formula::bottom()).empty());
}

TEST_CASE("unsafe variables") {
  CHECK(unsafe_vars(F("forall X (q(X) & p(Y) -> p(X))")).safe());
  CHECK(unsafe_vars(F("forall X p(X)")).unsafe_variables == std::set<std::string>{"X"});
  CHECK(unsafe_vars(F(kInsurance1)).unsafe_variables == std::set<std::string>{"W"});
  CHECK(unsafe_vars(F("p(a) & forall X (p(X) -> q(X))")).safe());
  CHECK(unsafe_vars(F("forall X Y (p(X) -> q(X,Y))")).unsafe_variables == std::set<std::string>{"Y"});
  CHECK_FALSE(unsafe_vars(F("forall X (p(X) -> q(X))")).annotations.empty());
}

TEST_CASE("U_F") {
  CHECK(u_f(F("p(a)")) == F("forall X (p(X) -> X = a)"));
  CHECK(u_f(F("q(a,b)")) == F("forall X1 X2 (q(X1,X2) -> (X1 = a | X1 = b) & (X2 = a | X2 = b))"));
  CHECK(u_f(F("a = b")).is_top());
  CHECK_THROWS_AS(u_f(F("forall X p(X)")), Error);
  CHECK(u_f(F("forall X p(X)"), true) == F("forall X (p(X) -> false)"));
}

TEST_CASE("reduction through a complete set of loops") {
  Formula pqr = F("forall X Y ((q(X) -> p(X)) & (p(Y) -> q(Y)) & (-r(X) -> p(X)))");
  Reduction r = reduce(pqr);
  CHECK(r.path == ReductionPath::CompleteSet);
  CHECK(r.loops.size() == 4);
  CHECK(disagreements(pqr, r.formula, 2) == 0);

  Formula e1 = F("p(a) & q(b) & forall X (p(X) & -q(X) -> r(X))");
  Reduction r1 = reduce(e1);
  CHECK(r1.path == ReductionPath::CompleteSet);
  CHECK(disagreements(e1, r1.formula, 3) == 0);
  // completion-style equivalent
  Formula comp = F(
      "forall X (p(X) <-> X = a) & forall X (q(X) <-> X = b) & forall X (r(X) <-> p(X) & -q(X))");
  CHECK(disagreements(e1, comp, 3) == 0);

  CHECK(reduce(F("forall X p(X)")).path == ReductionPath::CompleteSet);
}

TEST_CASE("reduction through safety") {
  Formula f = F("q(a) & forall Y forall X (q(X) & p(Y) -> p(X)) & (q(b) -> p(b))");
  Reduction r = reduce(f);
  CHECK(r.path == ReductionPath::Safety);
  CHECK(disagreements(f, r.formula, 3) == 0);

  Formula g = F("forall Y forall X (q(X) & p(Y) -> p(X))");
  CHECK(reduce(g).path == ReductionPath::Safety);
  CHECK(disagreements(g, reduce(g).formula, 3) == 0);
}

TEST_CASE("safety reduction covers constants naming one element") {
  // With a = c the atoms p(a) and p(b) form a loop that unique names hide.
  Formula f = F("(p(b) -> p(a)) & (p(c) -> p(b))");
  Reduction r = reduce(f);
  CHECK(r.path == ReductionPath::Safety);
  bool merged = false;
  for (const auto& y : r.loops) merged = merged || y.size() == 2;
  CHECK(merged);
  CHECK(disagreements(f, r.formula, 3) == 0);
}

TEST_CASE("irreducible input names both reasons") {
  try {
    reduce(F("forall X Y (p(Y) -> p(X))"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReducible);
    std::string msg = e.what();
    CHECK(msg.find("complete set") != std::string::npos);
    CHECK(msg.find("unsafe") != std::string::npos);
  }
}
