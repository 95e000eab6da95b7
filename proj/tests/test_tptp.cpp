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


#include <regex>

#include "doctest.h"
#include "folf/parser.hpp"
#include "folf/tptp.hpp"

using namespace folf;

namespace {

Formula F(const char* s) { return parse_formula(s); }

// FOF formula text back to input syntax.
std::string down_map(std::string s) {
  std::regex quant(R"(([!?])\[([A-Za-z0-9_,]+)\]:)");
  std::string out;
  std::smatch m;
  while (std::regex_search(s, m, quant)) {
    std::string vars = m[2].str();
    for (auto& c : vars)
      if (c == ',') c = ' ';
    out += m.prefix().str() + (m[1].str() == "!" ? "forall " : "exists ") + vars + " ";
    s = m.suffix().str();
  }
  out += s;
  for (auto [from, to] : std::vector<std::pair<std::string, std::string>>{
           {"=>", "->"}, {"~", "-"}, {"$false", "false"}, {"$true", "true"}}) {
    for (auto p = out.find(from); p != std::string::npos; p = out.find(from, p + to.size())) out.replace(p, from.size(), to);
  }
  return out;
}

}  // namespace

TEST_CASE("FOF syntax") {
  TptpProblem p;
  p.axioms.push_back({"", F("forall Z (r(Z) -> false)")});
  p.conjecture = F("exists X W dis(X,W)");
  CHECK(export_tptp(p).text ==
        "fof(ax1, axiom, ![Z]: (r(Z) => $false)).\n"
        "fof(goal, conjecture, ?[X,W]: dis(X,W)).\n");
  CHECK(to_tptp(F("forall X (p(X) -> X != a)")) == "![X]: (p(X) => (X != a))");
  CHECK(to_tptp(F("q & -(p | r)")) == "(q & ~ (p | r))");
  CHECK(to_tptp(F("true")) == "$true");
}

TEST_CASE("export rejects open and second-order input") {
  TptpProblem open;
  open.axioms.push_back({"", F("p(X)")});
  CHECK_THROWS_AS(export_tptp(open), Error);
  Formula so = Formula::so_exists({{"u", 1, ""}}, Formula::pred_var("u", {Term::constant("a")}));
  TptpProblem second;
  second.axioms.push_back({"", so});
  try {
    export_tptp(second);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFirstOrder);
  }
}

TEST_CASE("names are mangled without collisions") {
  TptpProblem p;
  Terms a{Term::constant("a")};
  p.axioms.push_back({"", Formula::land(Formula::pred("Marge", a), Formula::pred("marge", a))});
  auto out = export_tptp(p);
  REQUIRE(out.symbols.count("Marge"));
  CHECK(out.symbols.at("Marge") == "marge_2");
  CHECK(out.text.find("marge_2(a)") != std::string::npos);
}

TEST_CASE("exported formulas parse back") {
  for (const char* text : {"forall X Y (spouse(X,Y) & -exists Z accident(X,Z) -> exists W discount(X,W))",
                           "forall U V (p(U,V) -> exists Z (q(U) & -(p(V,Z) & -(V = U & Z = V))))",
                           "exists X (p(X) | q(X)) & (r -> s) & forall X (X = a | X != b)"}) {
    Formula f = F(text);
    std::string t = to_tptp(f);
    CHECK_MESSAGE(to_tptp(parse_formula(down_map(t))) == t, t);
  }
}

TEST_CASE("SZS status lines") {
  CHECK(parse_szs("% SZS status Theorem for x") == SzsStatus::Theorem);
  CHECK(parse_szs("# SZS status Unsatisfiable") == SzsStatus::Theorem);
  CHECK(parse_szs("SZS status CounterSatisfiable") == SzsStatus::CounterSatisfiable);
  CHECK(parse_szs("SZS status Timeout") == SzsStatus::Timeout);
  CHECK(parse_szs("nothing here") == SzsStatus::Unknown);
}

TEST_CASE("external prover runs") {
  CHECK(run_prover("fof(a, axiom, p).\n", "grep -q 'fof' {file} && echo '% SZS status Theorem'", 5).status ==
        SzsStatus::Theorem);
  CHECK(run_prover("", "sleep 5; cat {file}", 1).status == SzsStatus::Timeout);
  CHECK(run_prover("", "/nonexistent/prover-binary", 5).status == SzsStatus::Unavailable);
}
