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


#include <string>

#include "doctest.h"
#include "folf/folf.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Theory {
  folf_theory* t = nullptr;
  ~Theory() { folf_theory_free(t); }
};

json take_json(char* s) {
  json j = json::parse(s);
  folf_string_free(s);
  return j;
}

std::string take(char* s) {
  std::string out(s);
  folf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("capi: parse errors carry a status and message") {
  folf_theory* t = nullptr;
  CHECK(folf_theory_parse_program("p(X :- q.", &t) == FOLF_E_SYNTAX);
  CHECK(t == nullptr);
  CHECK(std::string(folf_last_error()).size() > 0);
  CHECK(folf_theory_parse_program("p(a). p(a,b).", &t) == FOLF_E_ARITY);
  CHECK(folf_theory_parse_formula("p(X)", &t) == FOLF_E_NOT_SENTENCE);
  CHECK(folf_theory_parse_program(nullptr, &t) == FOLF_E_ARGUMENT);
  CHECK(std::string(folf_status_name(FOLF_E_NOT_REDUCIBLE)) == "not-reducible");
}

TEST_CASE("capi: answer sets, grounding and stability checks") {
  Theory th;
  REQUIRE(folf_theory_parse_program("p(a). q(b). r(X) :- p(X), not q(X).", &th.t) == FOLF_OK);
  char* out = nullptr;
  REQUIRE(folf_answer_sets(th.t, nullptr, &out) == FOLF_OK);
  CHECK(take_json(out)["answer_sets"] == json::array({"{p(a), q(b), r(a)}"}));

  REQUIRE(folf_ground(th.t, nullptr, &out) == FOLF_OK);
  std::string g = take(out);
  CHECK(g.find("r(a) :- p(a), not q(a).") != std::string::npos);
  CHECK(g.find("r(b) :- p(b), not q(b).") != std::string::npos);

  REQUIRE(folf_check_stable(th.t, R"j({"atoms":["p(a)","q(b)","r(a)"]})j", &out) == FOLF_OK);
  CHECK(take_json(out) == json{{"model", true}, {"stable", true}});
  REQUIRE(folf_check_stable(th.t, R"j({"atoms":["p(a)","q(b)","r(a)","r(b)"]})j", &out) == FOLF_OK);
  CHECK(take_json(out) == json{{"model", true}, {"stable", false}});
  // Non-Herbrand: a and b name the same element.
  const std::string merged = json{{"size", 1},
                                  {"constants", {{"a", 0}, {"b", 0}}},
                                  {"relations", {{"p", {{0}}}, {"q", {{0}}}}}}
                                 .dump();
  REQUIRE(folf_check_stable(th.t, merged.c_str(), &out) == FOLF_OK);
  CHECK(take_json(out) == json{{"model", true}, {"stable", true}});
  CHECK(folf_check_stable(th.t, R"({"size":1})", &out) == FOLF_E_ARGUMENT);
  CHECK(folf_check_stable(th.t, "not json", &out) == FOLF_E_ARGUMENT);
}

TEST_CASE("capi: loops, safety and reduction") {
  Theory pqr;
  REQUIRE(folf_theory_parse_program("p(X) :- q(X). q(Y) :- p(Y). p(X) :- not r(X).", &pqr.t) == FOLF_OK);
  char* out = nullptr;
  REQUIRE(folf_loops(pqr.t, 4, &out) == FOLF_OK);
  json loops = take_json(out);
  CHECK(loops["status"] == "complete");
  CHECK(loops["loops"].size() == 4);
  REQUIRE(folf_reduce(pqr.t, 4, &out) == FOLF_OK);
  json red = take_json(out);
  CHECK(red["path"] == "complete-set");
  CHECK(red["loops"].size() == 4);

  Theory pxy;
  REQUIRE(folf_theory_parse_program("p(X) :- p(Y).", &pxy.t) == FOLF_OK);
  CHECK(folf_reduce(pxy.t, 4, &out) == FOLF_E_NOT_REDUCIBLE);
  std::string why = folf_last_error();
  CHECK(why.find("unsafe") != std::string::npos);
  REQUIRE(folf_safety(pxy.t, &out) == FOLF_OK);
  json s = take_json(out);
  CHECK(s["safe"] == false);
  CHECK(s["unsafe_variables"] == json::array({"X"}));
}

TEST_CASE("capi: bounded entailment and TPTP export") {
  Theory th;
  REQUIRE(folf_theory_parse_program("p(a). q(b). r(X) :- p(X), not q(X).", &th.t) == FOLF_OK);
  char* out = nullptr;
  REQUIRE(folf_entail(th.t, "p(a) & q(b)", 2, &out) == FOLF_OK);
  json e = take_json(out);
  CHECK(e["entailed"] == true);
  CHECK(e["bounded"] == true);
  // a and b may name one element, which blocks r(a).
  REQUIRE(folf_entail(th.t, "r(a)", 2, &out) == FOLF_OK);
  e = take_json(out);
  CHECK(e["entailed"] == false);
  CHECK(e["sizes"][0]["counter_model"].is_string());
  CHECK(folf_entail(th.t, "r(X)", 2, &out) == FOLF_E_NOT_SENTENCE);

  REQUIRE(folf_export_tptp(th.t, "r(a)", 4, &out) == FOLF_OK);
  std::string tptp = take(out);
  CHECK(tptp.find("fof(theory, axiom,") != std::string::npos);
  CHECK(tptp.find("fof(goal, conjecture, r(a))") != std::string::npos);

  REQUIRE(folf_prove(th.t, "r(a)", 4, "echo '% SZS status Theorem for x'", 5, &out) == FOLF_OK);
  CHECK(take_json(out)["status"] == "Theorem");
}

TEST_CASE("capi: formula theories and queries") {
  Theory th;
  REQUIRE(folf_theory_parse_formula("forall X (p(X) -> q(X)) & p(a)", &th.t) == FOLF_OK);
  char* out = nullptr;
  REQUIRE(folf_answer_sets(th.t, nullptr, &out) == FOLF_OK);
  CHECK(take_json(out)["answer_sets"] == json::array({"{p(a), q(a)}"}));
  REQUIRE(folf_theory_queries(th.t, &out) == FOLF_OK);
  CHECK(take_json(out) == json::array());

  Theory prog;
  REQUIRE(folf_theory_parse_program("p(a).\n#query p(a).", &prog.t) == FOLF_OK);
  REQUIRE(folf_theory_queries(prog.t, &out) == FOLF_OK);
  CHECK(take_json(out) == json::array({"p(a)"}));
}
