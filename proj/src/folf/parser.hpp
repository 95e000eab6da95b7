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

#pragma once

#include <string_view>

#include "folf/formula.hpp"
#include "folf/program.hpp"

namespace folf {

// Input language (see docs/grammar.md):
//   program   ::= { statement }
//   statement ::= "#query" formula "." | [ head ] [ ":-" body ] "."
//   head      ::= formula { ";" formula }
//   body      ::= conj { ";" conj }         conj ::= formula { "," formula }
//   formula   ::= disj [ "->" formula | "<->" disj ]
//   disj      ::= conj1 { "|" conj1 }       conj1 ::= unary { "&" unary }
//   unary     ::= ("-" | "not") unary | ("forall" | "exists") VAR {VAR} unary
//               | "(" formula ")" | "true" | "false" | term ("=" | "!=") term
//               | IDENT [ "(" term { "," term } ")" ]
// Variables start with an uppercase letter, constants and predicates with a
// lowercase letter or a digit. '%' starts a comment.

Program parse_program(std::string_view text);
Formula parse_formula(std::string_view text);

}  // namespace folf
