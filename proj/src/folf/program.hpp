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

#include <string>
#include <vector>

#include "folf/formula.hpp"

namespace folf {

enum class RuleKind { Nondisjunctive, Disjunctive, Extended };

const char* to_string(RuleKind k);

/// H <- G. For the two classical kinds the head is also kept as a list of
/// atoms and the body is split into the atom part B and the negative part N.
struct Rule {
  RuleKind kind = RuleKind::Extended;
  Formula head;                     // false for constraints
  Formula body;                     // conjunction of body_items; true when bodiless
  bool has_body = false;
  std::vector<Formula> body_items;  // source order
  std::vector<Formula> head_atoms;  // classical kinds only
  std::vector<Formula> pos_body;    // atoms, equalities included
  std::vector<Formula> neg_body;    // negative formulas, conjoined into N

  Formula negative_part() const { return Formula::conj(neg_body); }
  /// Body -> Head, or just Head for a bodiless rule.
  Formula as_implication() const;
};

struct Program {
  std::vector<Rule> rules;
  std::vector<Formula> queries;  // from #query directives
  Signature signature;

  /// Strongest kind shared by every rule.
  RuleKind kind() const;
};

/// Classifies head/body into the most restrictive rule kind.
Rule make_rule(Formula head, std::vector<Formula> body_items, bool has_body);

Signature signature_of(const Program& p);

/// Conjunction of the universal closures of the rules, in source order.
Formula fol_representation(const Program& p);

/// Constants in head atoms become fresh variables guarded by equalities that
/// are prepended to the body.
Program program_normal_form(const Program& p);
bool is_normal_form(const Program& p);

/// Rule printed in input syntax, terminated by '.'.
std::string to_string(const Rule& r);
std::string to_string(const Program& p);

}  // namespace folf
