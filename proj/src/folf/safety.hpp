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


// Restricted variables, unsafe variables and the first-order reduction of SM.
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "folf/loops.hpp"
#include "folf/program.hpp"

namespace folf {

std::set<std::string> rv(const Formula& f);

struct SafetyReport {
  std::set<std::string> unsafe_variables;
  /// Antecedent of every implication with its restricted variables.
  std::vector<std::pair<std::string, std::set<std::string>>> annotations;
  bool safe() const { return unsafe_variables.empty(); }
};

/// Occurrences inside an antecedent are not checked; every other occurrence
/// must sit in the consequent of some G -> H with the variable in RV(G).
/// Binder occurrences never count. Rectifies first if needed.
SafetyReport unsafe_vars(const Formula& f);

/// Throws EmptyUniverse when f has no constants unless allow_empty is set,
/// in which case every predicate of positive arity is forced empty.
Formula u_f(const Formula& f, bool allow_empty = false);

enum class ReductionPath { CompleteSet, Safety };
const char* to_string(ReductionPath p);

struct Reduction {
  Formula formula;
  std::vector<Formula> parts;  // conjuncts of `formula`: F, then U_F on the safety path, then loop formulas
  ReductionPath path = ReductionPath::CompleteSet;
  std::vector<AtomSet> loops;
};

/// Complete-set path when available, otherwise the safety path; throws
/// NotReducible carrying both diagnoses when neither applies.
Reduction reduce(const Formula& f, int bound = 6);
/// Program form: the complete-set path uses the program's own loop formulas
/// (FES or EFES); otherwise falls back to the sentence reduction.
Reduction reduce(const Program& p, int bound = 6);
inline Formula reduce_sm_to_fol(const Formula& f, int bound = 6) { return reduce(f, bound).formula; }

}  // namespace folf
