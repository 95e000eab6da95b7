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


// Herbrand grounding and propositional loop formulas.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "folf/deps.hpp"
#include "folf/loops.hpp"
#include "folf/program.hpp"

namespace folf {

/// Universe used for grounding: the constants of the input plus `extra`.
/// Throws EmptyUniverse when the result is empty.
std::vector<std::string> herbrand_universe(const Signature& sig, const std::set<std::string>& extra = {});

/// Every ground non-equality atom over the predicates of `sig` and `universe`.
AtomSet ground_atoms(const Signature& sig, const std::vector<std::string>& universe);

/// Expands quantifiers over `universe` and folds constant equalities.
Formula ground_expand(const Formula& f, const std::vector<std::string>& universe);

/// Rules whose body folds to false are dropped unless `keep_false_rules` is
/// set; then they stay with a false body item, keeping their dependencies.
Program ground_program(const Program& p, const std::set<std::string>& extra = {}, bool keep_false_rules = false);
Formula ground_sentence(const Formula& f, const std::set<std::string>& extra = {});

/// Atoms mentioned anywhere in a ground program.
std::set<std::string> atoms_occurring(const Program& ground);

/// Ground dependency pairs (head atom, body atom).
std::vector<DepPair> ground_dependencies(const Program& ground);
std::vector<DepPair> ground_dependencies(const Formula& ground);

/// Nonempty sets of ground atoms inducing a strongly connected subgraph.
/// Singletons are always loops. Throws CapExceeded past `max_loops`.
std::vector<AtomSet> ground_loops(const std::vector<DepPair>& deps, const AtomSet& atoms,
                                  std::size_t max_loops = 100000);

/// /\Y -> support, with ground inequalities decided by symbol identity.
Formula prop_loop_formula(const Program& ground, const AtomSet& y);
Formula prop_loop_formula(const Formula& ground, const AtomSet& y);

}  // namespace folf
