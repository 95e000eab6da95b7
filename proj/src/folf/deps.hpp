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

#include <vector>

#include "folf/formula.hpp"
#include "folf/program.hpp"

namespace folf {

/// p(t) depends on q(t'); the two atoms share one variable scope.
struct DepPair {
  Formula head;
  Formula body;

  bool operator==(const DepPair&) const = default;
};

/// Pairs (A, b) with A a head atom and b an atom of the positive body, for
/// classical rules; extended rules fall back to the sentence definition on
/// their implication.
std::vector<DepPair> depends_pairs(const Program& p);

/// Weak dependencies inside implications with a strictly positive occurrence.
/// Atoms that belong to a negative subformula of the antecedent are skipped.
std::vector<DepPair> depends_pairs(const Formula& f);

/// Strongly connected components of the predicate-level graph, in
/// topological order of discovery.
std::vector<std::vector<std::string>> predicate_sccs(const Signature& sig, const std::vector<DepPair>& pairs);

}  // namespace folf
