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

#include <optional>
#include <string>
#include <vector>

#include "folf/deps.hpp"
#include "folf/formula.hpp"
#include "folf/program.hpp"

namespace folf {

/// Finite set of non-equality atoms (a candidate loop), kept sorted.
using AtomSet = std::vector<Formula>;

/// Sorted, duplicate-free copy with variables renamed Z, Z1, Z2, .. so that
/// sets equal up to renaming become identical.
AtomSet canonical_atoms(const AtomSet& y);
std::string to_string(const AtomSet& y);
std::set<std::string> vars_of(const AtomSet& y);

/// A substitution theta on the variables of y1 with y1 theta = y2 (as sets).
std::optional<Substitution> subsumes(const AtomSet& y1, const AtomSet& y2);

/// Dependency structure shared by programs and sentences.
struct LoopSubject {
  std::vector<DepPair> pairs;
  Signature signature;

  static LoopSubject of(const Program& p);
  static LoopSubject of(const Formula& f);
};

/// Is there an edge a -> b of the first-order dependency graph?
bool has_edge(const std::vector<DepPair>& pairs, const Formula& a, const Formula& b);
bool strongly_connected(const std::vector<DepPair>& pairs, const AtomSet& y);

/// Loops with at most `max_atoms` atoms and `max_vars` variables, one per
/// renaming class, in order of size then canonical text. `max_sets` bounds
/// the number of candidate sets kept per size; 0 means no bound.
struct LoopEnumeration {
  std::vector<AtomSet> loops;
  bool truncated = false;  // hit max_sets
  bool saturated = false;  // no candidate of the next size exists
};
LoopEnumeration enumerate_loops(const LoopSubject& s, int max_atoms, int max_vars, std::size_t max_sets = 0);

enum class CompleteStatus { Complete, BoundExhausted };
const char* to_string(CompleteStatus s);

struct CompleteSetReport {
  std::vector<AtomSet> loops;
  CompleteStatus status = CompleteStatus::BoundExhausted;
  std::string reason;
};

/// Drops loops subsumed by another member.
std::vector<AtomSet> prune_subsumed(const std::vector<AtomSet>& loops);

/// Searches for a finite complete set of loops. Completeness is claimed only
/// when every dependency pair inside a predicate component has a
/// constant-free head whose variables all occur in the body atom; then every
/// loop with two or more atoms uses at most as many variables as the largest
/// arity of its component, and saturation is exhaustive.
CompleteSetReport complete_set(const LoopSubject& s, int bound);

enum class ThetaMode { MostGeneral, Exhaustive };

/// Rule with every variable occurring in `avoid` renamed.
Rule rename_rule_apart(const Rule& r, const std::set<std::string>& avoid);

Formula fes_nondisjunctive(const Program& p, const AtomSet& y);
Formula fes_disjunctive(const Program& p, const AtomSet& y, ThetaMode mode = ThetaMode::MostGeneral);
/// With `negative_shortcut`, negative subformulas are returned unchanged
/// (they are equivalent to their transform).
Formula nfes(const Formula& f, const AtomSet& y, bool negative_shortcut = false);
Formula efes(const Program& p, const AtomSet& y);

/// Universal closure of /\Y -> FES, chosen by program kind. Nondisjunctive
/// programs not in normal form are normalized first.
Formula flf(const Program& p, const AtomSet& y);
/// Universal closure of /\Y -> -NFES_F(Y).
Formula flf(const Formula& f, const AtomSet& y);

}  // namespace folf
