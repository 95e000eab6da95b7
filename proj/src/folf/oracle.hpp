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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "folf/formula.hpp"

namespace folf {

/// Finite interpretation over the universe {0, .., size-1}.
struct Interpretation {
  int size = 1;
  std::map<std::string, int> constants;
  std::map<std::string, std::set<std::vector<int>>> relations;  // missing = empty

  bool operator==(const Interpretation&) const = default;
};

/// Extensions of predicate variables, for evaluating open second-order formulas.
using PredicateAssignment = std::map<std::string, std::set<std::vector<int>>>;

/// Hard limits for exhaustive enumeration. Exceeding them raises CapExceeded.
struct OracleLimits {
  int max_universe = 4;
  int max_tuples = 16;  // sum over predicates of size^arity

  static OracleLimits unlimited() { return {64, 64 * 64}; }
};

/// Dense form of an interpretation: one bitmask per predicate of a fixed
/// signature, tuples numbered lexicographically.
struct Structure {
  int size = 1;
  std::vector<int> constants;       // in signature order
  std::vector<std::uint64_t> masks;  // in signature order

  bool operator==(const Structure&) const = default;
  auto operator<=>(const Structure&) const = default;
};

/// Number of tuples of the given arity over a universe of `size` elements.
std::uint64_t tuple_count(int size, int arity);
int tuple_index(const std::vector<int>& tuple, int size);
std::vector<int> tuple_at(int index, int size, int arity);

Structure to_structure(const Interpretation& i, const Signature& sig);
Interpretation to_interpretation(const Structure& s, const Signature& sig);

/// Herbrand interpretation of `sig` that makes exactly `atoms` true; the
/// universe is the set of constants, ordered by name.
Interpretation herbrand(const Signature& sig, const std::vector<Formula>& atoms);
/// Ground atoms true in an interpretation whose constants name distinct
/// elements (the Herbrand case), sorted.
std::vector<Formula> true_atoms(const Interpretation& i, const Signature& sig);

/// Compiled formula: evaluates over Structures of a fixed signature.
/// Second-order quantifiers enumerate all relations, or only subsets of the
/// bounding relation when the quantifier carries a bound and pruning is on.
class Evaluator {
 public:
  Evaluator(const Formula& f, const Signature& sig, bool use_bounds = true);
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  /// `free_vars` assigns the formula's free object variables; `pvars` its
  /// free predicate variables.
  bool eval(const Structure& s, const std::map<std::string, int>& free_vars = {},
            const std::map<std::string, std::uint64_t>& pvars = {}) const;

  /// Free object variables in slot order.
  const std::vector<std::string>& free_variables() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Signature of f extended with `extra`, checking arity agreement.
Signature joint_signature(const Formula& f, const Signature& extra = {});

bool evaluate(const Formula& f, const Interpretation& i, const PredicateAssignment& a = {},
              const std::map<std::string, int>& env = {});

void check_caps(const Signature& sig, int size, const OracleLimits& limits);

/// Visits every structure of `sig` with the given universe size: constant
/// maps first, then extensions, both lexicographically. Stop by returning false.
void for_each_structure(const Signature& sig, int size, const std::function<bool(const Structure&)>& visit);

/// I satisfies SM[f], decided by enumerating every tuple u <= p.
bool is_stable(const Formula& f, const Interpretation& i, const OracleLimits& limits = {});

}  // namespace folf
