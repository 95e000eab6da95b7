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
#include <utility>
#include <vector>

#include "folf/formula.hpp"

namespace folf {

/// Predicate constants p1..pn of a formula, ordered by name.
using PredList = std::vector<std::pair<std::string, int>>;

PredList predicates_of(const Formula& f);

/// Predicate variables paired with `preds`, named prefix + predicate.
std::vector<PredVarDecl> pred_vars(const PredList& preds, const std::string& prefix,
                                   const std::vector<std::string>& bounds = {});

/// The comparisons between tuples of predicates (constants or variables).
/// Each side lists symbols; `is_var` says which kind each side holds.
struct PredTuple {
  std::vector<std::string> names;
  std::vector<int> arities;
  bool is_var = true;

  static PredTuple constants(const PredList& preds);
  static PredTuple variables(const std::vector<PredVarDecl>& vars);
  Formula atom(std::size_t i, const Terms& args) const;
  std::size_t size() const { return names.size(); }
};

Formula tuple_le(const PredTuple& u, const PredTuple& p);
Formula tuple_eq(const PredTuple& u, const PredTuple& p);
/// (u <= p) & -(u = p); false for empty tuples.
Formula tuple_lt(const PredTuple& u, const PredTuple& p);

/// F*(u). `u` gives the variable of every predicate of f.
Formula star(const Formula& f, const PredTuple& p, const PredTuple& u);

/// F & -exists u((u < p) & F*(u)).
Formula sm(const Formula& f);

Formula nes(const Formula& f, const PredTuple& p, const PredTuple& u);
Formula nonempty(const PredTuple& u);
Formula edge_formula(const Formula& f, const PredTuple& p, const PredTuple& v, const PredTuple& u);
Formula sc(const Formula& f, const PredTuple& p, const PredTuple& u);
Formula loop_formula_2nd(const Formula& f, const PredTuple& p, const PredTuple& u);

enum class Prop2Variant { Nonempty, Loop };

/// F & forall u((u <= p) & C(u) -> -NES_F(u)) with C = Nonempty or Loop_F.
Formula prop2_form(const Formula& f, Prop2Variant variant);

}  // namespace folf
