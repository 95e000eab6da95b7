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

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace folf {

/// Error categories surfaced through the C API as distinct codes.
enum class ErrorKind {
  Syntax,
  Arity,
  Kind,
  Capture,
  NotSentence,
  EmptyUniverse,
  NotReducible,
  NotFirstOrder,
  CapExceeded,
  Io,
  Internal
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Term {
  enum class Kind : unsigned char { Variable, Constant };
  Kind kind = Kind::Variable;
  std::string name;

  static Term var(std::string n) { return {Kind::Variable, std::move(n)}; }
  static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }
  bool is_var() const { return kind == Kind::Variable; }
  bool is_const() const { return kind == Kind::Constant; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

using Terms = std::vector<Term>;

enum class Op : unsigned char {
  Bottom,
  Pred,      // p(t1..tn)
  Equal,     // t1 = t2
  PredVar,   // u(t1..tn), second-order only
  And,
  Or,
  Implies,
  Forall,
  Exists,
  SoForall,  // second-order quantifiers over predicate variables
  SoExists
};

/// A quantified predicate variable. `bound_by` names a predicate (constant or
/// variable) whose extension is known to contain this variable's extension in
/// every branch where the quantified body is not vacuous; the evaluator uses
/// it to restrict enumeration to subsets. Empty when no such bound exists.
struct PredVarDecl {
  std::string name;
  int arity = 0;
  std::string bound_by;

  bool operator==(const PredVarDecl&) const = default;
};

class Formula;

struct Node {
  Op op = Op::Bottom;
  std::string symbol;  // predicate, predicate variable, or bound variable
  Terms args;
  std::vector<Formula> kids;
  std::vector<PredVarDecl> pvars;
};

/// Immutable first-order (optionally second-order) formula. Copies share
/// structure. Negation is F -> false and truth is false -> false.
class Formula {
 public:
  Formula();

  static Formula bottom();
  static Formula top();
  static Formula pred(std::string name, Terms args);
  static Formula equal(Term lhs, Term rhs);
  static Formula pred_var(std::string name, Terms args);
  static Formula land(Formula a, Formula b);
  static Formula lor(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula iff(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula forall(const std::vector<std::string>& vars, Formula body);
  static Formula exists(const std::vector<std::string>& vars, Formula body);
  static Formula so_forall(std::vector<PredVarDecl> vars, Formula body);
  static Formula so_exists(std::vector<PredVarDecl> vars, Formula body);

  /// Left-associated conjunction; the empty conjunction is true.
  static Formula conj(const std::vector<Formula>& fs);
  /// Left-associated disjunction; the empty disjunction is false.
  static Formula disj(const std::vector<Formula>& fs);
  /// (t1,..,tn) != (t1',..,tn'), i.e. -(t1=t1' & .. & tn=tn').
  static Formula tuple_neq(const Terms& a, const Terms& b);

  Op op() const { return node_->op; }
  const std::string& symbol() const { return node_->symbol; }
  const Terms& args() const { return node_->args; }
  const std::vector<Formula>& kids() const { return node_->kids; }
  const Formula& kid(std::size_t i) const { return node_->kids[i]; }
  const Formula& lhs() const { return node_->kids[0]; }
  const Formula& rhs() const { return node_->kids[1]; }
  const Formula& body() const { return node_->kids[0]; }
  const std::vector<PredVarDecl>& pvars() const { return node_->pvars; }

  bool is_bottom() const { return op() == Op::Bottom; }
  bool is_top() const;
  bool is_atom() const { return op() == Op::Pred || op() == Op::Equal || op() == Op::PredVar; }
  /// Matches F -> false (but not false -> false).
  bool is_negation() const;
  bool is_quantifier() const { return op() == Op::Forall || op() == Op::Exists; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  bool same_node(const Formula& other) const { return node_ == other.node_; }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

struct Signature {
  std::set<std::string> constants;
  std::map<std::string, int> predicates;

  bool operator==(const Signature&) const = default;
};

using Substitution = std::map<std::string, Term>;

struct Occurrence {
  Formula atom;
  int antecedent_depth = 0;  // implications having this occurrence in their antecedent
  bool positive = false;
  bool strictly_positive = false;
  bool in_negative = false;  // belongs to some occurrence of a negative subformula
};

// Syntactic queries.
std::set<std::string> free_vars(const Formula& f);
std::set<std::string> all_vars(const Formula& f);
bool is_sentence(const Formula& f);
bool is_first_order(const Formula& f);
bool is_negative(const Formula& f);
bool is_rectified(const Formula& f);
Signature signature_of(const Formula& f);
/// Merges `b` into `a`; mismatched predicate arities raise ErrorKind::Arity.
void merge_signature(Signature& a, const Signature& b);
std::vector<Occurrence> positive_occurrences(const Formula& f);
/// Non-equality atoms in order of occurrence (with repetitions).
std::vector<Formula> atoms_of(const Formula& f);
std::set<std::string> vars_of_terms(const Terms& ts);

// Transformations.
Formula rectify(const Formula& f);
/// Renames every variable of `f` (free or bound) that occurs in `avoid`.
Formula rename_apart(const Formula& f, const std::set<std::string>& avoid);
Formula apply_subst(const Formula& f, const Substitution& theta);
Term apply_subst(const Term& t, const Substitution& theta);
Terms apply_subst(const Terms& ts, const Substitution& theta);
Formula universal_closure(const Formula& f);
/// Replaces constants in strictly positive atoms by guarded fresh variables.
Formula sentence_normal_form(const Formula& f);
bool is_sentence_normal_form(const Formula& f);

/// Truth-constant folding: absorbs true/false through the connectives,
/// folds t=t to true and drops duplicate siblings. Constant equalities
/// between distinct symbols are left alone unless `unique_names` is set.
Formula simplify(const Formula& f, bool unique_names = false);

/// Renames bound variables to V0, V1, .. in binder order and free variables
/// to F0, F1, .. by first occurrence; orders the two sides of equalities.
/// Two formulas equal up to renaming map to the same canonical tree.
Formula canonical(const Formula& f);

/// Smallest name `base`, `base1`, `base2`, .. (digits of `base` stripped) not
/// contained in `used`.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

// Printing in the input syntax (second-order content uses FORALL/EXISTS).
std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace folf
