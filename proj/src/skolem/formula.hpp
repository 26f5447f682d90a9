// Copyright 2026 The Skolem Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Formula AST for first-order formulas over (N, *, 1) extended with counting
// atoms and sugar predicates.

#ifndef SKOLEM_FORMULA_HPP_
#define SKOLEM_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "skolem/bigint.hpp"

namespace skolem {

// A monomial v1^k1 * ... * vn^kn; the constant 1 is the empty map.
class Term {
 public:
  Term() = default;
  static Term var(const std::string& name);
  // Throws InvalidArgument unless e >= 1.
  static Term power(const std::string& name, const BigInt& e);

  const std::map<std::string, BigInt>& exponents() const { return exps_; }
  bool is_one() const { return exps_.empty(); }
  bool mentions(const std::string& v) const { return exps_.count(v) != 0; }
  BigInt exponent(const std::string& v) const;

  Term operator*(const Term& other) const;
  // Replaces every occurrence of v^k by t^k.
  Term substitute(const std::string& v, const Term& t) const;
  Term rename(const std::string& from, const std::string& to) const;

  // Canonical form: variables in name order, "v^2*w"; "1" when empty.
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term& a, const Term& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::map<std::string, BigInt> exps_;
};

enum class Kind {
  kConst,
  kEq,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kExists,
  kForall,
  kCountGE,
  kDivides,
  kPrime,
  kRad,
  kPPartEq,
};

struct FormulaNode;

// Immutable, shared formula handle with structural equality. Nodes cache
// their hash and free-variable set.
class Formula {
 public:
  Formula();  // the constant true

  // Faithful constructors: no folding or flattening.
  static Formula truth(bool value);
  static Formula eq(Term lhs, Term rhs);
  static Formula negate(Formula body);
  // And/Or take at least two operands.
  static Formula conj(std::vector<Formula> args);
  static Formula disj(std::vector<Formula> args);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  // "#[var: body] >= n": at least n primes p with body relativized to p,
  // var standing for p itself. Rejects bodies containing counting atoms.
  static Formula count_ge(std::uint64_t n, std::string var, Formula body);
  static Formula divides(Term lhs, Term rhs);
  static Formula prime(std::string var);
  static Formula rad(std::string var);
  // ppart(v, u) = rhs, i.e. the u-part of v equals rhs.
  static Formula ppart_eq(std::string v, std::string u, Term rhs);

  Kind kind() const;
  bool value() const;                 // kConst
  const Term& lhs() const;            // kEq, kDivides
  const Term& rhs() const;            // kEq, kDivides, kPPartEq
  const std::string& var() const;     // binders, kPrime, kRad, kPPartEq (v)
  const std::string& prime_var() const;  // kPPartEq (u)
  std::uint64_t count() const;        // kCountGE
  const std::vector<Formula>& children() const;
  const Formula& child(std::size_t i = 0) const;

  std::size_t hash() const;
  const std::vector<std::string>& free_vars() const;  // sorted
  bool has_free(const std::string& v) const;
  bool has_counting() const;
  bool has_sugar() const;
  bool has_quantifier() const;
  // Number of distinct nodes in the DAG.
  std::size_t dag_size() const;

  const FormulaNode* id() const { return node_.get(); }
  bool is_const(bool v) const {
    return kind() == Kind::kConst && value() == v;
  }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
  static Formula make(FormulaNode node);

  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

struct FormulaNode {
  Kind kind = Kind::kConst;
  bool value = true;
  Term lhs, rhs;
  std::string var, var2;
  std::uint64_t count = 0;
  std::vector<Formula> kids;
  std::size_t hash = 0;
  std::vector<std::string> free;
  bool counting = false;
  bool sugar = false;
  bool quantifier = false;
};

// Simplifying builders used by the elimination pipeline: constant folding,
// flattening, duplicate removal, double negation.
Formula mk_not(const Formula& f);
Formula mk_and(std::vector<Formula> args);
Formula mk_or(std::vector<Formula> args);
Formula mk_and(const Formula& a, const Formula& b);
Formula mk_or(const Formula& a, const Formula& b);
Formula mk_implies(const Formula& a, const Formula& b);
Formula mk_iff(const Formula& a, const Formula& b);

// Every variable name occurring in f, bound or free.
std::set<std::string> all_vars(const Formula& f);

// Capture-avoiding renaming of free variables.
Formula rename_free(const Formula& f,
                    const std::map<std::string, std::string>& renaming);
// Capture-avoiding substitution of a term for a free variable.
Formula substitute(const Formula& f, const std::string& var, const Term& t);

// Renames binders so that every bound name is distinct from every other
// bound name and from the free variables.
Formula rename_apart(const Formula& f);

// Generates names not in a reserved set.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(std::set<std::string> used) : used_(std::move(used)) {}
  void reserve(const std::string& name) { used_.insert(name); }
  void reserve_all(const Formula& f);
  bool used(const std::string& name) const { return used_.count(name) != 0; }
  // base itself when free, otherwise base_1, base_2, ...
  std::string fresh(const std::string& base);

 private:
  std::set<std::string> used_;
  std::map<std::string, std::size_t> next_;
};

}  // namespace skolem

#endif  // SKOLEM_FORMULA_HPP_
