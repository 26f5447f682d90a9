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

// Presburger arithmetic over the natural numbers (0 included): linear terms,
// formulas with divisibility atoms, Cooper-style quantifier elimination and
// decision.

#ifndef SKOLEM_PRESBURGER_HPP_
#define SKOLEM_PRESBURGER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "skolem/bigint.hpp"

namespace skolem::pres {

using Assignment = std::map<std::string, BigInt>;

// constant + sum of coefficient * variable; zero coefficients are never
// stored.
class LinTerm {
 public:
  LinTerm() = default;
  explicit LinTerm(BigInt constant) : constant_(std::move(constant)) {}
  static LinTerm var(const std::string& name, const BigInt& coeff = 1);

  const std::map<std::string, BigInt>& coeffs() const { return coeffs_; }
  const BigInt& constant() const { return constant_; }
  BigInt coeff(const std::string& v) const;
  bool is_constant() const { return coeffs_.empty(); }

  LinTerm operator+(const LinTerm& o) const;
  LinTerm operator-(const LinTerm& o) const;
  LinTerm operator-() const;
  LinTerm operator*(const BigInt& k) const;
  LinTerm substitute(const std::string& v, const LinTerm& t) const;
  // Throws InvalidArgument on an unassigned variable.
  BigInt evaluate(const Assignment& a) const;

  // "2*x + y - 3"; "0" for the zero term.
  std::string to_string() const;

  friend bool operator==(const LinTerm&, const LinTerm&) = default;
  friend bool operator<(const LinTerm& a, const LinTerm& b) {
    if (a.coeffs_ != b.coeffs_) return a.coeffs_ < b.coeffs_;
    return a.constant_ < b.constant_;
  }

 private:
  std::map<std::string, BigInt> coeffs_;
  BigInt constant_ = 0;
};

enum class PKind { kConst, kEq, kLe, kDvd, kNot, kAnd, kOr, kExists, kForall };

struct PresNode;

// Immutable Presburger formula. Atoms are kept in normal form: kEq means
// t = 0, kLe means t <= 0, kDvd means d | t, with gcd-normalized
// coefficients; ground atoms fold to constants. Because the domain is the
// naturals, atoms whose sign is forced by nonnegativity also fold.
class PresFormula {
 public:
  PresFormula();  // true

  static PresFormula truth(bool v);
  static PresFormula lin_eq(const LinTerm& a, const LinTerm& b);  // a = b
  static PresFormula lin_le(const LinTerm& a, const LinTerm& b);  // a <= b
  static PresFormula dvd(const BigInt& d, const LinTerm& t);      // d | t
  // Simplifying connectives (constant folding, flattening, dedup).
  static PresFormula negate(const PresFormula& f);
  static PresFormula conj(std::vector<PresFormula> args);
  static PresFormula disj(std::vector<PresFormula> args);
  static PresFormula exists(const std::string& v, const PresFormula& body);
  static PresFormula forall(const std::string& v, const PresFormula& body);

  PKind kind() const;
  bool value() const;                 // kConst
  const LinTerm& term() const;        // atoms
  const BigInt& modulus() const;      // kDvd
  const std::string& var() const;     // quantifiers
  const std::vector<PresFormula>& children() const;
  const PresFormula& child(std::size_t i = 0) const;
  const std::vector<std::string>& free_vars() const;  // sorted
  bool has_free(const std::string& v) const;
  bool is_quantifier_free() const;
  std::size_t hash() const;
  std::size_t dag_size() const;
  bool is_const(bool v) const { return kind() == PKind::kConst && value() == v; }
  const PresNode* id() const { return node_.get(); }

  friend bool operator==(const PresFormula& a, const PresFormula& b);

 private:
  explicit PresFormula(std::shared_ptr<const PresNode> n) : node_(std::move(n)) {}
  static PresFormula make(PresNode node);
  static PresFormula atom(PKind k, BigInt d, LinTerm t);

  std::shared_ptr<const PresNode> node_;
};

struct PresHash {
  std::size_t operator()(const PresFormula& f) const { return f.hash(); }
};

struct PresNode {
  PKind kind = PKind::kConst;
  bool value = true;
  LinTerm term;
  BigInt modulus = 0;
  std::string var;
  std::vector<PresFormula> kids;
  std::vector<std::string> free;
  bool qf = true;
  std::size_t hash = 0;
};

// Capture-free substitution of a linear term for a free variable (bound
// variables shadow).
PresFormula substitute(const PresFormula& f, const std::string& v,
                       const LinTerm& t);

// Truth of a quantifier-free formula; throws InvalidArgument on quantifiers
// or unassigned variables.
bool eval_qf(const PresFormula& f, const Assignment& a);

struct PresLimits {
  // Largest formula (DAG nodes) an elimination step may produce.
  std::size_t node_limit = 2'000'000;
};

// Counters shared by the elimination routines.
struct PresStats {
  std::uint64_t qe_calls = 0;
  std::uint64_t cooper_steps = 0;
};

// Quantifier elimination; the result is quantifier-free and equivalent over
// natural-number assignments. Throws ResourceError past the node limit.
PresFormula pres_qe(const PresFormula& f, const PresLimits& limits = {},
                    PresStats* stats = nullptr);

// Eliminates one existential quantifier over a quantifier-free body.
PresFormula cooper_exists(const std::string& x, const PresFormula& body,
                          const PresLimits& limits = {},
                          PresStats* stats = nullptr);

// Truth under an assignment covering every free variable.
bool pres_decide(const PresFormula& f, const Assignment& a,
                 const PresLimits& limits = {});

// For f = exists x. (quantifier-free): a number B such that, under the given
// assignment of the other free variables, if a witness exists then one
// exists in [0, B].
BigInt witness_bound(const PresFormula& f, const Assignment& a);

std::string to_string(const PresFormula& f);

}  // namespace skolem::pres

#endif  // SKOLEM_PRESBURGER_HPP_
