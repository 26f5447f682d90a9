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

// Relativization of a counting-free formula to a prime: every variable is
// replaced by its p-part, which turns the formula into Presburger arithmetic
// over exponents. The translation does not depend on p.

#ifndef SKOLEM_RELATIVIZE_HPP_
#define SKOLEM_RELATIVIZE_HPP_

#include <map>
#include <string>

#include "skolem/arith.hpp"
#include "skolem/formula.hpp"
#include "skolem/presburger.hpp"

namespace skolem {

using Assignment = std::map<std::string, arith::FactoredNat>;

// Injective map from object variables to exponent terms. Free variables map
// to x_<name>; a variable may also be pinned to a constant exponent (the
// binder of a counting atom is pinned to 1, since p_{p^oo} = p).
class ExponentContext {
 public:
  ExponentContext() = default;

  // Exponent variable used for the free object variable v.
  static std::string exponent_var(const std::string& v) { return "x_" + v; }

  void pin(const std::string& v, const BigInt& exponent);
  bool pinned(const std::string& v) const { return pins_.count(v) != 0; }

  // The exponent term for v in this context.
  pres::LinTerm lookup(const std::string& v) const;

  // Binds v to a fresh exponent variable for the scope of a quantifier and
  // returns that variable; unbind restores the previous meaning.
  std::string bind(const std::string& v);
  void unbind(const std::string& v);

 private:
  std::map<std::string, BigInt> pins_;
  std::map<std::string, std::vector<std::string>> scopes_;
  std::map<std::string, int> in_use_;
};

// Translates a desugared counting-free formula. Atomic v1^k1... = v1^l1...
// becomes sum k_i x_i = sum l_i x_i; connectives and quantifiers map
// through. Throws InvalidArgument on counting atoms or sugar.
pres::PresFormula relativize(const Formula& f,
                             ExponentContext ctx = ExponentContext());

// Truth of f relativized to the prime p at the tuple a.
bool eval_relativized(const Formula& f, const BigInt& p, const Assignment& a);

// The exponent assignment {x_v -> v_p(a_v)}.
pres::Assignment exponents_at(const Assignment& a, const BigInt& p);

}  // namespace skolem

#endif  // SKOLEM_RELATIVIZE_HPP_
