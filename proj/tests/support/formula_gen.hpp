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

// Random object-language formulas and a direct integer evaluator for their
// quantifier-free part, shared by the unit and acceptance tests.

#ifndef SKOLEM_TESTS_SUPPORT_FORMULA_GEN_HPP_
#define SKOLEM_TESTS_SUPPORT_FORMULA_GEN_HPP_

#include <map>
#include <random>
#include <string>
#include <vector>

#include "skolem/bigint.hpp"
#include "skolem/error.hpp"
#include "skolem/formula.hpp"

namespace skolem::testing {

using Values = std::map<std::string, BigInt>;

inline Term random_monomial(std::mt19937_64& rng,
                            const std::vector<std::string>& vars) {
  Term t;
  const int factors = static_cast<int>(rng() % 3);
  for (int i = 0; i < factors; ++i) {
    const auto& v = vars[rng() % vars.size()];
    t = t * Term::power(v, 1 + static_cast<int>(rng() % 2));
  }
  return t;
}

inline Formula random_eq(std::mt19937_64& rng,
                         const std::vector<std::string>& vars) {
  return Formula::eq(random_monomial(rng, vars), random_monomial(rng, vars));
}

struct GenOptions {
  int depth = 3;
  int quantifiers = 2;
  bool sugar = true;  // allow divides(...) atoms
};

inline Formula random_formula(std::mt19937_64& rng,
                              const std::vector<std::string>& vars,
                              int depth, int& quantifiers, bool sugar) {
  if (depth == 0 || rng() % 4 == 0) {
    if (sugar && rng() % 4 == 0) {
      return Formula::divides(random_monomial(rng, vars),
                              random_monomial(rng, vars));
    }
    return random_eq(rng, vars);
  }
  const unsigned pick = static_cast<unsigned>(rng() % 6);
  if (pick >= 4 && quantifiers > 0) {
    --quantifiers;
    const auto& w = vars[rng() % vars.size()];
    Formula body = random_formula(rng, vars, depth - 1, quantifiers, sugar);
    return pick == 4 ? Formula::exists(w, body) : Formula::forall(w, body);
  }
  switch (pick % 4) {
    case 0:
      return Formula::negate(
          random_formula(rng, vars, depth - 1, quantifiers, sugar));
    case 1: {
      Formula a = random_formula(rng, vars, depth - 1, quantifiers, sugar);
      return Formula::conj(
          {a, random_formula(rng, vars, depth - 1, quantifiers, sugar)});
    }
    case 2: {
      Formula a = random_formula(rng, vars, depth - 1, quantifiers, sugar);
      return Formula::disj(
          {a, random_formula(rng, vars, depth - 1, quantifiers, sugar)});
    }
    default: {
      Formula a = random_formula(rng, vars, depth - 1, quantifiers, sugar);
      return Formula::implies(
          a, random_formula(rng, vars, depth - 1, quantifiers, sugar));
    }
  }
}

inline Formula random_formula(std::mt19937_64& rng,
                              const std::vector<std::string>& vars,
                              const GenOptions& opts = {}) {
  int q = opts.quantifiers;
  return random_formula(rng, vars, opts.depth, q, opts.sugar);
}

inline BigInt term_value(const Term& t, const Values& a) {
  BigInt r = 1;
  for (const auto& [v, k] : t.exponents()) {
    const BigInt& x = a.at(v);
    for (BigInt i = 0; i < k; ++i) r *= x;
  }
  return r;
}

// Truth of a quantifier-free formula (divides allowed) on actual integers.
inline bool eval_direct(const Formula& f, const Values& a) {
  switch (f.kind()) {
    case Kind::kConst:
      return f.value();
    case Kind::kEq:
      return term_value(f.lhs(), a) == term_value(f.rhs(), a);
    case Kind::kDivides:
      return term_value(f.rhs(), a) % term_value(f.lhs(), a) == 0;
    case Kind::kNot:
      return !eval_direct(f.child(), a);
    case Kind::kAnd:
      for (const auto& k : f.children()) {
        if (!eval_direct(k, a)) return false;
      }
      return true;
    case Kind::kOr:
      for (const auto& k : f.children()) {
        if (eval_direct(k, a)) return true;
      }
      return false;
    case Kind::kImplies:
      return !eval_direct(f.child(0), a) || eval_direct(f.child(1), a);
    default:
      throw InvalidArgument("eval_direct: quantifier-free formulas only");
  }
}

}  // namespace skolem::testing

#endif  // SKOLEM_TESTS_SUPPORT_FORMULA_GEN_HPP_
