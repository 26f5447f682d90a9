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

// Random Presburger formulas and brute-force oracles shared by the unit and
// acceptance tests.

#ifndef SKOLEM_TESTS_SUPPORT_PRES_GEN_HPP_
#define SKOLEM_TESTS_SUPPORT_PRES_GEN_HPP_

#include <random>
#include <string>
#include <vector>

#include "skolem/presburger.hpp"

namespace skolem::testing {

using pres::Assignment;
using pres::LinTerm;
using pres::PresFormula;

inline LinTerm random_term(std::mt19937_64& rng,
                           const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  LinTerm t(coeff(rng));
  for (const auto& v : vars) {
    if (rng() % 2) t = t + LinTerm::var(v, coeff(rng));
  }
  return t;
}

inline PresFormula random_atom(std::mt19937_64& rng,
                               const std::vector<std::string>& vars) {
  switch (rng() % 3) {
    case 0:
      return PresFormula::lin_eq(random_term(rng, vars),
                                 random_term(rng, vars));
    case 1:
      return PresFormula::lin_le(random_term(rng, vars),
                                 random_term(rng, vars));
    default:
      return PresFormula::dvd(2 + static_cast<int>(rng() % 5),
                              random_term(rng, vars));
  }
}

inline PresFormula random_qf(std::mt19937_64& rng,
                             const std::vector<std::string>& vars,
                             int depth) {
  if (depth == 0 || rng() % 3 == 0) return random_atom(rng, vars);
  switch (rng() % 3) {
    case 0:
      return PresFormula::negate(random_qf(rng, vars, depth - 1));
    case 1:
      return PresFormula::conj(
          {random_qf(rng, vars, depth - 1), random_qf(rng, vars, depth - 1)});
    default:
      return PresFormula::disj(
          {random_qf(rng, vars, depth - 1), random_qf(rng, vars, depth - 1)});
  }
}

// Brute-force truth of exists x. body for x in [0, limit].
inline bool brute_exists(const std::string& x, const PresFormula& body,
                         Assignment a, long limit) {
  for (long v = 0; v <= limit; ++v) {
    a[x] = v;
    if (pres::eval_qf(body, a)) return true;
  }
  return false;
}

// All assignments of vars to [0, hi].
inline std::vector<Assignment> grid(const std::vector<std::string>& vars,
                                    long hi) {
  std::vector<Assignment> out{{}};
  for (const auto& v : vars) {
    std::vector<Assignment> next;
    for (const auto& a : out) {
      for (long x = 0; x <= hi; ++x) {
        Assignment b = a;
        b[v] = x;
        next.push_back(b);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace skolem::testing

#endif  // SKOLEM_TESTS_SUPPORT_PRES_GEN_HPP_
