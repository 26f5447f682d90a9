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

// Constructions on definable sets at standard parameters: coding a definable
// set of primes by a squarefree number, and rewriting a counting formula in
// tuple variables so that its parameters become squarefree codes.

#ifndef SKOLEM_DEFINABLE_HPP_
#define SKOLEM_DEFINABLE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skolem/arith.hpp"
#include "skolem/engine.hpp"
#include "skolem/formula.hpp"
#include "skolem/relativize.hpp"

namespace skolem {

enum class Polarity {
  kDirect,      // the set is the primes dividing the code
  kComplement,  // the set is the primes not dividing the code
};

std::string to_string(Polarity p);

struct RadicalCode {
  Polarity polarity = Polarity::kDirect;
  arith::FactoredNat code;  // squarefree

  // Whether the coded set contains the prime p.
  bool contains(const BigInt& p) const;
  friend bool operator==(const RadicalCode&, const RadicalCode&) = default;
};

// The set {p prime : theta(p; c)} as a radical code. Membership outside the
// support of c is decided at the least prime not in it. The parameters must
// cover every free variable of theta other than u.
RadicalCode radical_code(const Formula& theta, const std::string& u,
                         const Assignment& params, Engine& engine);
RadicalCode radical_code(const Formula& theta, const std::string& u,
                         const Assignment& params);

// The result of rewriting #[p: theta(v; w)] >= k at parameters c.
struct EmbedRewrite {
  // A counting formula in the tuple variables and the code variables.
  Formula psi;
  // Code variable of each sign pattern (a string of 0/1, one per tuple
  // variable) and its code.
  std::map<std::string, std::string> param_of;
  std::map<std::string, RadicalCode> params;

  // The assignment of the code variables.
  Assignment code_assignment() const;
};

// Rewrites #[binder: theta] >= k, with tuple variables `vars` and the other
// free variables fixed by `params`. On every tuple of squarefree numbers the
// rewrite has the same truth value as the original. `binder` may be empty
// when theta does not mention the prime.
EmbedRewrite stable_embed_rewrite(const Formula& theta,
                                  const std::vector<std::string>& vars,
                                  std::uint64_t k, const Assignment& params,
                                  const std::string& binder, Engine& engine);
EmbedRewrite stable_embed_rewrite(const Formula& theta,
                                  const std::vector<std::string>& vars,
                                  std::uint64_t k, const Assignment& params,
                                  const std::string& binder = "");

// Leafwise rewrite of an arbitrary formula: the formula is brought to
// counting normal form and each counting atom is rewritten; codes of all
// atoms are collected in one rewrite.
EmbedRewrite stable_embed_rewrite_formula(const Formula& phi,
                                          const std::vector<std::string>& vars,
                                          const Assignment& params,
                                          Engine& engine);

}  // namespace skolem

#endif  // SKOLEM_DEFINABLE_HPP_
