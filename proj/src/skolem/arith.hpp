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

// Exact arithmetic on positive naturals kept in factored form: supports,
// radicals, p-parts, and the divisibility-lexicographic order on tuples.

#ifndef SKOLEM_ARITH_HPP_
#define SKOLEM_ARITH_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "skolem/bigint.hpp"

namespace skolem::arith {

// Largest integer accepted by factor(); larger inputs are rejected.
inline const BigInt kFactorCap = (BigInt(1) << 64) - 1;

bool is_prime(const BigInt& n);
// Least prime strictly greater than n.
BigInt next_prime(const BigInt& n);

// A positive natural as a finite map prime -> positive exponent. The value 1
// is the empty map.
class FactoredNat {
 public:
  FactoredNat() = default;
  // Validates that every key is prime and every exponent positive; zero
  // exponents are dropped.
  explicit FactoredNat(std::map<BigInt, BigInt> factors);

  static FactoredNat prime_power(const BigInt& p, const BigInt& e);

  const std::map<BigInt, BigInt>& factors() const { return factors_; }
  // v_p(a); zero when p is not in the support.
  BigInt exponent(const BigInt& p) const;
  BigInt value() const;
  bool is_one() const { return factors_.empty(); }
  bool is_squarefree() const;

  // "2^3 * 3^2 * 5"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const FactoredNat&, const FactoredNat&) = default;
  friend auto operator<=>(const FactoredNat& a, const FactoredNat& b) {
    return a.factors_ <=> b.factors_;
  }

 private:
  std::map<BigInt, BigInt> factors_;
};

using Tuple = std::vector<FactoredNat>;

FactoredNat factor(const BigInt& n);
inline FactoredNat factor(long long n) { return factor(BigInt(n)); }

std::set<BigInt> support(const FactoredNat& a);
std::set<BigInt> support(const Tuple& a);
FactoredNat radical(const FactoredNat& a);
// p^{v_p(a)}; throws InvalidArgument when p is not prime.
FactoredNat ppart(const FactoredNat& a, const BigInt& p);
Tuple ppart(const Tuple& a, const BigInt& p);
FactoredNat mul(const FactoredNat& a, const FactoredNat& b);
bool divides(const FactoredNat& a, const FactoredNat& b);
FactoredNat gcd(const FactoredNat& a, const FactoredNat& b);

// The order on n-tuples: a precedes b iff a == b or, at the first coordinate
// where they differ, a's entry divides b's.
bool precedes(const Tuple& a, const Tuple& b);

// The precedes-minimal members of an explicit finite set (duplicates are
// collapsed). Result is sorted.
std::vector<Tuple> min_elements(const std::vector<Tuple>& set);

// Per prime, the precedes-least p-part tuple over the set. For 1-tuples this
// is the gcd.
Tuple gamma(const std::vector<Tuple>& set);

std::string to_string(const Tuple& t);

}  // namespace skolem::arith

#endif  // SKOLEM_ARITH_HPP_
