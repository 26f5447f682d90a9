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

#include "skolem/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/miller_rabin.hpp>

#include "skolem/error.hpp"

namespace skolem::arith {
namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with these bases.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_u64(u64 n, std::map<BigInt, BigInt>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out[BigInt(n)] += 1;
    return;
  }
  u64 d = pollard_rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<u64>::max()) {
    return is_prime_u64(static_cast<u64>(n));
  }
  return boost::multiprecision::miller_rabin_test(n, 25);
}

BigInt next_prime(const BigInt& n) {
  BigInt c = n < 2 ? BigInt(2) : BigInt(n + 1);
  while (!is_prime(c)) ++c;
  return c;
}

FactoredNat::FactoredNat(std::map<BigInt, BigInt> factors) {
  for (auto& [p, e] : factors) {
    if (e < 0) {
      throw InvalidArgument("negative exponent " + e.str() + " for " +
                            p.str());
    }
    if (e == 0) continue;
    if (!is_prime(p)) {
      throw InvalidArgument("factor key " + p.str() + " is not prime");
    }
    factors_.emplace(p, e);
  }
}

FactoredNat FactoredNat::prime_power(const BigInt& p, const BigInt& e) {
  return FactoredNat(std::map<BigInt, BigInt>{{p, e}});
}

BigInt FactoredNat::exponent(const BigInt& p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? BigInt(0) : it->second;
}

BigInt FactoredNat::value() const {
  BigInt v = 1;
  for (const auto& [p, e] : factors_) {
    for (BigInt i = 0; i < e; ++i) v *= p;
  }
  return v;
}

bool FactoredNat::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const auto& kv) { return kv.second == 1; });
}

std::string FactoredNat::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

FactoredNat factor(const BigInt& n) {
  if (n < 1) {
    throw InvalidArgument("factor: expected a positive integer, got " +
                          n.str());
  }
  if (n > kFactorCap) {
    throw InvalidArgument("factor: " + n.str() +
                          " exceeds the supported size cap 2^64-1");
  }
  std::map<BigInt, BigInt> out;
  u64 v = static_cast<u64>(n);
  for (u64 p = 2; p < 1000 && p * p <= v; ++p) {
    while (v % p == 0) {
      out[BigInt(p)] += 1;
      v /= p;
    }
  }
  factor_u64(v, out);
  return FactoredNat(std::move(out));
}

std::set<BigInt> support(const FactoredNat& a) {
  std::set<BigInt> s;
  for (const auto& kv : a.factors()) s.insert(kv.first);
  return s;
}

std::set<BigInt> support(const Tuple& a) {
  std::set<BigInt> s;
  for (const auto& x : a) {
    for (const auto& kv : x.factors()) s.insert(kv.first);
  }
  return s;
}

FactoredNat radical(const FactoredNat& a) {
  std::map<BigInt, BigInt> f;
  for (const auto& kv : a.factors()) f.emplace(kv.first, 1);
  return FactoredNat(std::move(f));
}

FactoredNat ppart(const FactoredNat& a, const BigInt& p) {
  if (!is_prime(p)) {
    throw InvalidArgument("ppart: " + p.str() + " is not prime");
  }
  BigInt e = a.exponent(p);
  return e == 0 ? FactoredNat() : FactoredNat::prime_power(p, e);
}

Tuple ppart(const Tuple& a, const BigInt& p) {
  Tuple out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(ppart(x, p));
  return out;
}

FactoredNat mul(const FactoredNat& a, const FactoredNat& b) {
  std::map<BigInt, BigInt> f = a.factors();
  for (const auto& [p, e] : b.factors()) f[p] += e;
  return FactoredNat(std::move(f));
}

bool divides(const FactoredNat& a, const FactoredNat& b) {
  for (const auto& [p, e] : a.factors()) {
    if (b.exponent(p) < e) return false;
  }
  return true;
}

FactoredNat gcd(const FactoredNat& a, const FactoredNat& b) {
  std::map<BigInt, BigInt> f;
  for (const auto& [p, e] : a.factors()) {
    BigInt o = b.exponent(p);
    if (o != 0) f.emplace(p, std::min(e, o));
  }
  return FactoredNat(std::move(f));
}

bool precedes(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("precedes: tuple lengths differ (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] != b[m]) return divides(a[m], b[m]);
  }
  return true;
}

std::vector<Tuple> min_elements(const std::vector<Tuple>& set) {
  if (set.empty()) throw InvalidArgument("min_elements: empty set");
  std::vector<Tuple> d(set);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  for (const auto& t : d) {
    if (t.size() != d.front().size()) {
      throw InvalidArgument("min_elements: tuples of different lengths");
    }
  }
  std::vector<Tuple> out;
  for (const auto& x : d) {
    bool minimal = true;
    for (const auto& y : d) {
      if (y != x && precedes(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

Tuple gamma(const std::vector<Tuple>& set) {
  if (set.empty()) throw InvalidArgument("gamma: empty set");
  const std::size_t n = set.front().size();
  std::set<BigInt> primes;
  for (const auto& t : set) {
    if (t.size() != n) {
      throw InvalidArgument("gamma: tuples of different lengths");
    }
    auto s = support(t);
    primes.insert(s.begin(), s.end());
  }
  std::vector<std::map<BigInt, BigInt>> out(n);
  for (const auto& p : primes) {
    // On tuples of p-powers the order is lexicographic on exponents.
    std::vector<BigInt> best;
    for (const auto& t : set) {
      std::vector<BigInt> exps;
      exps.reserve(n);
      for (const auto& x : t) exps.push_back(x.exponent(p));
      if (best.empty() || exps < best) best = std::move(exps);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (best[i] != 0) out[i].emplace(p, best[i]);
    }
  }
  Tuple result;
  result.reserve(n);
  for (auto& f : out) result.emplace_back(std::move(f));
  return result;
}

std::string to_string(const Tuple& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ", ";
    os << t[i].value();
  }
  os << ')';
  return os.str();
}

}  // namespace skolem::arith
