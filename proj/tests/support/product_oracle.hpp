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

// An oracle for counting-free formulas that bypasses counting atoms
// entirely: the formula is evaluated in the finite product (N,+)^P, where P
// is a fixed list of primes (the grid primes plus some unused ones), by
// translating it into one Presburger formula over per-prime exponent
// variables and eliminating with Cooper's method. Tuples supported on the
// grid primes see the same truth value as in (N,*) once P has enough unused
// primes for the formula's quantifier rank.

#ifndef SKOLEM_TESTS_SUPPORT_PRODUCT_ORACLE_HPP_
#define SKOLEM_TESTS_SUPPORT_PRODUCT_ORACLE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "skolem/error.hpp"
#include "skolem/formula.hpp"
#include "skolem/presburger.hpp"
#include "skolem/syntax.hpp"

namespace skolem::testing {

class ProductOracle {
 public:
  // primes: the grid primes; extra: how many further primes P contains.
  ProductOracle(const Formula& f, std::vector<BigInt> primes,
                std::size_t extra)
      : primes_(std::move(primes)), width_(primes_.size() + extra) {
    Formula d = desugar(f);
    for (const auto& v : d.free_vars()) names_[v].push_back(v);
    pres::PresFormula p = translate(d);
    // Free variables vanish at the extra primes.
    for (const auto& v : d.free_vars()) {
      for (std::size_t c = primes_.size(); c < width_; ++c) {
        p = pres::substitute(p, coord(v, c), pres::LinTerm(0));
      }
    }
    qf_ = pres::pres_qe(p);
  }

  // Truth at an assignment supported on the grid primes.
  bool eval(const std::map<std::string, BigInt>& values) const {
    pres::Assignment a;
    for (const auto& [v, n] : values) {
      for (std::size_t c = 0; c < primes_.size(); ++c) {
        a[coord(v, c)] = valuation(n, primes_[c]);
      }
    }
    return pres::eval_qf(qf_, a);
  }

  const pres::PresFormula& quantifier_free() const { return qf_; }

 private:
  static BigInt valuation(BigInt n, const BigInt& p) {
    BigInt k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    return k;
  }

  static std::string coord(const std::string& name, std::size_t c) {
    return name + "@" + std::to_string(c);
  }

  pres::LinTerm exponent(const Term& t, std::size_t c) const {
    pres::LinTerm out;
    for (const auto& [v, k] : t.exponents()) {
      out = out + pres::LinTerm::var(coord(names_.at(v).back(), c), k);
    }
    return out;
  }

  pres::PresFormula translate(const Formula& f) {
    using pres::PresFormula;
    switch (f.kind()) {
      case Kind::kConst:
        return PresFormula::truth(f.value());
      case Kind::kEq: {
        std::vector<PresFormula> parts;
        for (std::size_t c = 0; c < width_; ++c) {
          parts.push_back(PresFormula::lin_eq(exponent(f.lhs(), c),
                                              exponent(f.rhs(), c)));
        }
        return parts.size() == 1 ? parts.front()
                                 : PresFormula::conj(std::move(parts));
      }
      case Kind::kNot:
        return PresFormula::negate(translate(f.child()));
      case Kind::kAnd:
      case Kind::kOr: {
        std::vector<PresFormula> parts;
        for (const auto& k : f.children()) parts.push_back(translate(k));
        return f.kind() == Kind::kAnd ? PresFormula::conj(std::move(parts))
                                      : PresFormula::disj(std::move(parts));
      }
      case Kind::kImplies:
        return PresFormula::disj({PresFormula::negate(translate(f.child(0))),
                                  translate(f.child(1))});
      case Kind::kExists:
      case Kind::kForall: {
        const std::string name = f.var() + "'" + std::to_string(++fresh_);
        names_[f.var()].push_back(name);
        PresFormula body = translate(f.child());
        names_[f.var()].pop_back();
        for (std::size_t c = width_; c-- > 0;) {
          body = f.kind() == Kind::kExists
                     ? PresFormula::exists(coord(name, c), body)
                     : PresFormula::forall(coord(name, c), body);
        }
        return body;
      }
      default:
        throw InvalidArgument("ProductOracle: counting-free formulas only");
    }
  }

  std::vector<BigInt> primes_;
  std::size_t width_;
  std::map<std::string, std::vector<std::string>> names_;
  int fresh_ = 0;
  pres::PresFormula qf_;
};

}  // namespace skolem::testing

#endif  // SKOLEM_TESTS_SUPPORT_PRODUCT_ORACLE_HPP_
