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

#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "skolem/arith.hpp"
#include "skolem/error.hpp"
#include "skolem/presburger.hpp"
#include "skolem/relativize.hpp"
#include "skolem/syntax.hpp"
#include "support/formula_gen.hpp"

namespace {

using skolem::Assignment;
using skolem::BigInt;
using skolem::ExponentContext;
using skolem::Formula;
using skolem::parse;
using skolem::relativize;
using skolem::pres::LinTerm;
using skolem::pres::PresFormula;
namespace ar = skolem::arith;
namespace pr = skolem::pres;
namespace st = skolem::testing;

LinTerm X(const char* v, long c = 1) {
  return LinTerm::var(ExponentContext::exponent_var(v), c);
}

Assignment at(std::initializer_list<std::pair<const char*, long>> kv) {
  Assignment a;
  for (const auto& [v, n] : kv) a[v] = ar::factor(n);
  return a;
}

// The tuple with the roles of the primes 2 and 3 exchanged.
ar::FactoredNat swap23(const ar::FactoredNat& n) {
  std::map<BigInt, BigInt> f;
  for (const auto& [p, e] : n.factors()) {
    f[p == 2 ? BigInt(3) : p == 3 ? BigInt(2) : p] = e;
  }
  return ar::FactoredNat(std::move(f));
}

}  // namespace

TEST_CASE("relativize examples") {
  CHECK(relativize(parse("v = w*w")) == PresFormula::lin_eq(X("v"), X("w", 2)));
  CHECK(relativize(parse("1 = 1")).is_const(true));
  PresFormula d = relativize(skolem::desugar(parse("divides(v, w)")));
  CHECK(d.kind() == skolem::pres::PKind::kExists);
  for (long xv = 0; xv <= 6; ++xv) {
    for (long xw = 0; xw <= 6; ++xw) {
      pr::Assignment a{{"x_v", xv}, {"x_w", xw}};
      CHECK(pr::pres_decide(d, a) == (xv <= xw));
    }
  }
  CHECK(relativize(parse("exists w. v = w^2")).free_vars() ==
        std::vector<std::string>{"x_v"});
}

TEST_CASE("relativize rejects counting atoms and sugar") {
  CHECK_THROWS_AS(relativize(parse("#[u: u = v] >= 1")),
                  skolem::InvalidArgument);
  CHECK_THROWS_AS(relativize(parse("prime(v)")), skolem::InvalidArgument);
}

TEST_CASE("pinned variables and shadowing binders") {
  ExponentContext ctx;
  ctx.pin("u", 1);
  CHECK(relativize(parse("u*v = w"), ctx) ==
        PresFormula::lin_eq(X("v") + LinTerm(1), X("w")));
  // The inner v shadows the outer one; the free v stays x_v.
  PresFormula f = relativize(parse("v = 1 /\\ exists v. exists v. v = w"));
  CHECK(f.free_vars() == std::vector<std::string>{"x_v", "x_w"});
}

TEST_CASE("eval_relativized examples") {
  Formula div = skolem::desugar(parse("divides(v, w)"));
  CHECK(skolem::eval_relativized(div, 2, at({{"v", 4}, {"w", 8}})));
  CHECK(skolem::eval_relativized(div, 3, at({{"v", 4}, {"w", 8}})));
  CHECK_FALSE(skolem::eval_relativized(parse("v = w"), 2,
                                       at({{"v", 4}, {"w", 8}})));
  CHECK_THROWS_AS(skolem::eval_relativized(parse("v = w"), 4,
                                           at({{"v", 4}, {"w", 8}})),
                  skolem::InvalidArgument);
  CHECK_THROWS_AS(skolem::eval_relativized(parse("v = w"), 2, at({{"v", 4}})),
                  skolem::InvalidArgument);
}

TEST_CASE("quantifier-free relativization agrees with integer arithmetic on "
          "p-parts") {
  std::mt19937_64 rng(20260418);
  const std::vector<std::string> vars{"v", "w", "x"};
  std::vector<ar::FactoredNat> nats;
  for (long n = 1; n <= 60; ++n) nats.push_back(ar::factor(n));
  int checked = 0;
  for (int round = 0; round < 24; ++round) {
    st::GenOptions opts;
    opts.quantifiers = 0;
    Formula phi = st::random_formula(rng, vars, opts);
    Formula core = skolem::desugar(phi);
    PresFormula q = pr::pres_qe(relativize(core));
    const auto& fv = phi.free_vars();
    std::vector<std::size_t> idx(fv.size(), 0);
    for (const BigInt& p : {BigInt(2), BigInt(3), BigInt(5)}) {
      std::fill(idx.begin(), idx.end(), 0);
      // Full grid for up to two variables, every 7th point for three.
      std::size_t point = 0;
      while (true) {
        if (fv.size() < 3 || point % 7 == 0) {
          Assignment a;
          st::Values parts;
          for (std::size_t i = 0; i < fv.size(); ++i) {
            a[fv[i]] = nats[idx[i]];
            parts[fv[i]] = ar::ppart(nats[idx[i]], p).value();
          }
          bool expected = st::eval_direct(phi, parts);
          REQUIRE(pr::eval_qf(q, skolem::exponents_at(a, p)) == expected);
          if (point % 97 == 0) {
            REQUIRE(skolem::eval_relativized(core, p, a) == expected);
          }
          ++checked;
        }
        ++point;
        std::size_t i = idx.size();
        while (i > 0 && idx[i - 1] + 1 == nats.size()) idx[--i] = 0;
        if (i == 0) break;
        ++idx[i - 1];
      }
    }
  }
  CHECK(checked > 100000);
}

TEST_CASE("relativization is the same at every prime") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"v", "w"};
  for (int round = 0; round < 40; ++round) {
    Formula core = skolem::desugar(st::random_formula(rng, vars));
    for (long a = 1; a <= 36; ++a) {
      for (long b = 1; b <= 36; b += 7) {
        Assignment x = at({{"v", a}, {"w", b}});
        Assignment y;
        for (const auto& [v, n] : x) y[v] = swap23(n);
        REQUIRE(skolem::eval_relativized(core, 2, x) ==
                skolem::eval_relativized(core, 3, y));
      }
    }
  }
}

TEST_CASE("relativization depends only on p-parts") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> vars{"v", "w"};
  for (int round = 0; round < 40; ++round) {
    Formula core = skolem::desugar(st::random_formula(rng, vars));
    for (long a = 1; a <= 36; ++a) {
      for (long b = 1; b <= 36; b += 5) {
        for (const long p : {2L, 3L, 5L}) {
          Assignment full = at({{"v", a}, {"w", b}});
          Assignment parts;
          for (const auto& [v, n] : full) parts[v] = ar::ppart(n, p);
          REQUIRE(skolem::eval_relativized(core, p, full) ==
                  skolem::eval_relativized(core, p, parts));
        }
      }
    }
  }
}
