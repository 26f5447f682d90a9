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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "skolem/arith.hpp"
#include "skolem/error.hpp"
#include "skolem/qe.hpp"
#include "skolem/semantics.hpp"
#include "skolem/syntax.hpp"
#include "support/formula_gen.hpp"

namespace {

using skolem::Assignment;
using skolem::BigInt;
using skolem::Engine;
using skolem::EngineOptions;
using skolem::Formula;
using skolem::Kind;
using skolem::parse;
namespace ar = skolem::arith;
namespace st = skolem::testing;

EngineOptions raw_options() {
  EngineOptions o;
  o.prune = false;
  o.compact_bodies = false;
  return o;
}

// Whether the normal form has quantifiers only inside counting bodies and
// no nested counting atoms.
bool well_shaped(const Formula& f) {
  switch (f.kind()) {
    case Kind::kConst:
      return true;
    case Kind::kCountGE:
      return !f.child().has_counting() && !f.child().has_sugar();
    case Kind::kNot:
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
      for (const auto& k : f.children()) {
        if (!well_shaped(k)) return false;
      }
      return true;
    default:
      return false;
  }
}

Assignment one(const char* v, long n) { return {{v, ar::factor(n)}}; }

bool integer_square(long n) {
  long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

bool integer_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool integer_squarefree(long n) {
  for (long d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

int distinct_prime_factors(long n) {
  int k = 0;
  for (long d = 2; d <= n; ++d) {
    if (n % d == 0) {
      ++k;
      while (n % d == 0) n /= d;
    }
  }
  return k;
}

// Truth of a normal form over every value of v in [1..hi].
template <typename Oracle>
void check_unary(const char* text, long hi, Oracle oracle) {
  Engine engine;
  Formula nf = skolem::eliminate(parse(text), engine);
  REQUIRE(well_shaped(nf));
  for (long n = 1; n <= hi; ++n) {
    INFO(text << " at v = " << n);
    REQUIRE(skolem::eval_normal_form(nf, one("v", n), engine) == oracle(n));
  }
}

std::vector<Assignment> small_grid(const std::vector<std::string>& vars) {
  const std::vector<long> values{1, 2, 3, 4, 6, 9, 12, 18, 36, 5, 10, 30};
  std::vector<Assignment> out{{}};
  for (const auto& v : vars) {
    std::vector<Assignment> next;
    for (const auto& a : out) {
      for (long x : values) {
        Assignment b = a;
        b[v] = ar::factor(x);
        next.push_back(std::move(b));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("atomic_step builds the negated counting atom") {
  Engine raw(raw_options());
  raw.set_binder("p");
  Formula a = parse("v = w");
  CHECK(skolem::atomic_step(a, raw) ==
        Formula::negate(Formula::count_ge(1, "p", Formula::negate(a))));
  CHECK(skolem::atomic_step(parse("1 = 1")).is_const(true));
  CHECK_THROWS_AS(skolem::atomic_step(parse("~(v = w)")),
                  skolem::InvalidArgument);
  Formula v1 = skolem::atomic_step(parse("v = 1"));
  Engine e;
  for (long n = 1; n <= 60; ++n) {
    CHECK(skolem::eval_normal_form(v1, one("v", n), e) == (n == 1));
  }
}

TEST_CASE("exists_step examples") {
  Engine e;
  e.set_binder("p");
  Formula m = skolem::atomic_step(parse("w = v"), e);
  Formula r = skolem::exists_step("w", m, e);
  CHECK(r.is_const(true));
  Formula sq = skolem::exists_step(
      "w", skolem::atomic_step(parse("v = w*w"), e), e);
  CHECK(sq.free_vars() == std::vector<std::string>{"v"});
  CHECK(skolem::eval_normal_form(sq, one("v", 36), e));
  CHECK_FALSE(skolem::eval_normal_form(sq, one("v", 12), e));
  CHECK(skolem::exists_step(
            "w", Formula::count_ge(1, "p", parse("~(w = 1)")), e)
            .is_const(true));
  Formula vac = skolem::atomic_step(parse("v = 1"), e);
  CHECK(skolem::exists_step("w", vac, e) == vac);
  CHECK_THROWS_AS(skolem::exists_step("w", parse("exists x. w = x"), e),
                  skolem::InvalidArgument);
}

TEST_CASE("golden oracles") {
  check_unary("prime(v)", 200, integer_prime);
  check_unary("rad(v)", 200, integer_squarefree);
  check_unary("exists w. v = w*w", 200, integer_square);
  check_unary("exists w. v = w^3", 200, [](long n) {
    for (long r = 1; r * r * r <= n; ++r) {
      if (r * r * r == n) return true;
    }
    return false;
  });
  for (int k = 0; k <= 3; ++k) {
    std::string text = "#[u: divides(u, v) /\\ prime(u)] >= " +
                       std::to_string(k) +
                       " /\\ ~#[u: divides(u, v) /\\ prime(u)] >= " +
                       std::to_string(k + 1);
    check_unary(text.c_str(), 200,
                [k](long n) { return distinct_prime_factors(n) == k; });
  }
  Engine engine;
  Formula div = skolem::eliminate(parse("divides(v, w)"), engine);
  for (long a = 1; a <= 60; ++a) {
    for (long b = 1; b <= 60; ++b) {
      Assignment x{{"v", ar::factor(a)}, {"w", ar::factor(b)}};
      REQUIRE(skolem::eval_normal_form(div, x, engine) == (b % a == 0));
    }
  }
}

TEST_CASE("eliminated quantifier-free formulas agree with integer arithmetic") {
  std::mt19937_64 rng(99);
  const std::vector<std::string> vars{"v", "w"};
  for (int round = 0; round < 40; ++round) {
    st::GenOptions opts;
    opts.quantifiers = 0;
    Formula phi = st::random_formula(rng, vars, opts);
    Engine engine;
    Formula nf = skolem::eliminate(phi, engine);
    REQUIRE(well_shaped(nf));
    for (const auto& a : small_grid(phi.free_vars())) {
      st::Values vals;
      for (const auto& [v, n] : a) vals[v] = n.value();
      INFO(skolem::pretty(phi));
      REQUIRE(skolem::eval_normal_form(nf, a, engine) ==
              st::eval_direct(phi, vals));
    }
  }
}

TEST_CASE("pruned and unpruned elimination agree") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> vars{"v", "w"};
  int done = 0;
  for (int round = 0; round < 60; ++round) {
    st::GenOptions opts;
    opts.depth = 2;
    opts.quantifiers = 1;
    opts.sugar = false;
    Formula phi = st::random_formula(rng, vars, opts);
    Engine fast;
    Engine raw(raw_options());
    raw.mutable_options().dnf_limit = 2000;
    Formula a = skolem::eliminate(phi, fast);
    Formula b;
    try {
      b = skolem::eliminate(phi, raw);
    } catch (const skolem::ResourceError&) {
      continue;
    }
    REQUIRE(well_shaped(b));
    for (const auto& x : small_grid(phi.free_vars())) {
      INFO(skolem::pretty(phi));
      REQUIRE(skolem::eval_normal_form(a, x, fast) ==
              skolem::eval_normal_form(b, x, raw));
    }
    ++done;
  }
  CHECK(done >= 30);
}

TEST_CASE("Hall and allocation conditions give equivalent normal forms") {
  std::mt19937_64 rng(17);
  const std::vector<std::string> vars{"v", "w", "x"};
  for (int round = 0; round < 40; ++round) {
    Formula phi = st::random_formula(rng, vars);
    EngineOptions alloc;
    alloc.b2 = skolem::counting::B2Method::kAllocation;
    Engine e1;
    Engine e2(alloc);
    Formula a = skolem::eliminate(phi, e1);
    Formula b = skolem::eliminate(phi, e2);
    for (const auto& x : small_grid(phi.free_vars())) {
      INFO(skolem::pretty(phi));
      REQUIRE(skolem::eval_normal_form(a, x, e1) ==
              skolem::eval_normal_form(b, x, e2));
    }
  }
}

TEST_CASE("normal forms are well shaped and self-consistent") {
  std::mt19937_64 rng(2026);
  const std::vector<std::string> vars{"v", "w", "x"};
  for (int round = 0; round < 60; ++round) {
    Formula phi = st::random_formula(rng, vars);
    Engine engine;
    Formula nf = skolem::eliminate(phi, engine);
    INFO(skolem::pretty(phi));
    REQUIRE(well_shaped(nf));
    Formula neg = skolem::eliminate(Formula::negate(phi), engine);
    Formula again = skolem::eliminate(nf, engine);
    Formula vac = skolem::eliminate(Formula::exists("fresh", phi), engine);
    for (const auto& v : nf.free_vars()) {
      REQUIRE(phi.has_free(v));
    }
    for (const auto& x : small_grid(phi.free_vars())) {
      bool t = skolem::eval_normal_form(nf, x, engine);
      REQUIRE(skolem::eval_normal_form(neg, x, engine) == !t);
      REQUIRE(skolem::eval_normal_form(again, x, engine) == t);
      REQUIRE(skolem::eval_normal_form(vac, x, engine) == t);
    }
  }
}

TEST_CASE("resource caps are reported") {
  EngineOptions tiny;
  tiny.dnf_limit = 1;
  CHECK_THROWS_AS(
      skolem::eliminate(parse("forall v. exists w. rad(w) /\\ divides(v, w)"),
                        tiny),
      skolem::ResourceError);
  EngineOptions opts;
  skolem::apply_caps(opts, "dnf=7,pres=100,systems=3,alloc=9");
  CHECK(opts.dnf_limit == 7);
  CHECK(opts.pres.node_limit == 100);
  CHECK(opts.counting.max_systems == 3);
  CHECK(opts.counting.max_allocations == 9);
  CHECK_THROWS_AS(skolem::apply_caps(opts, "bogus=1"), skolem::InvalidArgument);
  CHECK_THROWS_AS(skolem::apply_caps(opts, "dnf"), skolem::InvalidArgument);
}
