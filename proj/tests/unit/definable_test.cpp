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

#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "skolem/arith.hpp"
#include "skolem/definable.hpp"
#include "skolem/error.hpp"
#include "skolem/qe.hpp"
#include "skolem/semantics.hpp"
#include "skolem/syntax.hpp"

namespace {

using skolem::Assignment;
using skolem::BigInt;
using skolem::Engine;
using skolem::Formula;
using skolem::parse;
using skolem::Polarity;
using skolem::RadicalCode;
namespace ar = skolem::arith;

Assignment at(std::initializer_list<std::pair<const char*, long>> kv) {
  Assignment a;
  for (const auto& [v, n] : kv) a[v] = ar::factor(n);
  return a;
}

// Squarefree numbers with support in {2, 3, 5, 7}.
std::vector<ar::FactoredNat> radical_grid() {
  std::vector<ar::FactoredNat> out;
  const long primes[] = {2, 3, 5, 7};
  for (int mask = 0; mask < 16; ++mask) {
    long n = 1;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1 << i)) n *= primes[i];
    }
    out.push_back(ar::factor(n));
  }
  return out;
}

// Checks the code against direct evaluation at the support of the
// parameters and the next three primes outside it.
void check_code(const Formula& theta, const Assignment& params) {
  Engine engine;
  RadicalCode rc = skolem::radical_code(theta, "u", params, engine);
  CHECK(rc.code.is_squarefree());
  std::set<BigInt> support;
  for (const auto& [v, n] : params) {
    for (const auto& kv : n.factors()) support.insert(kv.first);
  }
  std::vector<BigInt> probes(support.begin(), support.end());
  std::vector<bool> fresh;
  BigInt q = 1;
  for (int found = 0; found < 3;) {
    q = ar::next_prime(q);
    if (support.count(q)) continue;
    probes.push_back(q);
    ++found;
  }
  Formula nf = skolem::eliminate(theta, engine);
  for (const auto& p : probes) {
    Assignment a = params;
    a["u"] = ar::FactoredNat::prime_power(p, 1);
    bool truth = skolem::eval_normal_form(nf, a, engine);
    INFO(skolem::pretty(theta) << " at u = " << p);
    CHECK(rc.contains(p) == truth);
    if (!support.count(p)) fresh.push_back(truth);
  }
  // The same truth value at every prime outside the support.
  CHECK(fresh.size() == 3);
  CHECK(fresh[0] == fresh[1]);
  CHECK(fresh[1] == fresh[2]);
}

void check_rewrite(const Formula& theta, const std::vector<std::string>& vars,
                   std::uint64_t k, const Assignment& params) {
  Engine engine;
  skolem::EmbedRewrite rw =
      skolem::stable_embed_rewrite(theta, vars, k, params, "", engine);
  CHECK(rw.params.size() == (std::size_t{1} << vars.size()));
  for (const auto& [s, code] : rw.params) CHECK(code.code.is_squarefree());
  Formula phi = Formula::count_ge(k, "p", theta);
  Formula nphi = skolem::eliminate(phi, engine);
  Formula npsi = skolem::eliminate(rw.psi, engine);
  Assignment sa = rw.code_assignment();
  auto grid = radical_grid();
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Assignment a = params;
    Assignment b = sa;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      a[vars[i]] = grid[idx[i]];
      b[vars[i]] = grid[idx[i]];
    }
    INFO(skolem::pretty(theta) << " k = " << k);
    REQUIRE(skolem::eval_normal_form(nphi, a, engine) ==
            skolem::eval_normal_form(npsi, b, engine));
    std::size_t i = idx.size();
    while (i > 0 && idx[i - 1] + 1 == grid.size()) idx[--i] = 0;
    if (i == 0) break;
    ++idx[i - 1];
  }
}

}  // namespace

TEST_CASE("radical_code examples") {
  CHECK(skolem::radical_code(parse("divides(u, w)"), "u", at({{"w", 12}})) ==
        RadicalCode{Polarity::kDirect, ar::factor(6)});
  CHECK(skolem::radical_code(parse("~divides(u, w)"), "u", at({{"w", 12}})) ==
        RadicalCode{Polarity::kComplement, ar::factor(6)});
  CHECK(skolem::radical_code(parse("u = u"), "u", at({{"w", 360}})) ==
        RadicalCode{Polarity::kComplement, ar::factor(1)});
  CHECK_THROWS_AS(skolem::radical_code(parse("divides(u, w)"), "u", {}),
                  skolem::InvalidArgument);
  CHECK(skolem::to_string(Polarity::kComplement) == "complement");
}

TEST_CASE("radical codes agree with direct evaluation") {
  const char* thetas[] = {
      "divides(u, w)",
      "~divides(u, w)",
      "divides(u*u, w)",
      "exists z. w = u*z*z",
      "divides(u, w) /\\ ~divides(u, x)",
      "ppart(w, u) = u \\/ ppart(x, u) = u^2",
      "forall z. (divides(z, w) -> divides(z, x))",
      "#[q: divides(q, w) /\\ ~(q = u)] >= 2",
  };
  for (const char* t : thetas) {
    for (long c : {1L, 12L, 30L, 360L}) {
      check_code(parse(t), at({{"w", c}, {"x", c == 1 ? 7 : c / 2}}));
    }
  }
}

TEST_CASE("stable_embed_rewrite examples") {
  check_rewrite(parse("~divides(v, w)"), {"v"}, 1, at({{"w", 30}}));
  check_rewrite(parse("divides(v, w)"), {"v"}, 0, at({{"w", 30}}));
  check_rewrite(parse("divides(v, w)"), {"v"}, 1, at({{"w", 1}}));
  // Sugar on a tuple variable.
  check_rewrite(parse("prime(v) /\\ divides(v, w)"), {"v"}, 1,
                at({{"w", 12}}));
  skolem::EmbedRewrite rw = skolem::stable_embed_rewrite(
      parse("divides(v, w)"), {"v", "x"}, 2, at({{"w", 12}}));
  CHECK(rw.param_of.size() == 4);
  CHECK(rw.param_of.at("01") == "s_01");
}

TEST_CASE("stable_embed_rewrite agrees on the squarefree grid") {
  const char* unary[] = {"~divides(v, w)", "divides(v, w)", "v = w",
                         "divides(v*v, w)", "~(v = 1) /\\ divides(w, v)"};
  const char* binary[] = {"divides(v, w) /\\ ~divides(x, w)", "v*x = w",
                          "divides(v, x) \\/ v = w"};
  for (long c : {1L, 12L, 30L, 360L}) {
    for (const char* t : unary) {
      for (std::uint64_t k : {1, 2}) {
        check_rewrite(parse(t), {"v"}, k, at({{"w", c}}));
      }
    }
    for (const char* t : binary) {
      check_rewrite(parse(t), {"v", "x"}, 1, at({{"w", c}}));
    }
  }
}

TEST_CASE("leafwise rewrite of a Boolean combination") {
  Engine engine;
  Formula phi = parse(
      "#[u: divides(u, v) /\\ ~divides(u, w)] >= 1 -> "
      "~#[u: divides(u, w) /\\ ~divides(u, v)] >= 2");
  Assignment params = at({{"w", 30}});
  skolem::EmbedRewrite rw =
      skolem::stable_embed_rewrite_formula(phi, {"v"}, params, engine);
  Formula nphi = skolem::eliminate(phi, engine);
  Formula npsi = skolem::eliminate(rw.psi, engine);
  for (const auto& r : radical_grid()) {
    Assignment a = params;
    a["v"] = r;
    Assignment b = rw.code_assignment();
    b["v"] = r;
    REQUIRE(skolem::eval_normal_form(nphi, a, engine) ==
            skolem::eval_normal_form(npsi, b, engine));
  }
}
