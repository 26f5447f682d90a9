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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "skolem/counting.hpp"
#include "skolem/error.hpp"
#include "skolem/syntax.hpp"
#include "support/set_systems.hpp"

namespace {

using skolem::Formula;
using skolem::counting::B2Method;
using skolem::counting::CardExpr;
using skolem::counting::CountingSystem;
using skolem::counting::SetExpr;
namespace ct = skolem::counting;
namespace st = skolem::testing;

Formula body(const std::string& name) {
  return skolem::parse(name + " = 1");
}

}  // namespace

TEST_CASE("normalize_inconsistent examples") {
  CountingSystem one;
  one.lowers.push_back({body("a"), 1});
  auto r = ct::normalize_inconsistent(one);
  REQUIRE(r.size() == 1);
  CHECK(r[0].exact.empty());
  REQUIRE(r[0].atleast.size() == 1);
  CHECK(r[0].atleast[0].body == body("a"));
  CHECK(r[0].atleast[0].count == 1);

  CountingSystem two;
  two.uppers.push_back({body("a"), 0});
  two.lowers.push_back({body("b"), 1});
  r = ct::normalize_inconsistent(two);
  REQUIRE(r.size() == 1);
  REQUIRE(r[0].exact.size() == 2);
  CHECK(r[0].exact[0].count == 0);
  CHECK(r[0].exact[1].count == 0);
  REQUIRE(r[0].atleast.size() == 1);
  CHECK(r[0].atleast[0].signs == std::vector<int>{0, 1});
  CHECK(r[0].atleast[0].count == 1);

  r = ct::normalize_inconsistent(CountingSystem{});
  REQUIRE(r.size() == 1);
  CHECK(r[0].exact.empty());
  CHECK(r[0].atleast.empty());
}

TEST_CASE("normalize_inconsistent agrees with direct counting") {
  std::size_t checked = 0;
  st::for_each_counting_instance(2, 2, 5, [&](const st::CountingInstance& in) {
    CHECK(st::eval_system(in) == st::eval_normalized(in));
    ++checked;
  });
  CHECK(checked > 1000);
}

TEST_CASE("normalized bodies are pairwise inconsistent") {
  CountingSystem sys;
  sys.uppers.push_back({body("a"), 2});
  sys.lowers.push_back({body("b"), 1});
  sys.lowers.push_back({body("c"), 2});
  for (const auto& s : ct::normalize_inconsistent(sys)) {
    std::vector<std::vector<int>> pats;
    for (const auto& c : s.exact) pats.push_back(c.signs);
    for (const auto& c : s.atleast) pats.push_back(c.signs);
    for (std::size_t i = 0; i < pats.size(); ++i) {
      for (std::size_t j = i + 1; j < pats.size(); ++j) {
        CHECK(pats[i] != pats[j]);
      }
    }
  }
}

TEST_CASE("cell filter prunes empty and cofinite cells") {
  CountingSystem sys;
  sys.uppers.push_back({body("a"), 1});
  sys.lowers.push_back({body("b"), 1});
  auto all_empty = [](const std::vector<int>&, const Formula&) {
    return ct::CellStatus::kEmpty;
  };
  CHECK(ct::normalize_inconsistent(sys, all_empty).empty());
  auto cofinite_exact = [](const std::vector<int>& s, const Formula&) {
    return s[0] ? ct::CellStatus::kCofinite : ct::CellStatus::kUnknown;
  };
  CHECK(ct::normalize_inconsistent(sys, cofinite_exact).empty());
}

TEST_CASE("b2_express examples") {
  CardExpr e = ct::b2_express({1}, {}, false);
  CHECK(e.to_string() == "|S1| >= 1");

  CardExpr two = ct::b2_express({1, 1}, {}, false);
  for (int size = 0; size <= 4; ++size) {
    std::uint64_t s = (std::uint64_t{1} << size) - 1;
    CHECK(ct::eval_card_expr(two, std::map<std::string, std::uint64_t>{
                                      {"S1", s}, {"S2", s}}) == (size >= 2));
  }

  CardExpr st_conflict = ct::b2_express({1}, {1}, false);
  CHECK_FALSE(ct::eval_card_expr(
      st_conflict, std::map<std::string, std::uint64_t>{{"S1", 1}, {"T1", 1}}));
}

TEST_CASE("b2_check_concrete examples") {
  CHECK(ct::b2_check_concrete({0b1}, {}, 0, {1}, {}));
  CHECK_FALSE(ct::b2_check_concrete({0b01}, {}, 0b11, {1}, {}));
  CHECK(ct::b2_check_concrete({0}, {0}, 0, {0}, {0}));
  CHECK_THROWS_AS(ct::b2_check_concrete({0x1FFFF}, {}, 0, {1}, {}),
                  skolem::ResourceError);
}

TEST_CASE("eval_card_expr examples") {
  SetExpr s1 = SetExpr::sym("S1"), s2 = SetExpr::sym("S2");
  ct::FiniteSet a{1, 2}, b{2};
  CHECK(ct::eval_card_expr(CardExpr::card_ge(SetExpr::diff(s1, s2), 1),
                           std::map<std::string, ct::FiniteSet>{{"S1", a},
                                                                {"S2", b}}));
  CHECK(ct::eval_card_expr(CardExpr::card_ge(s1, 0),
                           std::map<std::string, ct::FiniteSet>{}));
  SetExpr u = SetExpr::sym("U");
  CHECK_FALSE(ct::eval_card_expr(
      CardExpr::card_ge(SetExpr::diff(u, s1), 1),
      std::map<std::string, ct::FiniteSet>{{"U", {1}}, {"S1", {1}}}));
  CHECK_THROWS_AS(
      ct::eval_card_expr(CardExpr::card_ge(s1, 1),
                         std::map<std::string, ct::FiniteSet>{}),
      skolem::InvalidArgument);
}

TEST_CASE("b2_express forms agree with brute force on small universes") {
  for (std::size_t k = 0; k <= 2; ++k) {
    for (std::size_t l = 0; k + l <= 2; ++l) {
      for (bool with_u : {false, true}) {
        auto demands = st::demand_vectors(k + l, 2);
        for (const auto& d : demands) {
          std::vector<std::uint64_t> m(d.begin(), d.begin() + k);
          std::vector<std::uint64_t> n(d.begin() + k, d.end());
          CardExpr hall = ct::b2_express(m, n, with_u, B2Method::kHall);
          CardExpr alloc = ct::b2_express(m, n, with_u, B2Method::kAllocation);
          std::uint64_t sum = 0;
          for (auto x : d) sum += x;
          CHECK(alloc.max_bound() <= sum + 1);
          CHECK(hall.max_bound() <= sum + 1);
          st::for_each_set_system(k, l, with_u, 3,
                                  [&](const st::SetSystem& sys) {
            bool truth = ct::b2_check_concrete(sys.s, sys.t, sys.u, m, n);
            auto binding = st::binding(sys);
            CHECK(ct::eval_card_expr(hall, binding) == truth);
            CHECK(ct::eval_card_expr(alloc, binding) == truth);
          });
        }
      }
    }
  }
}

TEST_CASE("allocation enumeration honors its cap") {
  ct::CountingLimits tiny;
  tiny.max_allocations = 10;
  CHECK_THROWS_AS(
      ct::b2_express({2, 2}, {2, 2}, true, B2Method::kAllocation, tiny),
      skolem::ResourceError);
}
