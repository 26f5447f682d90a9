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

#include <string>
#include <vector>

#include "doctest.h"
#include "skolem/error.hpp"
#include "skolem/syntax.hpp"

namespace {

using skolem::Formula;
using skolem::Kind;
using skolem::Term;

bool only_core(const Formula& f) {
  switch (f.kind()) {
    case Kind::kDivides:
    case Kind::kPrime:
    case Kind::kRad:
    case Kind::kPPartEq:
      return false;
    default:
      break;
  }
  for (const auto& k : f.children()) {
    if (!only_core(k)) return false;
  }
  return true;
}

const std::vector<std::string>& samples() {
  static const std::vector<std::string> s = {
      "1 = 1",
      "true",
      "~false",
      "exists w. v = w*w",
      "#[u: divides(u, v)] >= 2",
      "#[u: ~(u = 1)] >= 0",
      "~~(v = w)",
      "v = w /\\ w = v \\/ v = 1 -> v^3*w = w",
      "v = 1 -> w = 1 -> x = 1",
      "forall u. prime(u) -> ppart(v, u) = 1 \\/ ppart(v, u) = u",
      "rad(v) /\\ exists w. (divides(w, v) /\\ ~(w = 1))",
      "(exists w. v = w) /\\ (forall w. w = w)",
      "~(exists w. v = w^2)",
      "ppart(v, u) = u^3",
      "divides(v^2*w, 1)",
      "forall x. exists y. x*y = y*x /\\ ~(y = 1)",
      "#[p: exists w. (p = w*w -> v = p)] >= 3 \\/ v = 1",
  };
  return s;
}

}  // namespace

TEST_CASE("parse examples") {
  Formula f = skolem::parse("exists w. v = w*w");
  REQUIRE(f.kind() == Kind::kExists);
  CHECK(f.var() == "w");
  CHECK(f.child() == Formula::eq(Term::var("v"), Term::power("w", 2)));

  CHECK(skolem::parse("1 = 1") == Formula::eq(Term(), Term()));

  Formula c = skolem::parse("#[u: divides(u, v)] >= 2");
  CHECK(c == Formula::count_ge(2, "u",
                               Formula::divides(Term::var("u"),
                                                Term::var("v"))));
}

TEST_CASE("parse precedence and associativity") {
  Formula f = skolem::parse("a = 1 \\/ b = 1 /\\ ~c = 1 -> d = 1 -> e = 1");
  REQUIRE(f.kind() == Kind::kImplies);
  CHECK(f.child(0).kind() == Kind::kOr);
  CHECK(f.child(0).child(1).kind() == Kind::kAnd);
  CHECK(f.child(0).child(1).child(1).kind() == Kind::kNot);
  CHECK(f.child(1).kind() == Kind::kImplies);
  // Quantifiers extend maximally to the right.
  Formula q = skolem::parse("exists w. v = w /\\ w = 1");
  REQUIRE(q.kind() == Kind::kExists);
  CHECK(q.child().kind() == Kind::kAnd);
  // Chains build one n-ary node.
  CHECK(skolem::parse("a = 1 /\\ b = 1 /\\ c = 1").children().size() == 3);
}

TEST_CASE("pretty examples") {
  CHECK(skolem::pretty(skolem::parse("v = w*w")) == "v = w^2");
  CHECK(skolem::pretty(skolem::parse("#[u: u = u] >= 0")) ==
        "#[u: u = u] >= 0");
  CHECK(skolem::pretty(skolem::parse("~~(v = 1)")) == "~~v = 1");
  CHECK(skolem::pretty(skolem::parse("a = 1 /\\ (b = 1 \\/ c = 1)")) ==
        "(a = 1 /\\ (b = 1 \\/ c = 1))");
}

TEST_CASE("round trip on samples") {
  for (const auto& text : samples()) {
    CAPTURE(text);
    Formula f = skolem::parse(text);
    std::string p = skolem::pretty(f);
    CAPTURE(p);
    CHECK(skolem::parse(p) == f);
    CHECK(skolem::pretty(skolem::parse(p)) == p);
  }
}

TEST_CASE("syntax errors carry positions") {
  try {
    skolem::parse("exists w.\n  v = w^0");
    FAIL("expected a syntax error");
  } catch (const skolem::SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
  }
  CHECK_THROWS_AS(skolem::parse("v = "), skolem::SyntaxError);
  CHECK_THROWS_AS(skolem::parse("v = 2"), skolem::SyntaxError);
  CHECK_THROWS_AS(skolem::parse("exists prime. v = 1"), skolem::SyntaxError);
  CHECK_THROWS_AS(skolem::parse("v = w)"), skolem::SyntaxError);
  CHECK_THROWS_AS(skolem::parse("v $ w"), skolem::SyntaxError);
  CHECK_THROWS_AS(skolem::parse("#[u: #[p: p = u] >= 1] >= 1"),
                  skolem::SyntaxError);
}

TEST_CASE("desugar examples") {
  Formula d = skolem::desugar(skolem::parse("divides(v, w)"));
  REQUIRE(d.kind() == Kind::kExists);
  const std::string z = d.var();
  CHECK(z != "v");
  CHECK(z != "w");
  CHECK(d.child() ==
        Formula::eq(Term::var("w"), Term::var("v") * Term::var(z)));

  Formula plain = skolem::parse("exists w. v = w*w");
  CHECK(skolem::desugar(plain) == plain);

  Formula p = skolem::desugar(skolem::parse("prime(u)"));
  CHECK(p.kind() == Kind::kAnd);
  CHECK(p.free_vars() == std::vector<std::string>{"u"});
}

TEST_CASE("desugar removes sugar, keeps free variables, is idempotent") {
  for (const auto& text : samples()) {
    CAPTURE(text);
    Formula f = skolem::parse(text);
    Formula d = skolem::desugar(f);
    CHECK(only_core(d));
    CHECK_FALSE(d.has_sugar());
    CHECK(d.free_vars() == f.free_vars());
    CHECK(skolem::desugar(d) == d);
    // Desugared formulas also round-trip through the printer.
    CHECK(skolem::parse(skolem::pretty(d)) == d);
  }
}

TEST_CASE("split_corpus skips comments but keeps counting atoms") {
  auto lines = skolem::split_corpus(
      "# comment\n\nv = 1\n  #[u: u = u] >= 1  \r\n#another\n");
  CHECK(lines == std::vector<std::string>{"v = 1", "#[u: u = u] >= 1"});
}
