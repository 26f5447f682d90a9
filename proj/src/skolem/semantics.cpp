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

#include "skolem/semantics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "skolem/arith.hpp"
#include "skolem/error.hpp"
#include "skolem/qe.hpp"

namespace skolem {

std::string CountResult::to_string() const {
  return infinite ? std::string("inf") : std::to_string(value);
}

namespace {

void require_assigned(const Formula& f, const Assignment& a,
                      const std::string& except = {}) {
  for (const auto& v : f.free_vars()) {
    if (v != except && !a.count(v)) {
      throw InvalidArgument("unassigned variable '" + v + "'");
    }
  }
}

}  // namespace

CountResult count_atom(const Formula& theta, const Assignment& a,
                       const std::string& binder, Engine& engine) {
  if (theta.has_counting()) {
    throw InvalidArgument("count_atom: the body must be counting-free");
  }
  if (theta.has_sugar()) {
    throw InvalidArgument("count_atom: desugar the body first");
  }
  const Formula& body = theta;
  require_assigned(body, a, binder);
  const pres::PresFormula& q = engine.qf(body, binder);
  CountResult out;
  out.infinite = engine.generic(q);
  std::set<BigInt> primes;
  for (const auto& v : body.free_vars()) {
    if (v == binder) continue;
    for (const auto& kv : a.at(v).factors()) primes.insert(kv.first);
  }
  for (const auto& p : primes) {
    pres::Assignment x;
    for (const auto& v : q.free_vars()) {
      x[v] = a.at(v.substr(2)).exponent(p);
    }
    if (pres::eval_qf(q, x)) out.witnesses.push_back(p);
  }
  if (!out.infinite) out.value = out.witnesses.size();
  return out;
}

CountResult count_atom(const Formula& theta, const Assignment& a,
                       const std::string& binder) {
  Engine engine;
  return count_atom(theta, a, binder, engine);
}

bool eval_normal_form(const Formula& nf, const Assignment& a, Engine& engine) {
  switch (nf.kind()) {
    case Kind::kConst:
      return nf.value();
    case Kind::kCountGE:
      return count_atom(nf.child(), a, nf.var(), engine).at_least(nf.count());
    case Kind::kNot:
      return !eval_normal_form(nf.child(), a, engine);
    case Kind::kAnd:
      for (const auto& k : nf.children()) {
        if (!eval_normal_form(k, a, engine)) return false;
      }
      return true;
    case Kind::kOr:
      for (const auto& k : nf.children()) {
        if (eval_normal_form(k, a, engine)) return true;
      }
      return false;
    case Kind::kImplies:
      return !eval_normal_form(nf.child(0), a, engine) ||
             eval_normal_form(nf.child(1), a, engine);
    default:
      throw InvalidArgument("eval_normal_form: not a counting normal form");
  }
}

bool eval(const Formula& f, const Assignment& a, Engine& engine) {
  require_assigned(f, a);
  return eval_normal_form(eliminate(f, engine), a, engine);
}

bool eval(const Formula& f, const Assignment& a, const EngineOptions& options) {
  Engine engine(options);
  return eval(f, a, engine);
}

bool decide(const Formula& sentence, Engine& engine) {
  if (!sentence.free_vars().empty()) {
    throw InvalidArgument("decide: free variable '" +
                          sentence.free_vars().front() + "'");
  }
  return eval(sentence, {}, engine);
}

bool decide(const Formula& sentence, const EngineOptions& options) {
  Engine engine(options);
  return decide(sentence, engine);
}

std::uint64_t grid_size(const Grid& grid, std::size_t variables) {
  std::uint64_t per = 1;
  for (std::size_t i = 0; i < grid.base.size(); ++i) per *= grid.max_exp + 1;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < variables; ++i) n *= per;
  return n;
}

std::optional<Assignment> check_equiv(const Formula& f, const Formula& g,
                                      const Grid& grid, Engine& engine) {
  for (const auto& p : grid.base) {
    if (!arith::is_prime(p)) {
      throw InvalidArgument("check_equiv: grid base " + p.str() +
                            " is not prime");
    }
  }
  Formula nf = eliminate(f, engine);
  Formula ng = eliminate(g, engine);
  std::set<std::string> vars(f.free_vars().begin(), f.free_vars().end());
  vars.insert(g.free_vars().begin(), g.free_vars().end());

  // All values of one variable, in increasing order.
  std::vector<arith::FactoredNat> values;
  std::vector<unsigned> exps(grid.base.size(), 0);
  while (true) {
    std::map<BigInt, BigInt> fac;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) fac.emplace(grid.base[i], exps[i]);
    }
    values.emplace_back(std::move(fac));
    std::size_t i = exps.size();
    while (i > 0 && exps[i - 1] == grid.max_exp) exps[--i] = 0;
    if (i == 0) break;
    ++exps[i - 1];
  }

  std::sort(values.begin(), values.end(),
            [](const arith::FactoredNat& a, const arith::FactoredNat& b) {
              return a.value() < b.value();
            });
  std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<std::size_t> idx(names.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < names.size(); ++i) a[names[i]] = values[idx[i]];
    if (eval_normal_form(nf, a, engine) != eval_normal_form(ng, a, engine)) {
      return a;
    }
    std::size_t i = idx.size();
    while (i > 0 && idx[i - 1] + 1 == values.size()) idx[--i] = 0;
    if (i == 0) break;
    ++idx[i - 1];
  }
  return std::nullopt;
}

std::optional<Assignment> check_equiv(const Formula& f, const Formula& g,
                                      const Grid& grid,
                                      const EngineOptions& options) {
  Engine engine(options);
  return check_equiv(f, g, grid, engine);
}

}  // namespace skolem
