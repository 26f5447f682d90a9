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

#include "skolem/relativize.hpp"

#include <vector>

#include "skolem/error.hpp"

namespace skolem {

void ExponentContext::pin(const std::string& v, const BigInt& exponent) {
  pins_[v] = exponent;
}

pres::LinTerm ExponentContext::lookup(const std::string& v) const {
  auto s = scopes_.find(v);
  if (s != scopes_.end() && !s->second.empty()) {
    return pres::LinTerm::var(s->second.back());
  }
  auto p = pins_.find(v);
  if (p != pins_.end()) return pres::LinTerm(p->second);
  return pres::LinTerm::var(exponent_var(v));
}

std::string ExponentContext::bind(const std::string& v) {
  // x_<v> for the outermost binder of v, then x_<v>'1, x_<v>'2, ... for
  // shadowing binders. The quote cannot occur in object names, so the map
  // stays injective; the outermost binder may reuse x_<v> because the free
  // v is invisible inside its scope.
  int depth = in_use_[v]++;
  std::string name = exponent_var(v);
  if (depth > 0) name += "'" + std::to_string(depth);
  scopes_[v].push_back(name);
  return name;
}

void ExponentContext::unbind(const std::string& v) {
  scopes_[v].pop_back();
  --in_use_[v];
}

namespace {

pres::LinTerm exponent_of(const Term& t, const ExponentContext& ctx) {
  pres::LinTerm r;
  for (const auto& [v, k] : t.exponents()) r = r + ctx.lookup(v) * k;
  return r;
}

pres::PresFormula rel(const Formula& f, ExponentContext& ctx) {
  switch (f.kind()) {
    case Kind::kConst:
      return pres::PresFormula::truth(f.value());
    case Kind::kEq:
      return pres::PresFormula::lin_eq(exponent_of(f.lhs(), ctx),
                                       exponent_of(f.rhs(), ctx));
    case Kind::kNot:
      return pres::PresFormula::negate(rel(f.child(), ctx));
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<pres::PresFormula> kids;
      for (const auto& k : f.children()) kids.push_back(rel(k, ctx));
      return f.kind() == Kind::kAnd ? pres::PresFormula::conj(std::move(kids))
                                    : pres::PresFormula::disj(std::move(kids));
    }
    case Kind::kImplies:
      return pres::PresFormula::disj(
          {pres::PresFormula::negate(rel(f.child(0), ctx)),
           rel(f.child(1), ctx)});
    case Kind::kExists:
    case Kind::kForall: {
      std::string x = ctx.bind(f.var());
      pres::PresFormula body = rel(f.child(), ctx);
      ctx.unbind(f.var());
      return f.kind() == Kind::kExists ? pres::PresFormula::exists(x, body)
                                       : pres::PresFormula::forall(x, body);
    }
    case Kind::kCountGE:
      throw InvalidArgument("relativize: counting atoms cannot be relativized");
    default:
      throw InvalidArgument("relativize: desugar the formula first");
  }
}

}  // namespace

pres::PresFormula relativize(const Formula& f, ExponentContext ctx) {
  return rel(f, ctx);
}

pres::Assignment exponents_at(const Assignment& a, const BigInt& p) {
  pres::Assignment out;
  for (const auto& [v, n] : a) {
    out[ExponentContext::exponent_var(v)] = n.exponent(p);
  }
  return out;
}

bool eval_relativized(const Formula& f, const BigInt& p, const Assignment& a) {
  if (!arith::is_prime(p)) throw InvalidArgument("not a prime: " + p.str());
  for (const auto& v : f.free_vars()) {
    if (!a.count(v)) {
      throw InvalidArgument("unassigned variable '" + v + "'");
    }
  }
  return pres::pres_decide(relativize(f), exponents_at(a, p));
}

}  // namespace skolem
