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

#include "skolem/engine.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "skolem/error.hpp"
#include "skolem/relativize.hpp"

namespace skolem {

void apply_caps(EngineOptions& opts, const std::string& caps) {
  std::stringstream ss(caps);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("caps: expected key=value, got '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      value = to_uint64(parse_bigint(item.substr(eq + 1)));
    } catch (const Error&) {
      throw InvalidArgument("caps: bad value in '" + item + "'");
    }
    if (key == "dnf") {
      opts.dnf_limit = value;
    } else if (key == "pres") {
      opts.pres.node_limit = value;
    } else if (key == "systems") {
      opts.counting.max_systems = value;
    } else if (key == "alloc") {
      opts.counting.max_allocations = value;
    } else {
      throw InvalidArgument("caps: unknown key '" + key + "'");
    }
  }
}

Engine::Engine(EngineOptions opts) : opts_(std::move(opts)) {}

const pres::PresFormula& Engine::qf(const Formula& body,
                                    const std::string& binder) {
  auto& cache = qf_cache_[binder];
  auto it = cache.find(body);
  if (it != cache.end()) return it->second;
  pres::PresFormula q = compute_qf(body, binder);
  return qf_cache_[binder].emplace(body, std::move(q)).first->second;
}

pres::PresFormula Engine::compute_qf(const Formula& f,
                                     const std::string& binder) {
  using pres::PresFormula;
  switch (f.kind()) {
    case Kind::kConst:
      return PresFormula::truth(f.value());
    case Kind::kEq: {
      ExponentContext ctx;
      ctx.pin(binder, 1);
      return relativize(f, ctx);
    }
    case Kind::kNot:
      return PresFormula::negate(qf(f.child(), binder));
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<PresFormula> kids;
      for (const auto& k : f.children()) kids.push_back(qf(k, binder));
      return f.kind() == Kind::kAnd ? PresFormula::conj(std::move(kids))
                                    : PresFormula::disj(std::move(kids));
    }
    case Kind::kImplies:
      return PresFormula::disj({PresFormula::negate(qf(f.child(0), binder)),
                                qf(f.child(1), binder)});
    case Kind::kExists:
    case Kind::kForall: {
      if (f.var() == binder) {
        throw InvalidArgument("counting body rebinds its prime variable '" +
                              binder + "'");
      }
      const std::string x = ExponentContext::exponent_var(f.var());
      PresFormula body = qf(f.child(), binder);
      if (f.kind() == Kind::kExists) return exists_exp(x, body);
      return PresFormula::negate(exists_exp(x, PresFormula::negate(body)));
    }
    case Kind::kCountGE:
      throw InvalidArgument("counting atoms cannot be nested");
    default:
      throw InvalidArgument("desugar the formula before elimination");
  }
}

pres::PresFormula Engine::exists_exp(const std::string& x,
                                     const pres::PresFormula& q) {
  if (!q.has_free(x)) return q;
  ++stats_.presburger_calls;
  return pres::cooper_exists(x, q, opts_.pres);
}

bool Engine::satisfiable(const pres::PresFormula& q) {
  if (q.kind() == pres::PKind::kConst) return q.value();
  auto it = sat_cache_.find(q);
  if (it != sat_cache_.end()) return it->second;
  pres::PresFormula r = q;
  // Eliminate the variables one at a time; each step is quantifier-free.
  while (r.kind() != pres::PKind::kConst) {
    std::string v = r.free_vars().front();
    r = exists_exp(v, r);
  }
  bool value = r.value();
  sat_cache_.emplace(q, value);
  return value;
}

bool Engine::generic(const pres::PresFormula& q) {
  pres::Assignment zero;
  for (const auto& v : q.free_vars()) zero[v] = 0;
  return pres::eval_qf(q, zero);
}

namespace {

// Object variable of an exponent variable x_<v>.
std::string object_var(const std::string& x) {
  if (x.rfind("x_", 0) != 0 || x.find('\'') != std::string::npos) {
    throw InvalidArgument("unexpected exponent variable '" + x + "'");
  }
  return x.substr(2);
}

// Splits t (plus constant, the binder's exponent) into monomials P and N
// with t = exp(P) - exp(N) at every prime.
void split_monomials(const pres::LinTerm& t, const std::string& binder,
                     Term& pos, Term& neg) {
  for (const auto& [x, a] : t.coeffs()) {
    if (a > 0) {
      pos = pos * Term::power(object_var(x), a);
    } else {
      neg = neg * Term::power(object_var(x), -a);
    }
  }
  if (t.constant() > 0) pos = pos * Term::power(binder, t.constant());
  if (t.constant() < 0) neg = neg * Term::power(binder, -t.constant());
}

}  // namespace

Formula Engine::body_of(const pres::PresFormula& q) {
  auto it = body_cache_.find(q);
  if (it != body_cache_.end()) return it->second;
  Formula out;
  switch (q.kind()) {
    case pres::PKind::kConst:
      out = Formula::truth(q.value());
      break;
    case pres::PKind::kEq: {
      Term pos, neg;
      split_monomials(q.term(), binder_, pos, neg);
      out = Formula::eq(pos, neg);
      break;
    }
    case pres::PKind::kLe:
    case pres::PKind::kDvd: {
      Term pos, neg;
      split_monomials(q.term(), binder_, pos, neg);
      NameSupply names;
      names.reserve(binder_);
      for (const auto& v : q.free_vars()) names.reserve(object_var(v));
      std::string z = names.fresh("z");
      if (q.kind() == pres::PKind::kLe) {
        // exp(P) <= exp(N)  iff  P divides N.
        out = Formula::exists(z, Formula::eq(neg, pos * Term::var(z)));
      } else {
        // d | exp(P) - exp(N)  iff  one is the other times a d-th power.
        Term zd = Term::power(z, q.modulus());
        out = Formula::exists(z, Formula::disj({Formula::eq(pos, neg * zd),
                                                Formula::eq(neg, pos * zd)}));
      }
      break;
    }
    case pres::PKind::kNot:
      out = mk_not(body_of(q.child()));
      break;
    case pres::PKind::kAnd:
    case pres::PKind::kOr: {
      std::vector<Formula> kids;
      for (const auto& k : q.children()) kids.push_back(body_of(k));
      out = q.kind() == pres::PKind::kAnd ? mk_and(std::move(kids))
                                          : mk_or(std::move(kids));
      break;
    }
    default:
      throw InvalidArgument("body_of: expected a quantifier-free formula");
  }
  body_cache_.emplace(q, out);
  qf_cache_[binder_].emplace(out, q);
  return out;
}

Formula Engine::canonical_body(const Formula& body) {
  if (!opts_.compact_bodies) return body;
  return body_of(qf(body));
}

Formula Engine::count(std::uint64_t n, const Formula& body) {
  if (n == 0) return Formula::truth(true);
  if (body.is_const(false)) return Formula::truth(false);
  if (!opts_.prune && !opts_.compact_bodies) {
    return Formula::count_ge(n, binder_, body);
  }
  const pres::PresFormula q = qf(body);
  if (opts_.prune) {
    if (!satisfiable(q)) return Formula::truth(false);
    if (generic(q)) return Formula::truth(true);
  }
  Formula b = opts_.compact_bodies ? body_of(q) : body;
  return Formula::count_ge(n, binder_, b);
}

const Formula* Engine::cached_exists(const std::string& w,
                                     const Formula& m) const {
  auto it = exists_cache_.find(w);
  if (it == exists_cache_.end()) return nullptr;
  auto jt = it->second.find(m);
  return jt == it->second.end() ? nullptr : &jt->second;
}

void Engine::store_exists(const std::string& w, const Formula& m,
                          Formula result) {
  exists_cache_[w].insert_or_assign(m, std::move(result));
}

}  // namespace skolem
