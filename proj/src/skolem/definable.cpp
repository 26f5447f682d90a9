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

#include "skolem/definable.hpp"

#include <functional>
#include <set>
#include <utility>

#include "skolem/error.hpp"
#include "skolem/qe.hpp"
#include "skolem/semantics.hpp"
#include "skolem/syntax.hpp"

namespace skolem {

std::string to_string(Polarity p) {
  return p == Polarity::kDirect ? "direct" : "complement";
}

bool RadicalCode::contains(const BigInt& p) const {
  const bool divides = code.exponent(p) != 0;
  return polarity == Polarity::kDirect ? divides : !divides;
}

RadicalCode radical_code(const Formula& theta, const std::string& u,
                         const Assignment& params, Engine& engine) {
  for (const auto& v : theta.free_vars()) {
    if (v != u && !params.count(v)) {
      throw InvalidArgument("radical_code: unassigned parameter '" + v + "'");
    }
  }
  std::set<BigInt> support;
  Assignment a;
  for (const auto& v : theta.free_vars()) {
    if (v == u) continue;
    a[v] = params.at(v);
    for (const auto& kv : a[v].factors()) support.insert(kv.first);
  }
  Formula nf = eliminate(theta, engine);
  auto holds = [&](const BigInt& p) {
    a[u] = arith::FactoredNat::prime_power(p, 1);
    return eval_normal_form(nf, a, engine);
  };
  BigInt q = 2;
  while (support.count(q)) q = arith::next_prime(q);
  const bool generic = holds(q);
  std::map<BigInt, BigInt> code;
  for (const auto& p : support) {
    if (holds(p) != generic) code.emplace(p, 1);
  }
  return RadicalCode{generic ? Polarity::kComplement : Polarity::kDirect,
                     arith::FactoredNat(std::move(code))};
}

RadicalCode radical_code(const Formula& theta, const std::string& u,
                         const Assignment& params) {
  Engine engine;
  return radical_code(theta, u, params, engine);
}

Assignment EmbedRewrite::code_assignment() const {
  Assignment a;
  for (const auto& [name, code] : params) a[name] = code.code;
  return a;
}

namespace {

std::string pattern_string(std::uint64_t bits, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += ((bits >> i) & 1) ? '1' : '0';
  return s;
}

// Conjunction keeping the faithful constructor; one operand stands alone.
Formula conjunction(std::vector<Formula> parts) {
  if (parts.empty()) return Formula::truth(true);
  if (parts.size() == 1) return parts.front();
  return Formula::conj(std::move(parts));
}

// Rewrites one atom; code variable names come from `names`.
Formula rewrite_atom(const Formula& theta, const std::vector<std::string>& vars,
                     std::uint64_t k, const Assignment& params,
                     const std::string& binder, const std::string& prefix,
                     NameSupply& names, EmbedRewrite& out, Engine& engine) {
  if (theta.has_counting()) {
    throw InvalidArgument("stable_embed_rewrite: the body must be "
                          "counting-free");
  }
  if (vars.size() > 16) {
    throw ResourceError("stable_embed_rewrite: too many tuple variables");
  }
  std::set<std::string> tuple(vars.begin(), vars.end());
  for (const auto& v : theta.free_vars()) {
    if (v != binder && !tuple.count(v) && !params.count(v)) {
      throw InvalidArgument("stable_embed_rewrite: unassigned parameter '" +
                            v + "'");
    }
  }
  // Substitution needs plain atoms.
  const Formula body = desugar(theta);
  // Names private to the construction.
  NameSupply local(all_vars(body));
  for (const auto& v : vars) local.reserve(v);
  for (const auto& [v, n] : params) local.reserve(v);
  const std::string u = local.fresh("u");
  const std::string p = binder.empty() ? local.fresh("p") : binder;
  const std::string body_p = local.fresh("q");

  std::vector<Formula> clauses;
  const std::uint64_t patterns = std::uint64_t{1} << vars.size();
  for (std::uint64_t eps = 0; eps < patterns; ++eps) {
    // theta_eps(u; w): u is a prime at which theta holds with the tuple
    // variables' u-parts set to u^eps.
    Formula inst = binder.empty() ? body
                                  : rename_free(body, {{binder, body_p}});
    for (std::size_t i = 0; i < vars.size(); ++i) {
      Term value = ((eps >> i) & 1) ? Term::var(body_p) : Term();
      inst = substitute(inst, vars[i], value);
    }
    Formula at_u = Formula::count_ge(
        1, body_p,
        Formula::conj({Formula::eq(Term::var(u), Term::var(body_p)), inst}));
    Formula theta_eps = Formula::conj({Formula::prime(u), at_u});
    RadicalCode code = radical_code(theta_eps, u, params, engine);

    const std::string pat = pattern_string(eps, vars.size());
    const std::string s = names.fresh("s" + prefix + "_" + pat);
    out.param_of[prefix + pat] = s;
    out.params[s] = code;

    std::vector<Formula> match;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      match.push_back(Formula::eq(
          Term::var(vars[i]), ((eps >> i) & 1) ? Term::var(p) : Term()));
    }
    Formula member = Formula::divides(Term::var(p), Term::var(s));
    if (code.polarity == Polarity::kComplement) {
      member = Formula::negate(member);
    }
    clauses.push_back(Formula::implies(conjunction(std::move(match)),
                                       std::move(member)));
  }
  return Formula::count_ge(k, p, conjunction(std::move(clauses)));
}

NameSupply supply_for(const Formula& theta, const std::vector<std::string>& vars,
                      const Assignment& params) {
  NameSupply names(all_vars(theta));
  for (const auto& v : vars) names.reserve(v);
  for (const auto& [v, n] : params) names.reserve(v);
  return names;
}

}  // namespace

EmbedRewrite stable_embed_rewrite(const Formula& theta,
                                  const std::vector<std::string>& vars,
                                  std::uint64_t k, const Assignment& params,
                                  const std::string& binder, Engine& engine) {
  EmbedRewrite out;
  NameSupply names = supply_for(theta, vars, params);
  out.psi = rewrite_atom(theta, vars, k, params, binder, "", names, out, engine);
  return out;
}

EmbedRewrite stable_embed_rewrite(const Formula& theta,
                                  const std::vector<std::string>& vars,
                                  std::uint64_t k, const Assignment& params,
                                  const std::string& binder) {
  Engine engine;
  return stable_embed_rewrite(theta, vars, k, params, binder, engine);
}

EmbedRewrite stable_embed_rewrite_formula(const Formula& phi,
                                          const std::vector<std::string>& vars,
                                          const Assignment& params,
                                          Engine& engine) {
  Formula nf = eliminate(phi, engine);
  EmbedRewrite out;
  NameSupply names = supply_for(nf, vars, params);
  std::size_t leaf = 0;
  std::function<Formula(const Formula&)> walk = [&](const Formula& f) {
    switch (f.kind()) {
      case Kind::kConst:
        return f;
      case Kind::kCountGE: {
        // Sub-engines keep the outer binder's caches intact.
        Engine sub(engine.options());
        Formula r = rewrite_atom(f.child(), vars, f.count(), params, f.var(),
                                 std::to_string(++leaf), names, out, sub);
        engine.stats().presburger_calls += sub.stats().presburger_calls;
        return r;
      }
      case Kind::kNot:
        return mk_not(walk(f.child()));
      case Kind::kAnd:
      case Kind::kOr: {
        std::vector<Formula> kids;
        for (const auto& c : f.children()) kids.push_back(walk(c));
        return f.kind() == Kind::kAnd ? mk_and(std::move(kids))
                                      : mk_or(std::move(kids));
      }
      case Kind::kImplies:
        return mk_implies(walk(f.child(0)), walk(f.child(1)));
      default:
        throw InvalidArgument("stable_embed_rewrite: expected a counting "
                              "normal form");
    }
  };
  out.psi = walk(nf);
  return out;
}

}  // namespace skolem
