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

#include "skolem/formula.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "skolem/error.hpp"

namespace skolem {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_term(const Term& t) {
  std::size_t h = 0x51ed27;
  for (const auto& [v, e] : t.exponents()) {
    h = mix(h, std::hash<std::string>()(v));
    h = mix(h, std::hash<std::string>()(e.str()));
  }
  return h;
}

void add_term_vars(const Term& t, std::vector<std::string>& out) {
  for (const auto& kv : t.exponents()) out.push_back(kv.first);
}

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// ---------------------------------------------------------------- Term

Term Term::var(const std::string& name) { return power(name, 1); }

Term Term::power(const std::string& name, const BigInt& e) {
  if (e < 1) {
    throw InvalidArgument("exponent of '" + name + "' must be positive, got " +
                          e.str());
  }
  Term t;
  t.exps_.emplace(name, e);
  return t;
}

BigInt Term::exponent(const std::string& v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? BigInt(0) : it->second;
}

Term Term::operator*(const Term& other) const {
  Term t = *this;
  for (const auto& [v, e] : other.exps_) t.exps_[v] += e;
  return t;
}

Term Term::substitute(const std::string& v, const Term& t) const {
  auto it = exps_.find(v);
  if (it == exps_.end()) return *this;
  Term out = *this;
  BigInt k = it->second;
  out.exps_.erase(v);
  for (const auto& [w, e] : t.exps_) out.exps_[w] += e * k;
  return out;
}

Term Term::rename(const std::string& from, const std::string& to) const {
  if (from == to || !mentions(from)) return *this;
  return substitute(from, Term::var(to));
}

std::string Term::to_string() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : exps_) {
    if (!first) os << '*';
    first = false;
    os << v;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

// ------------------------------------------------------------- Formula

Formula::Formula() : Formula(truth(true)) {}

Formula Formula::make(FormulaNode n) {
  std::size_t h = mix(0xcbf29ce484222325ULL, static_cast<std::size_t>(n.kind));
  std::vector<std::string> free;
  bool counting = n.kind == Kind::kCountGE;
  bool sugar = n.kind == Kind::kDivides || n.kind == Kind::kPrime ||
               n.kind == Kind::kRad || n.kind == Kind::kPPartEq;
  bool quantifier = n.kind == Kind::kExists || n.kind == Kind::kForall;
  switch (n.kind) {
    case Kind::kConst:
      h = mix(h, n.value ? 1 : 2);
      break;
    case Kind::kEq:
    case Kind::kDivides:
      h = mix(mix(h, hash_term(n.lhs)), hash_term(n.rhs));
      add_term_vars(n.lhs, free);
      add_term_vars(n.rhs, free);
      break;
    case Kind::kPrime:
    case Kind::kRad:
      h = mix(h, std::hash<std::string>()(n.var));
      free.push_back(n.var);
      break;
    case Kind::kPPartEq:
      h = mix(h, std::hash<std::string>()(n.var));
      h = mix(h, std::hash<std::string>()(n.var2));
      h = mix(h, hash_term(n.rhs));
      free.push_back(n.var);
      free.push_back(n.var2);
      add_term_vars(n.rhs, free);
      break;
    default:
      break;
  }
  if (n.kind == Kind::kExists || n.kind == Kind::kForall ||
      n.kind == Kind::kCountGE) {
    h = mix(h, std::hash<std::string>()(n.var));
  }
  if (n.kind == Kind::kCountGE) h = mix(h, n.count);
  for (const auto& k : n.kids) {
    h = mix(h, k.hash());
    const auto& kf = k.free_vars();
    free.insert(free.end(), kf.begin(), kf.end());
    counting = counting || k.has_counting();
    sugar = sugar || k.has_sugar();
    quantifier = quantifier || k.has_quantifier();
  }
  sort_unique(free);
  if (n.kind == Kind::kExists || n.kind == Kind::kForall ||
      n.kind == Kind::kCountGE) {
    free.erase(std::remove(free.begin(), free.end(), n.var), free.end());
  }
  n.hash = h;
  n.free = std::move(free);
  n.counting = counting;
  n.sugar = sugar;
  n.quantifier = quantifier;
  return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

Formula Formula::truth(bool value) {
  static const Formula kTrue = [] {
    FormulaNode n;
    n.kind = Kind::kConst;
    n.value = true;
    return make(std::move(n));
  }();
  static const Formula kFalse = [] {
    FormulaNode n;
    n.kind = Kind::kConst;
    n.value = false;
    return make(std::move(n));
  }();
  return value ? kTrue : kFalse;
}

Formula Formula::eq(Term lhs, Term rhs) {
  FormulaNode n;
  n.kind = Kind::kEq;
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return make(std::move(n));
}

Formula Formula::negate(Formula body) {
  FormulaNode n;
  n.kind = Kind::kNot;
  n.kids.push_back(std::move(body));
  return make(std::move(n));
}

Formula Formula::conj(std::vector<Formula> args) {
  if (args.size() < 2) {
    throw InvalidArgument("conjunction needs at least two operands");
  }
  FormulaNode n;
  n.kind = Kind::kAnd;
  n.kids = std::move(args);
  return make(std::move(n));
}

Formula Formula::disj(std::vector<Formula> args) {
  if (args.size() < 2) {
    throw InvalidArgument("disjunction needs at least two operands");
  }
  FormulaNode n;
  n.kind = Kind::kOr;
  n.kids = std::move(args);
  return make(std::move(n));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  FormulaNode n;
  n.kind = Kind::kImplies;
  n.kids.push_back(std::move(lhs));
  n.kids.push_back(std::move(rhs));
  return make(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
  FormulaNode n;
  n.kind = Kind::kExists;
  n.var = std::move(var);
  n.kids.push_back(std::move(body));
  return make(std::move(n));
}

Formula Formula::forall(std::string var, Formula body) {
  FormulaNode n;
  n.kind = Kind::kForall;
  n.var = std::move(var);
  n.kids.push_back(std::move(body));
  return make(std::move(n));
}

Formula Formula::count_ge(std::uint64_t count, std::string var, Formula body) {
  if (body.has_counting()) {
    throw InvalidArgument("counting atom nested inside a counting body");
  }
  FormulaNode n;
  n.kind = Kind::kCountGE;
  n.count = count;
  n.var = std::move(var);
  n.kids.push_back(std::move(body));
  return make(std::move(n));
}

Formula Formula::divides(Term lhs, Term rhs) {
  FormulaNode n;
  n.kind = Kind::kDivides;
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return make(std::move(n));
}

Formula Formula::prime(std::string var) {
  FormulaNode n;
  n.kind = Kind::kPrime;
  n.var = std::move(var);
  return make(std::move(n));
}

Formula Formula::rad(std::string var) {
  FormulaNode n;
  n.kind = Kind::kRad;
  n.var = std::move(var);
  return make(std::move(n));
}

Formula Formula::ppart_eq(std::string v, std::string u, Term rhs) {
  FormulaNode n;
  n.kind = Kind::kPPartEq;
  n.var = std::move(v);
  n.var2 = std::move(u);
  n.rhs = std::move(rhs);
  return make(std::move(n));
}

Kind Formula::kind() const { return node_->kind; }
bool Formula::value() const { return node_->value; }
const Term& Formula::lhs() const { return node_->lhs; }
const Term& Formula::rhs() const { return node_->rhs; }
const std::string& Formula::var() const { return node_->var; }
const std::string& Formula::prime_var() const { return node_->var2; }
std::uint64_t Formula::count() const { return node_->count; }
const std::vector<Formula>& Formula::children() const { return node_->kids; }
const Formula& Formula::child(std::size_t i) const { return node_->kids.at(i); }
std::size_t Formula::hash() const { return node_->hash; }
const std::vector<std::string>& Formula::free_vars() const {
  return node_->free;
}
bool Formula::has_free(const std::string& v) const {
  return std::binary_search(node_->free.begin(), node_->free.end(), v);
}
bool Formula::has_counting() const { return node_->counting; }
bool Formula::has_sugar() const { return node_->sugar; }
bool Formula::has_quantifier() const { return node_->quantifier; }

std::size_t Formula::dag_size() const {
  std::unordered_set<const FormulaNode*> seen;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (!seen.insert(f->id()).second) continue;
    for (const auto& k : f->children()) stack.push_back(&k);
  }
  return seen.size();
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const FormulaNode& x = *a.node_;
  const FormulaNode& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind) return false;
  if (x.value != y.value || x.count != y.count || x.var != y.var ||
      x.var2 != y.var2 || x.lhs != y.lhs || x.rhs != y.rhs ||
      x.kids.size() != y.kids.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.kids.size(); ++i) {
    if (!(x.kids[i] == y.kids[i])) return false;
  }
  return true;
}

// ------------------------------------------------------------ builders

Formula mk_not(const Formula& f) {
  if (f.kind() == Kind::kConst) return Formula::truth(!f.value());
  if (f.kind() == Kind::kNot) return f.child();
  return Formula::negate(f);
}

namespace {

Formula mk_nary(std::vector<Formula> args, Kind kind) {
  const bool unit = kind == Kind::kAnd;  // neutral element
  std::vector<Formula> flat;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> add = [&](const Formula& f) {
    if (f.kind() == kind) {
      for (const auto& k : f.children()) add(k);
      return;
    }
    if (seen.insert(f).second) flat.push_back(f);
  };
  for (const auto& a : args) add(a);
  std::vector<Formula> out;
  for (auto& f : flat) {
    if (f.kind() == Kind::kConst) {
      if (f.value() != unit) return Formula::truth(!unit);
      continue;
    }
    if (f.kind() == Kind::kNot && seen.count(f.child())) {
      return Formula::truth(!unit);
    }
    out.push_back(std::move(f));
  }
  if (out.empty()) return Formula::truth(unit);
  if (out.size() == 1) return out.front();
  return kind == Kind::kAnd ? Formula::conj(std::move(out))
                            : Formula::disj(std::move(out));
}

}  // namespace

Formula mk_and(std::vector<Formula> args) {
  return mk_nary(std::move(args), Kind::kAnd);
}
Formula mk_or(std::vector<Formula> args) {
  return mk_nary(std::move(args), Kind::kOr);
}
Formula mk_and(const Formula& a, const Formula& b) { return mk_and({a, b}); }
Formula mk_or(const Formula& a, const Formula& b) { return mk_or({a, b}); }
Formula mk_implies(const Formula& a, const Formula& b) {
  return mk_or(mk_not(a), b);
}
Formula mk_iff(const Formula& a, const Formula& b) {
  return mk_and(mk_implies(a, b), mk_implies(b, a));
}

// ------------------------------------------------------------ renaming

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  std::unordered_set<const FormulaNode*> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (!seen.insert(g.id()).second) return;
    for (const auto& v : g.free_vars()) out.insert(v);
    switch (g.kind()) {
      case Kind::kExists:
      case Kind::kForall:
      case Kind::kCountGE:
        out.insert(g.var());
        break;
      default:
        break;
    }
    for (const auto& k : g.children()) walk(k);
  };
  walk(f);
  return out;
}

void NameSupply::reserve_all(const Formula& f) {
  for (const auto& v : all_vars(f)) used_.insert(v);
}

std::string NameSupply::fresh(const std::string& base) {
  if (used_.insert(base).second) return base;
  std::size_t& k = next_[base];
  for (;;) {
    std::string cand = base + "_" + std::to_string(++k);
    if (used_.insert(cand).second) return cand;
  }
}

namespace {

Formula rebuild(const Formula& f, std::vector<Formula> kids,
                const std::string& binder) {
  switch (f.kind()) {
    case Kind::kNot:
      return Formula::negate(std::move(kids[0]));
    case Kind::kAnd:
      return Formula::conj(std::move(kids));
    case Kind::kOr:
      return Formula::disj(std::move(kids));
    case Kind::kImplies:
      return Formula::implies(std::move(kids[0]), std::move(kids[1]));
    case Kind::kExists:
      return Formula::exists(binder, std::move(kids[0]));
    case Kind::kForall:
      return Formula::forall(binder, std::move(kids[0]));
    case Kind::kCountGE:
      return Formula::count_ge(f.count(), binder, std::move(kids[0]));
    default:
      return f;
  }
}

bool binds(Kind k) {
  return k == Kind::kExists || k == Kind::kForall || k == Kind::kCountGE;
}

// Capture-avoiding simultaneous substitution var -> Term. Sugar atoms whose
// variable slots receive a non-variable term are rejected.
class Substituter {
 public:
  Substituter(std::map<std::string, Term> sub, NameSupply names)
      : names_(std::move(names)) {
    scopes_.push_back(std::move(sub));
  }

  Formula run(const Formula& f) { return go(f, 0); }

 private:
  Formula go(const Formula& f, std::size_t scope) {
    const auto& sub = scopes_[scope];
    bool touched = false;
    for (const auto& v : f.free_vars()) {
      if (sub.count(v)) {
        touched = true;
        break;
      }
    }
    if (!touched) return f;
    auto key = std::make_pair(f.id(), scope);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Formula out = apply(f, scope);
    memo_.emplace(key, out);
    return out;
  }

  std::string as_var(const std::string& v, std::size_t scope) {
    const auto& sub = scopes_[scope];
    auto it = sub.find(v);
    if (it == sub.end()) return v;
    const auto& exps = it->second.exponents();
    if (exps.size() != 1 || exps.begin()->second != 1) {
      throw InvalidArgument("cannot substitute '" + it->second.to_string() +
                            "' for variable '" + v +
                            "' inside a sugar atom; desugar first");
    }
    return exps.begin()->first;
  }

  Term term(const Term& t, std::size_t scope) {
    const auto& sub = scopes_[scope];
    Term out;
    for (const auto& [v, e] : t.exponents()) {
      auto it = sub.find(v);
      Term base = it == sub.end() ? Term::var(v) : it->second;
      for (const auto& [w, k] : base.exponents()) {
        out = out * Term::power(w, k * e);
      }
    }
    return out;
  }

  Formula apply(const Formula& f, std::size_t scope) {
    switch (f.kind()) {
      case Kind::kEq:
        return Formula::eq(term(f.lhs(), scope), term(f.rhs(), scope));
      case Kind::kDivides:
        return Formula::divides(term(f.lhs(), scope), term(f.rhs(), scope));
      case Kind::kPrime:
        return Formula::prime(as_var(f.var(), scope));
      case Kind::kRad:
        return Formula::rad(as_var(f.var(), scope));
      case Kind::kPPartEq:
        return Formula::ppart_eq(as_var(f.var(), scope),
                                 as_var(f.prime_var(), scope),
                                 term(f.rhs(), scope));
      default:
        break;
    }
    if (!binds(f.kind())) {
      std::vector<Formula> kids;
      kids.reserve(f.children().size());
      for (const auto& k : f.children()) kids.push_back(go(k, scope));
      return rebuild(f, std::move(kids), f.var());
    }
    const std::string& x = f.var();
    std::map<std::string, Term> inner = scopes_[scope];
    inner.erase(x);
    const Formula& body = f.child();
    // Rename the binder if some substituted term would be captured.
    bool capture = false;
    for (const auto& [v, t] : inner) {
      if (body.has_free(v) && t.mentions(x)) {
        capture = true;
        break;
      }
    }
    std::string binder = x;
    if (capture) {
      binder = names_.fresh(x);
      inner[x] = Term::var(binder);
    }
    scopes_.push_back(std::move(inner));
    Formula nb = go(body, scopes_.size() - 1);
    return rebuild(f, {nb}, binder);
  }

  std::vector<std::map<std::string, Term>> scopes_;
  std::map<std::pair<const FormulaNode*, std::size_t>, Formula> memo_;
  NameSupply names_;
};

NameSupply supply_for(const Formula& f,
                      const std::map<std::string, Term>& sub) {
  NameSupply names;
  names.reserve_all(f);
  for (const auto& [v, t] : sub) {
    names.reserve(v);
    for (const auto& kv : t.exponents()) names.reserve(kv.first);
  }
  return names;
}

}  // namespace

Formula rename_free(const Formula& f,
                    const std::map<std::string, std::string>& renaming) {
  std::map<std::string, Term> sub;
  for (const auto& [from, to] : renaming) {
    if (from != to) sub.emplace(from, Term::var(to));
  }
  if (sub.empty()) return f;
  Substituter s(sub, supply_for(f, sub));
  return s.run(f);
}

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  std::map<std::string, Term> sub{{var, t}};
  Substituter s(sub, supply_for(f, sub));
  return s.run(f);
}

Formula rename_apart(const Formula& f) {
  NameSupply names;
  for (const auto& v : f.free_vars()) names.reserve(v);
  // Binders keep their name when it is still unused; later binders with a
  // clashing name get a fresh one.
  std::function<Formula(const Formula&, const std::map<std::string, std::string>&)>
      go = [&](const Formula& g,
               const std::map<std::string, std::string>& ren) -> Formula {
    auto rn = [&](const std::string& v) {
      auto it = ren.find(v);
      return it == ren.end() ? v : it->second;
    };
    auto rt = [&](const Term& t) {
      Term out;
      for (const auto& [v, e] : t.exponents()) out = out * Term::power(rn(v), e);
      return out;
    };
    switch (g.kind()) {
      case Kind::kConst:
        return g;
      case Kind::kEq:
        return Formula::eq(rt(g.lhs()), rt(g.rhs()));
      case Kind::kDivides:
        return Formula::divides(rt(g.lhs()), rt(g.rhs()));
      case Kind::kPrime:
        return Formula::prime(rn(g.var()));
      case Kind::kRad:
        return Formula::rad(rn(g.var()));
      case Kind::kPPartEq:
        return Formula::ppart_eq(rn(g.var()), rn(g.prime_var()), rt(g.rhs()));
      default:
        break;
    }
    if (binds(g.kind())) {
      std::string b = names.fresh(g.var());
      auto inner = ren;
      inner[g.var()] = b;
      return rebuild(g, {go(g.child(), inner)}, b);
    }
    std::vector<Formula> kids;
    for (const auto& k : g.children()) kids.push_back(go(k, ren));
    return rebuild(g, std::move(kids), g.var());
  };
  return go(f, {});
}

}  // namespace skolem
