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

#include "skolem/presburger.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "skolem/error.hpp"

namespace skolem::pres {
namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return std::hash<std::int64_t>{}(static_cast<std::int64_t>(v));
  }
  return std::hash<std::string>{}(v.str());
}

std::size_t hash_term(const LinTerm& t) {
  std::size_t h = hash_big(t.constant());
  for (const auto& [v, c] : t.coeffs()) {
    h = mix(h, std::hash<std::string>{}(v));
    h = mix(h, hash_big(c));
  }
  return h;
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Ceiling of a / b for b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

}  // namespace

// ------------------------------------------------------------ LinTerm

LinTerm LinTerm::var(const std::string& name, const BigInt& coeff) {
  LinTerm t;
  if (coeff != 0) t.coeffs_.emplace(name, coeff);
  return t;
}

BigInt LinTerm::coeff(const std::string& v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

LinTerm LinTerm::operator+(const LinTerm& o) const {
  LinTerm r = *this;
  r.constant_ += o.constant_;
  for (const auto& [v, c] : o.coeffs_) {
    BigInt& slot = r.coeffs_[v];
    slot += c;
    if (slot == 0) r.coeffs_.erase(v);
  }
  return r;
}

LinTerm LinTerm::operator-() const { return *this * BigInt(-1); }

LinTerm LinTerm::operator-(const LinTerm& o) const { return *this + (-o); }

LinTerm LinTerm::operator*(const BigInt& k) const {
  LinTerm r;
  if (k == 0) return r;
  r.constant_ = constant_ * k;
  for (const auto& [v, c] : coeffs_) r.coeffs_.emplace(v, c * k);
  return r;
}

LinTerm LinTerm::substitute(const std::string& v, const LinTerm& t) const {
  auto it = coeffs_.find(v);
  if (it == coeffs_.end()) return *this;
  BigInt c = it->second;
  LinTerm r = *this;
  r.coeffs_.erase(v);
  return r + t * c;
}

BigInt LinTerm::evaluate(const Assignment& a) const {
  BigInt r = constant_;
  for (const auto& [v, c] : coeffs_) {
    auto it = a.find(v);
    if (it == a.end()) {
      throw InvalidArgument("unassigned Presburger variable '" + v + "'");
    }
    r += c * it->second;
  }
  return r;
}

std::string LinTerm::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const BigInt& c, const std::string& v) {
    BigInt mag = abs_big(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (v.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << v;
    }
    first = false;
  };
  for (const auto& [v, c] : coeffs_) emit(c, v);
  if (constant_ != 0 || first) {
    if (first && constant_ == 0) {
      os << '0';
    } else {
      emit(constant_, "");
    }
  }
  return os.str();
}

// ------------------------------------------------------------ PresFormula

PresFormula::PresFormula() : PresFormula(truth(true)) {}

PresFormula PresFormula::make(PresNode n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
  switch (n.kind) {
    case PKind::kConst:
      h = mix(h, n.value ? 1 : 2);
      break;
    case PKind::kEq:
    case PKind::kLe:
    case PKind::kDvd: {
      h = mix(h, hash_term(n.term));
      h = mix(h, hash_big(n.modulus));
      for (const auto& [v, c] : n.term.coeffs()) n.free.push_back(v);
      break;
    }
    case PKind::kNot:
    case PKind::kAnd:
    case PKind::kOr: {
      std::set<std::string> fv;
      for (const auto& k : n.kids) {
        h = mix(h, k.hash());
        fv.insert(k.free_vars().begin(), k.free_vars().end());
        n.qf = n.qf && k.is_quantifier_free();
      }
      n.free.assign(fv.begin(), fv.end());
      break;
    }
    case PKind::kExists:
    case PKind::kForall: {
      h = mix(h, std::hash<std::string>{}(n.var));
      h = mix(h, n.kids[0].hash());
      for (const auto& v : n.kids[0].free_vars()) {
        if (v != n.var) n.free.push_back(v);
      }
      n.qf = false;
      break;
    }
  }
  n.hash = h;
  return PresFormula(std::make_shared<const PresNode>(std::move(n)));
}

PresFormula PresFormula::truth(bool v) {
  static const PresFormula kTrue = [] {
    PresNode n;
    n.value = true;
    return make(std::move(n));
  }();
  static const PresFormula kFalse = [] {
    PresNode n;
    n.value = false;
    return make(std::move(n));
  }();
  return v ? kTrue : kFalse;
}

PresFormula PresFormula::atom(PKind k, BigInt d, LinTerm t) {
  PresNode n;
  n.kind = k;
  n.modulus = std::move(d);
  n.term = std::move(t);
  return make(std::move(n));
}

PresFormula PresFormula::lin_eq(const LinTerm& a, const LinTerm& b) {
  LinTerm t = a - b;
  if (t.is_constant()) return truth(t.constant() == 0);
  BigInt g = 0;
  for (const auto& [v, c] : t.coeffs()) g = gcd(g, c);
  if (mod_floor(t.constant(), g) != 0) return truth(false);
  LinTerm r;
  r = LinTerm(t.constant() / g);
  for (const auto& [v, c] : t.coeffs()) r = r + LinTerm::var(v, c / g);
  if (r.coeffs().begin()->second < 0) r = -r;
  bool all_pos = std::all_of(r.coeffs().begin(), r.coeffs().end(),
                             [](const auto& e) { return e.second > 0; });
  // Over the naturals a positive combination cannot equal a negative value.
  if (all_pos && r.constant() > 0) return truth(false);
  return atom(PKind::kEq, 0, std::move(r));
}

PresFormula PresFormula::lin_le(const LinTerm& a, const LinTerm& b) {
  LinTerm t = a - b;
  if (t.is_constant()) return truth(t.constant() <= 0);
  BigInt g = 0;
  for (const auto& [v, c] : t.coeffs()) g = gcd(g, c);
  LinTerm r(ceil_div(t.constant(), g));
  for (const auto& [v, c] : t.coeffs()) r = r + LinTerm::var(v, c / g);
  bool all_pos = std::all_of(r.coeffs().begin(), r.coeffs().end(),
                             [](const auto& e) { return e.second > 0; });
  bool all_neg = std::all_of(r.coeffs().begin(), r.coeffs().end(),
                             [](const auto& e) { return e.second < 0; });
  if (all_pos && r.constant() > 0) return truth(false);
  if (all_neg && r.constant() <= 0) return truth(true);
  return atom(PKind::kLe, 0, std::move(r));
}

PresFormula PresFormula::dvd(const BigInt& d0, const LinTerm& t) {
  if (d0 == 0) throw InvalidArgument("divisibility modulus must be positive");
  BigInt d = abs_big(d0);
  if (d == 1) return truth(true);
  LinTerm r(mod_floor(t.constant(), d));
  for (const auto& [v, c] : t.coeffs()) {
    BigInt m = mod_floor(c, d);
    if (m != 0) r = r + LinTerm::var(v, m);
  }
  if (r.is_constant()) return truth(r.constant() == 0);
  BigInt g = d;
  for (const auto& [v, c] : r.coeffs()) g = gcd(g, c);
  if (g > 1) {
    if (mod_floor(r.constant(), g) != 0) return truth(false);
    d /= g;
    LinTerm s(r.constant() / g);
    for (const auto& [v, c] : r.coeffs()) s = s + LinTerm::var(v, c / g);
    r = s;
    if (d == 1) return truth(true);
  }
  return atom(PKind::kDvd, std::move(d), std::move(r));
}

PresFormula PresFormula::negate(const PresFormula& f) {
  switch (f.kind()) {
    case PKind::kConst:
      return truth(!f.value());
    case PKind::kNot:
      return f.child();
    case PKind::kLe:
      // not (t <= 0)  <=>  1 - t <= 0
      return lin_le(LinTerm(1) - f.term(), LinTerm());
    default: {
      PresNode n;
      n.kind = PKind::kNot;
      n.kids.push_back(f);
      return make(std::move(n));
    }
  }
}

namespace {

PresFormula junction(PKind kind, std::vector<PresFormula> args,
                     PresFormula (*make_node)(PKind, std::vector<PresFormula>)) {
  const bool is_and = kind == PKind::kAnd;
  std::vector<PresFormula> flat;
  std::unordered_set<PresFormula, PresHash> seen;
  std::function<bool(const PresFormula&)> add = [&](const PresFormula& a) {
    if (a.kind() == kind) {
      for (const auto& k : a.children()) {
        if (!add(k)) return false;
      }
      return true;
    }
    if (a.kind() == PKind::kConst) {
      // Absorbing constant stops the scan.
      return a.value() == is_and;
    }
    if (seen.count(a)) return true;
    if (seen.count(PresFormula::negate(a))) return false;
    seen.insert(a);
    flat.push_back(a);
    return true;
  };
  for (const auto& a : args) {
    if (!add(a)) return PresFormula::truth(!is_and);
  }
  if (flat.empty()) return PresFormula::truth(is_and);
  if (flat.size() == 1) return flat.front();
  return make_node(kind, std::move(flat));
}

}  // namespace

PresFormula PresFormula::conj(std::vector<PresFormula> args) {
  return junction(PKind::kAnd, std::move(args),
                  [](PKind k, std::vector<PresFormula> kids) {
                    PresNode n;
                    n.kind = k;
                    n.kids = std::move(kids);
                    return make(std::move(n));
                  });
}

PresFormula PresFormula::disj(std::vector<PresFormula> args) {
  return junction(PKind::kOr, std::move(args),
                  [](PKind k, std::vector<PresFormula> kids) {
                    PresNode n;
                    n.kind = k;
                    n.kids = std::move(kids);
                    return make(std::move(n));
                  });
}

PresFormula PresFormula::exists(const std::string& v, const PresFormula& body) {
  if (!body.has_free(v)) return body;
  PresNode n;
  n.kind = PKind::kExists;
  n.var = v;
  n.kids.push_back(body);
  return make(std::move(n));
}

PresFormula PresFormula::forall(const std::string& v, const PresFormula& body) {
  if (!body.has_free(v)) return body;
  PresNode n;
  n.kind = PKind::kForall;
  n.var = v;
  n.kids.push_back(body);
  return make(std::move(n));
}

PKind PresFormula::kind() const { return node_->kind; }
bool PresFormula::value() const { return node_->value; }
const LinTerm& PresFormula::term() const { return node_->term; }
const BigInt& PresFormula::modulus() const { return node_->modulus; }
const std::string& PresFormula::var() const { return node_->var; }
const std::vector<PresFormula>& PresFormula::children() const {
  return node_->kids;
}
const PresFormula& PresFormula::child(std::size_t i) const {
  return node_->kids.at(i);
}
const std::vector<std::string>& PresFormula::free_vars() const {
  return node_->free;
}
bool PresFormula::has_free(const std::string& v) const {
  return std::binary_search(node_->free.begin(), node_->free.end(), v);
}
bool PresFormula::is_quantifier_free() const { return node_->qf; }
std::size_t PresFormula::hash() const { return node_->hash; }

std::size_t PresFormula::dag_size() const {
  std::unordered_set<const PresNode*> seen;
  std::vector<const PresNode*> stack{node_.get()};
  while (!stack.empty()) {
    const PresNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& k : n->kids) stack.push_back(k.node_.get());
  }
  return seen.size();
}

bool operator==(const PresFormula& a, const PresFormula& b) {
  if (a.node_ == b.node_) return true;
  const PresNode& x = *a.node_;
  const PresNode& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind) return false;
  return x.value == y.value && x.modulus == y.modulus && x.var == y.var &&
         x.term == y.term && x.kids == y.kids;
}

// ------------------------------------------------------------ substitution

namespace {

class Substituter {
 public:
  Substituter(std::string v, LinTerm t) : v_(std::move(v)), t_(std::move(t)) {}

  PresFormula run(const PresFormula& f) {
    if (!f.has_free(v_)) return f;
    auto it = memo_.find(key(f));
    if (it != memo_.end()) return it->second;
    PresFormula r = compute(f);
    memo_.emplace(key(f), r);
    return r;
  }

 private:
  static const void* key(const PresFormula& f) { return f.id(); }

  PresFormula compute(const PresFormula& f) {
    switch (f.kind()) {
      case PKind::kConst:
        return f;
      case PKind::kEq:
        return PresFormula::lin_eq(f.term().substitute(v_, t_), LinTerm());
      case PKind::kLe:
        return PresFormula::lin_le(f.term().substitute(v_, t_), LinTerm());
      case PKind::kDvd:
        return PresFormula::dvd(f.modulus(), f.term().substitute(v_, t_));
      case PKind::kNot:
        return PresFormula::negate(run(f.child()));
      case PKind::kAnd:
      case PKind::kOr: {
        std::vector<PresFormula> kids;
        kids.reserve(f.children().size());
        for (const auto& k : f.children()) kids.push_back(run(k));
        return f.kind() == PKind::kAnd ? PresFormula::conj(std::move(kids))
                                       : PresFormula::disj(std::move(kids));
      }
      case PKind::kExists:
      case PKind::kForall: {
        std::string bound = f.var();
        PresFormula body = f.child();
        if (t_.coeffs().count(bound)) {
          // Rename the binder away from the substituted term.
          std::string fresh = bound;
          int i = 0;
          do {
            fresh = bound + "'" + std::to_string(++i);
          } while (t_.coeffs().count(fresh) || body.has_free(fresh) ||
                   fresh == v_);
          body = substitute(body, bound, LinTerm::var(fresh));
          bound = fresh;
        }
        PresFormula inner = run(body);
        return f.kind() == PKind::kExists ? PresFormula::exists(bound, inner)
                                          : PresFormula::forall(bound, inner);
      }
    }
    return f;
  }

  std::string v_;
  LinTerm t_;
  std::unordered_map<const void*, PresFormula> memo_;
};

}  // namespace

PresFormula substitute(const PresFormula& f, const std::string& v,
                       const LinTerm& t) {
  Substituter s(v, t);
  return s.run(f);
}

bool eval_qf(const PresFormula& f, const Assignment& a) {
  switch (f.kind()) {
    case PKind::kConst:
      return f.value();
    case PKind::kEq:
      return f.term().evaluate(a) == 0;
    case PKind::kLe:
      return f.term().evaluate(a) <= 0;
    case PKind::kDvd:
      return mod_floor(f.term().evaluate(a), f.modulus()) == 0;
    case PKind::kNot:
      return !eval_qf(f.child(), a);
    case PKind::kAnd:
      for (const auto& k : f.children()) {
        if (!eval_qf(k, a)) return false;
      }
      return true;
    case PKind::kOr:
      for (const auto& k : f.children()) {
        if (eval_qf(k, a)) return true;
      }
      return false;
    case PKind::kExists:
    case PKind::kForall:
      break;
  }
  throw InvalidArgument("eval_qf: formula has quantifiers");
}

// ------------------------------------------------------------ Cooper

namespace {

PresFormula nnf(const PresFormula& f, bool neg) {
  switch (f.kind()) {
    case PKind::kConst:
      return PresFormula::truth(f.value() != neg);
    case PKind::kEq:
    case PKind::kLe:
    case PKind::kDvd:
      return neg ? PresFormula::negate(f) : f;
    case PKind::kNot:
      return nnf(f.child(), !neg);
    case PKind::kAnd:
    case PKind::kOr: {
      std::vector<PresFormula> kids;
      for (const auto& k : f.children()) kids.push_back(nnf(k, neg));
      bool as_and = (f.kind() == PKind::kAnd) != neg;
      return as_and ? PresFormula::conj(std::move(kids))
                    : PresFormula::disj(std::move(kids));
    }
    default:
      throw InvalidArgument("nnf: formula has quantifiers");
  }
}

// An atom s*x' + rest (kind) after scaling x's coefficient to +-L.
struct Lit {
  PKind kind = PKind::kLe;
  int sign = 0;
  LinTerm rest;
  BigInt modulus = 0;
};

class Cooper {
 public:
  Cooper(std::string x, const PresLimits& limits)
      : x_(std::move(x)), limits_(limits) {}

  // body is quantifier-free, in negation normal form, and mentions x.
  PresFormula eliminate(const PresFormula& body) {
    collect_coeffs(body);
    scan(body, false);
    // Equality shortcut: a top-level equation pins x' down.
    std::vector<PresFormula> top =
        body.kind() == PKind::kAnd ? body.children()
                                   : std::vector<PresFormula>{body};
    for (const auto& c : top) {
      if (c.kind() == PKind::kEq && c.has_free(x_)) {
        const Lit& l = lits_.at(key(c));
        LinTerm e = l.rest * BigInt(-l.sign);
        return instantiate_all(body, e);
      }
    }
    check_size(body, lower_.size());
    if (upper_.size() < lower_.size()) {
      std::vector<PresFormula> out;
      for (BigInt j = 1; j <= delta_; ++j) {
        LinTerm mj(-j);
        out.push_back(PresFormula::conj(
            {PresFormula::dvd(lcm_, mj), instantiate(body, mj, true)}));
        for (const auto& a : upper_) {
          out.push_back(instantiate_all(body, a - LinTerm(j)));
        }
      }
      return PresFormula::disj(std::move(out));
    }
    std::vector<PresFormula> out;
    for (BigInt j = 1; j <= delta_; ++j) {
      for (const auto& b : lower_) {
        out.push_back(instantiate_all(body, b + LinTerm(j)));
      }
    }
    return PresFormula::disj(std::move(out));
  }

  // Largest witness candidate for x' under an assignment, divided back.
  BigInt bound(const PresFormula& body, const Assignment& a) {
    collect_coeffs(body);
    scan(body, false);
    BigInt best = -1;
    for (const auto& b : lower_) best = std::max(best, b.evaluate(a));
    BigInt top = best + delta_;
    if (top < 0) return 0;
    return floor_div(top, lcm_);
  }

 private:
  static const void* key(const PresFormula& f) { return f.id(); }

  void collect_coeffs(const PresFormula& f) {
    lcm_ = 1;
    std::vector<PresFormula> stack{f};
    std::unordered_set<const void*> seen;
    while (!stack.empty()) {
      PresFormula g = stack.back();
      stack.pop_back();
      if (!seen.insert(key(g)).second) continue;
      switch (g.kind()) {
        case PKind::kEq:
        case PKind::kLe:
        case PKind::kDvd: {
          BigInt c = g.term().coeff(x_);
          if (c != 0) lcm_ = lcm(lcm_, abs_big(c));
          break;
        }
        default:
          for (const auto& k : g.children()) stack.push_back(k);
      }
    }
    delta_ = lcm_;
    lower_.clear();
    upper_.clear();
    lower_set_.clear();
    upper_set_.clear();
    // The guard x' >= 0, i.e. x' > -1.
    add_lower(LinTerm(-1));
  }

  void add_lower(const LinTerm& t) {
    if (lower_set_.insert(t).second) lower_.push_back(t);
  }
  void add_upper(const LinTerm& t) {
    if (upper_set_.insert(t).second) upper_.push_back(t);
  }

  void scan(const PresFormula& f, bool neg) {
    switch (f.kind()) {
      case PKind::kEq:
      case PKind::kLe:
      case PKind::kDvd: {
        BigInt c = f.term().coeff(x_);
        if (c == 0) return;
        if (lits_.count(key(f)) == 0) {
          BigInt m = lcm_ / abs_big(c);
          Lit l;
          l.kind = f.kind();
          l.sign = c > 0 ? 1 : -1;
          l.rest = (f.term() - LinTerm::var(x_, c)) * m;
          l.modulus = f.modulus() * m;
          lits_.emplace(key(f), l);
        }
        const Lit& l = lits_.at(key(f));
        LinTerm root = l.rest * BigInt(-l.sign);  // s*x' + rest = 0 at x'=root
        switch (f.kind()) {
          case PKind::kLe:
            if (l.sign < 0) {
              add_lower(l.rest - LinTerm(1));
            } else {
              add_upper(root + LinTerm(1));
            }
            break;
          case PKind::kEq:
            if (neg) {
              add_lower(root);
              add_upper(root);
            } else {
              add_lower(root - LinTerm(1));
              add_upper(root + LinTerm(1));
            }
            break;
          default:
            delta_ = lcm(delta_, l.modulus);
        }
        return;
      }
      case PKind::kNot:
        scan(f.child(), !neg);
        return;
      case PKind::kAnd:
      case PKind::kOr:
        for (const auto& k : f.children()) scan(k, neg);
        return;
      default:
        return;
    }
  }

  PresFormula lit_at(const Lit& l, const LinTerm& e) const {
    LinTerm t = e * BigInt(l.sign) + l.rest;
    switch (l.kind) {
      case PKind::kEq:
        return PresFormula::lin_eq(t, LinTerm());
      case PKind::kLe:
        return PresFormula::lin_le(t, LinTerm());
      default:
        return PresFormula::dvd(l.modulus, t);
    }
  }

  // body[x' := e]; with plus_inf, order atoms on x' take their value at +oo.
  PresFormula instantiate(const PresFormula& f, const LinTerm& e,
                          bool plus_inf) {
    memo_.clear();
    return inst(f, e, plus_inf);
  }

  PresFormula inst(const PresFormula& f, const LinTerm& e, bool plus_inf) {
    if (!f.has_free(x_)) return f;
    auto it = memo_.find(key(f));
    if (it != memo_.end()) return it->second;
    PresFormula r;
    switch (f.kind()) {
      case PKind::kEq:
      case PKind::kLe:
      case PKind::kDvd: {
        const Lit& l = lits_.at(key(f));
        if (plus_inf && l.kind == PKind::kLe) {
          r = PresFormula::truth(l.sign < 0);
        } else if (plus_inf && l.kind == PKind::kEq) {
          r = PresFormula::truth(false);
        } else {
          r = lit_at(l, e);
        }
        break;
      }
      case PKind::kNot:
        r = PresFormula::negate(inst(f.child(), e, plus_inf));
        break;
      case PKind::kAnd:
      case PKind::kOr: {
        std::vector<PresFormula> kids;
        kids.reserve(f.children().size());
        for (const auto& k : f.children()) {
          PresFormula v = inst(k, e, plus_inf);
          if (v.is_const(f.kind() == PKind::kOr)) {
            kids.assign(1, v);
            break;
          }
          kids.push_back(std::move(v));
        }
        r = f.kind() == PKind::kAnd ? PresFormula::conj(std::move(kids))
                                    : PresFormula::disj(std::move(kids));
        break;
      }
      default:
        throw InvalidArgument("cooper: unexpected quantifier");
    }
    memo_.emplace(key(f), r);
    return r;
  }

  // guard(e) /\ L | e /\ body[x' := e]
  PresFormula instantiate_all(const PresFormula& body, const LinTerm& e) {
    PresFormula guard = PresFormula::lin_le(-e, LinTerm());
    if (guard.is_const(false)) return guard;
    PresFormula div = PresFormula::dvd(lcm_, e);
    if (div.is_const(false)) return div;
    return PresFormula::conj({guard, div, instantiate(body, e, false)});
  }

  void check_size(const PresFormula& body, std::size_t points) {
    BigInt est = BigInt(body.dag_size()) * delta_ * (points + 1);
    if (est > limits_.node_limit) {
      throw ResourceError("Presburger elimination exceeds the node limit (" +
                          std::to_string(limits_.node_limit) + ")");
    }
  }

  std::string x_;
  const PresLimits& limits_;
  BigInt lcm_ = 1;
  BigInt delta_ = 1;
  std::vector<LinTerm> lower_, upper_;
  std::set<LinTerm> lower_set_, upper_set_;
  std::unordered_map<const void*, Lit> lits_;
  std::unordered_map<const void*, PresFormula> memo_;
};

PresFormula cooper_nnf(const std::string& x, const PresFormula& f,
                       const PresLimits& limits, PresStats* stats) {
  if (!f.has_free(x)) return f;
  if (f.kind() == PKind::kOr) {
    std::vector<PresFormula> parts;
    for (const auto& k : f.children()) {
      parts.push_back(cooper_nnf(x, k, limits, stats));
      if (parts.back().is_const(true)) return parts.back();
    }
    return PresFormula::disj(std::move(parts));
  }
  if (f.kind() == PKind::kAnd) {
    std::vector<PresFormula> indep, dep;
    for (const auto& k : f.children()) {
      (k.has_free(x) ? dep : indep).push_back(k);
    }
    if (!indep.empty()) {
      PresFormula d = dep.size() == 1 ? dep.front()
                                      : PresFormula::conj(std::move(dep));
      indep.push_back(cooper_nnf(x, d, limits, stats));
      return PresFormula::conj(std::move(indep));
    }
  }
  if (stats) ++stats->cooper_steps;
  Cooper c(x, limits);
  PresFormula r = c.eliminate(f);
  if (r.dag_size() > limits.node_limit) {
    throw ResourceError("Presburger elimination exceeds the node limit (" +
                        std::to_string(limits.node_limit) + ")");
  }
  return r;
}

class Eliminator {
 public:
  Eliminator(const PresLimits& limits, PresStats* stats)
      : limits_(limits), stats_(stats) {}

  PresFormula run(const PresFormula& f) {
    if (f.is_quantifier_free()) return f;
    auto it = memo_.find(f.id());
    if (it != memo_.end()) return it->second;
    PresFormula r;
    switch (f.kind()) {
      case PKind::kNot:
        r = PresFormula::negate(run(f.child()));
        break;
      case PKind::kAnd:
      case PKind::kOr: {
        std::vector<PresFormula> kids;
        for (const auto& k : f.children()) kids.push_back(run(k));
        r = f.kind() == PKind::kAnd ? PresFormula::conj(std::move(kids))
                                    : PresFormula::disj(std::move(kids));
        break;
      }
      case PKind::kExists:
        r = cooper_exists(f.var(), run(f.child()), limits_, stats_);
        break;
      case PKind::kForall:
        r = PresFormula::negate(cooper_exists(
            f.var(), PresFormula::negate(run(f.child())), limits_, stats_));
        break;
      default:
        r = f;
    }
    memo_.emplace(f.id(), r);
    return r;
  }

 private:
  const PresLimits& limits_;
  PresStats* stats_;
  std::unordered_map<const void*, PresFormula> memo_;
};

}  // namespace

PresFormula cooper_exists(const std::string& x, const PresFormula& body,
                          const PresLimits& limits, PresStats* stats) {
  return cooper_nnf(x, nnf(body, false), limits, stats);
}

PresFormula pres_qe(const PresFormula& f, const PresLimits& limits,
                    PresStats* stats) {
  if (stats) ++stats->qe_calls;
  Eliminator e(limits, stats);
  return e.run(f);
}

bool pres_decide(const PresFormula& f, const Assignment& a,
                 const PresLimits& limits) {
  PresFormula g = f;
  for (const auto& v : f.free_vars()) {
    auto it = a.find(v);
    if (it == a.end()) {
      throw InvalidArgument("unassigned Presburger variable '" + v + "'");
    }
    if (it->second < 0) {
      throw InvalidArgument("Presburger variables range over naturals");
    }
    g = substitute(g, v, LinTerm(it->second));
  }
  return eval_qf(pres_qe(g, limits), {});
}

BigInt witness_bound(const PresFormula& f, const Assignment& a) {
  if (f.kind() != PKind::kExists || !f.child().is_quantifier_free()) {
    throw InvalidArgument("witness_bound expects exists x. (quantifier-free)");
  }
  PresFormula body = nnf(f.child(), false);
  if (!body.has_free(f.var())) return 0;
  Cooper c(f.var(), PresLimits{});
  return c.bound(body, a);
}

// ------------------------------------------------------------ printing

namespace {

// Splits t = 0 into "positive side = negative side".
std::pair<std::string, std::string> sides(const LinTerm& t) {
  LinTerm pos, neg;
  for (const auto& [v, c] : t.coeffs()) {
    if (c > 0) {
      pos = pos + LinTerm::var(v, c);
    } else {
      neg = neg + LinTerm::var(v, -c);
    }
  }
  if (t.constant() > 0) pos = pos + LinTerm(t.constant());
  if (t.constant() < 0) neg = neg + LinTerm(-t.constant());
  return {pos.to_string(), neg.to_string()};
}

void print(const PresFormula& f, std::ostream& os);

void print_operand(const PresFormula& f, std::ostream& os) {
  bool wrap = f.kind() == PKind::kExists || f.kind() == PKind::kForall;
  if (wrap) os << '(';
  print(f, os);
  if (wrap) os << ')';
}

void print(const PresFormula& f, std::ostream& os) {
  switch (f.kind()) {
    case PKind::kConst:
      os << (f.value() ? "true" : "false");
      return;
    case PKind::kEq: {
      auto [l, r] = sides(f.term());
      os << l << " = " << r;
      return;
    }
    case PKind::kLe: {
      auto [l, r] = sides(f.term());
      os << l << " <= " << r;
      return;
    }
    case PKind::kDvd:
      os << f.modulus() << " | " << f.term().to_string();
      return;
    case PKind::kNot:
      os << '~';
      if (f.child().kind() == PKind::kDvd || f.child().kind() == PKind::kEq) {
        os << '(';
        print(f.child(), os);
        os << ')';
      } else {
        print_operand(f.child(), os);
      }
      return;
    case PKind::kAnd:
    case PKind::kOr: {
      const char* op = f.kind() == PKind::kAnd ? " /\\ " : " \\/ ";
      os << '(';
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) os << op;
        print_operand(f.children()[i], os);
      }
      os << ')';
      return;
    }
    case PKind::kExists:
    case PKind::kForall:
      os << (f.kind() == PKind::kExists ? "exists " : "forall ") << f.var()
         << ". ";
      print(f.child(), os);
      return;
  }
}

}  // namespace

std::string to_string(const PresFormula& f) {
  std::ostringstream os;
  print(f, os);
  return os.str();
}

}  // namespace skolem::pres
