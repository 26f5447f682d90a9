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

#include "skolem/qe.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skolem/counting.hpp"
#include "skolem/error.hpp"
#include "skolem/relativize.hpp"
#include "skolem/syntax.hpp"

namespace skolem {
namespace {

constexpr std::uint64_t kNoUpper = std::numeric_limits<std::uint64_t>::max();

// Constraint lo <= #[p: body] <= hi.
struct Lit {
  Formula body;
  std::uint64_t lo = 0;
  std::uint64_t hi = kNoUpper;
};

using Clause = std::vector<Lit>;
using Dnf = std::vector<Clause>;

// Adds lit to the clause; false when the clause becomes contradictory.
bool add_lit(Clause& c, const Lit& lit) {
  for (auto& l : c) {
    if (l.body == lit.body) {
      l.lo = std::max(l.lo, lit.lo);
      l.hi = std::min(l.hi, lit.hi);
      return l.lo <= l.hi;
    }
  }
  c.push_back(lit);
  return true;
}

void sort_clause(Clause& c) {
  std::stable_sort(c.begin(), c.end(), [](const Lit& a, const Lit& b) {
    return a.body.hash() < b.body.hash();
  });
}

bool same_clause(const Clause& a, const Clause& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].lo != b[i].lo || a[i].hi != b[i].hi || !(a[i].body == b[i].body)) {
      return false;
    }
  }
  return true;
}

// Whether every constraint of a is implied by b's (a is weaker).
bool weaker(const Clause& a, const Clause& b) {
  for (const auto& la : a) {
    bool implied = false;
    for (const auto& lb : b) {
      if (lb.body == la.body) {
        implied = lb.lo >= la.lo && lb.hi <= la.hi;
        break;
      }
    }
    if (!implied) return false;
  }
  return true;
}

class DnfBuilder {
 public:
  DnfBuilder(Engine& engine) : engine_(engine) {}

  Dnf build(const Formula& f) {
    Dnf d = dnf(f, false);
    return reduce(std::move(d));
  }

 private:
  Formula atom_body(const Formula& a) {
    const Formula& theta = a.child();
    if (theta.has_counting()) {
      throw InvalidArgument("counting atoms cannot be nested");
    }
    Formula body = a.var() == engine_.binder()
                       ? theta
                       : rename_free(theta, {{a.var(), engine_.binder()}});
    return engine_.canonical_body(body);
  }

  Dnf product(const Dnf& a, const Dnf& b) {
    Dnf out;
    for (const auto& ca : a) {
      for (const auto& cb : b) {
        Clause c = ca;
        bool ok = true;
        for (const auto& l : cb) {
          if (!add_lit(c, l)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        out.push_back(std::move(c));
        check(out.size());
      }
    }
    return reduce(std::move(out));
  }

  Dnf sum(Dnf a, const Dnf& b) {
    a.insert(a.end(), b.begin(), b.end());
    check(a.size());
    return a;
  }

  void check(std::size_t n) {
    if (n > engine_.options().dnf_limit) {
      throw ResourceError("disjunctive normal form exceeds " +
                          std::to_string(engine_.options().dnf_limit) +
                          " clauses");
    }
  }

  // Sorts literals, drops duplicate clauses and clauses implied by a weaker
  // one.
  Dnf reduce(Dnf d) {
    for (auto& c : d) sort_clause(c);
    std::stable_sort(d.begin(), d.end(), [](const Clause& a, const Clause& b) {
      return a.size() < b.size();
    });
    Dnf out;
    const bool absorb = d.size() <= 4000;
    for (auto& c : d) {
      bool redundant = false;
      for (const auto& o : out) {
        if (absorb ? weaker(o, c) : same_clause(o, c)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) out.push_back(std::move(c));
    }
    return out;
  }

  Dnf dnf(const Formula& f, bool neg) {
    switch (f.kind()) {
      case Kind::kConst:
        return f.value() != neg ? Dnf{Clause{}} : Dnf{};
      case Kind::kCountGE: {
        if (f.count() == 0) return neg ? Dnf{} : Dnf{Clause{}};
        Lit l{atom_body(f)};
        if (neg) {
          l.hi = f.count() - 1;
        } else {
          l.lo = f.count();
        }
        return Dnf{Clause{l}};
      }
      case Kind::kNot:
        return dnf(f.child(), !neg);
      case Kind::kAnd:
      case Kind::kOr: {
        const bool conj = (f.kind() == Kind::kAnd) != neg;
        Dnf acc = conj ? Dnf{Clause{}} : Dnf{};
        for (const auto& k : f.children()) {
          Dnf d = dnf(k, neg);
          acc = conj ? product(acc, d) : sum(std::move(acc), d);
        }
        return acc;
      }
      case Kind::kImplies:
        if (neg) return product(dnf(f.child(0), false), dnf(f.child(1), true));
        return sum(dnf(f.child(0), true), dnf(f.child(1), false));
      default:
        throw InvalidArgument("exists_step: matrix is not in counting normal "
                              "form");
    }
  }

  Engine& engine_;
};

Formula lit_formula(const Lit& l, Engine& engine) {
  Formula out = engine.count(l.lo, l.body);
  if (l.hi != kNoUpper) {
    out = mk_and(out, mk_not(engine.count(l.hi + 1, l.body)));
  }
  return out;
}

// Translation of the subset-existence conditions back to counting atoms.
class CardTranslator {
 public:
  CardTranslator(Engine& engine, std::string w) : e_(engine), w_(std::move(w)) {
    x_ = ExponentContext::exponent_var(w_);
  }

  void bind(const std::string& sym, const pres::PresFormula& q,
            const Formula& raw) {
    q_[sym] = q;
    raw_[sym] = raw;
  }

  Formula translate(const counting::CardExpr& e) {
    using counting::CardOp;
    switch (e.op()) {
      case CardOp::kConst:
        return Formula::truth(e.value());
      case CardOp::kCardGE:
        if (e_.options().compact_bodies) {
          return e_.count(e.bound(), e_.body_of(set_qf(e.set())));
        }
        return e_.count(e.bound(), set_raw(e.set()));
      case CardOp::kNot:
        return mk_not(translate(e.parts().front()));
      case CardOp::kAnd:
      case CardOp::kOr: {
        std::vector<Formula> kids;
        for (const auto& p : e.parts()) {
          kids.push_back(translate(p));
          // Short-circuit on the absorbing constant.
          if (kids.back().is_const(e.op() == CardOp::kOr)) return kids.back();
        }
        return e.op() == CardOp::kAnd ? mk_and(std::move(kids))
                                      : mk_or(std::move(kids));
      }
    }
    return Formula::truth(true);
  }

 private:
  pres::PresFormula set_qf(const counting::SetExpr& s) {
    using counting::SetOp;
    using pres::PresFormula;
    switch (s.op()) {
      case SetOp::kEmpty:
        return PresFormula::truth(false);
      case SetOp::kSym:
        return q_.at(s.name());
      case SetOp::kUnion:
      case SetOp::kInter: {
        std::vector<PresFormula> kids;
        for (const auto& p : s.parts()) kids.push_back(set_qf(p));
        return s.op() == SetOp::kUnion ? PresFormula::disj(std::move(kids))
                                       : PresFormula::conj(std::move(kids));
      }
      case SetOp::kDiff:
        return PresFormula::conj({set_qf(s.parts()[0]),
                                  PresFormula::negate(set_qf(s.parts()[1]))});
    }
    return PresFormula::truth(false);
  }

  Formula set_raw(const counting::SetExpr& s) {
    using counting::SetOp;
    switch (s.op()) {
      case SetOp::kEmpty:
        return Formula::truth(false);
      case SetOp::kSym:
        return raw_.at(s.name());
      case SetOp::kUnion:
      case SetOp::kInter: {
        std::vector<Formula> kids;
        for (const auto& p : s.parts()) kids.push_back(set_raw(p));
        return s.op() == SetOp::kUnion ? mk_or(std::move(kids))
                                       : mk_and(std::move(kids));
      }
      case SetOp::kDiff:
        return mk_and(set_raw(s.parts()[0]), mk_not(set_raw(s.parts()[1])));
    }
    return Formula::truth(false);
  }

  Engine& e_;
  std::string w_, x_;
  std::map<std::string, pres::PresFormula> q_;
  std::map<std::string, Formula> raw_;
};

// exists w over one inconsistent system.
Formula system_formula(const std::string& w,
                       const counting::InconsistentSystem& sys,
                       Engine& engine) {
  using pres::PresFormula;
  const std::string x = ExponentContext::exponent_var(w);
  CardTranslator tr(engine, w);
  std::vector<std::uint64_t> m, n;
  std::vector<PresFormula> exact_q;
  std::vector<Formula> exact_raw;
  std::vector<Formula> conds;
  for (std::size_t i = 0; i < sys.exact.size(); ++i) {
    const auto& c = sys.exact[i];
    PresFormula q = engine.qf(c.body);
    tr.bind(counting::s_symbol(i), engine.exists_exp(x, q),
            Formula::exists(w, c.body));
    exact_q.push_back(q);
    exact_raw.push_back(c.body);
    m.push_back(c.count);
    // The cell must hold at no prime outside the support of the
    // parameters, where every exponent is zero.
    Formula v = c.body;
    for (const auto& fv : c.body.free_vars()) {
      if (fv != engine.binder()) v = substitute(v, fv, Term());
    }
    conds.push_back(mk_not(engine.count(1, v)));
  }
  for (std::size_t j = 0; j < sys.atleast.size(); ++j) {
    const auto& c = sys.atleast[j];
    tr.bind(counting::t_symbol(j), engine.exists_exp(x, engine.qf(c.body)),
            Formula::exists(w, c.body));
    n.push_back(c.count);
  }
  const bool with_u = !sys.exact.empty();
  if (with_u) {
    PresFormula all = PresFormula::disj(exact_q);
    tr.bind(counting::kUSymbol,
            PresFormula::negate(engine.exists_exp(x, PresFormula::negate(all))),
            Formula::forall(w, mk_or(exact_raw)));
  }
  for (const auto& c : conds) {
    if (c.is_const(false)) return c;
  }
  counting::CardExpr b2 = counting::b2_express(m, n, with_u, engine.options().b2,
                                               engine.options().counting);
  conds.push_back(tr.translate(b2));
  return mk_and(std::move(conds));
}

}  // namespace

bool is_counting_normal_form(const Formula& f) {
  switch (f.kind()) {
    case Kind::kConst:
      return true;
    case Kind::kCountGE:
      return !f.child().has_counting() && !f.child().has_sugar();
    case Kind::kNot:
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
      return std::all_of(f.children().begin(), f.children().end(),
                         is_counting_normal_form);
    default:
      return false;
  }
}

Formula atomic_step(const Formula& atom, Engine& engine) {
  if (atom.kind() != Kind::kEq) {
    throw InvalidArgument("atomic_step: expected an equation");
  }
  return mk_not(engine.count(1, mk_not(atom)));
}

namespace {

std::string fresh_binder(const Formula& f, const std::string& extra = {}) {
  NameSupply names(all_vars(f));
  if (!extra.empty()) names.reserve(extra);
  return names.fresh("p");
}

}  // namespace

Formula atomic_step(const Formula& atom) {
  Engine engine;
  engine.set_binder(fresh_binder(atom));
  return atomic_step(atom, engine);
}

Formula exists_step(const std::string& w, const Formula& matrix,
                    Engine& engine) {
  if (!matrix.has_free(w)) {
    if (!is_counting_normal_form(matrix)) {
      throw InvalidArgument("exists_step: matrix is not in counting normal "
                            "form");
    }
    return matrix;
  }
  if (w == engine.binder()) {
    throw InvalidArgument("exists_step: variable clashes with the prime "
                          "binder");
  }
  if (const Formula* hit = engine.cached_exists(w, matrix)) return *hit;
  ++engine.stats().exists_steps;

  Dnf dnf = DnfBuilder(engine).build(matrix);
  engine.stats().dnf_size =
      std::max<std::uint64_t>(engine.stats().dnf_size, dnf.size());

  std::vector<Formula> disjuncts;
  for (const auto& clause : dnf) {
    std::vector<Formula> free_part;
    std::vector<Formula> zero_bodies;  // bodies bounded by 0: merged
    counting::CountingSystem sys;
    for (const auto& l : clause) {
      if (!l.body.has_free(w)) {
        free_part.push_back(lit_formula(l, engine));
      } else if (l.hi == 0) {
        zero_bodies.push_back(l.body);
      } else {
        if (l.hi != kNoUpper) sys.uppers.emplace_back(l.body, l.hi);
        if (l.lo > 0) sys.lowers.emplace_back(l.body, l.lo);
      }
    }
    if (!zero_bodies.empty()) {
      sys.uppers.emplace_back(engine.canonical_body(mk_or(zero_bodies)), 0);
    }
    Formula fixed = mk_and(free_part);
    if (fixed.is_const(false)) continue;

    std::vector<pres::PresFormula> qs;
    for (const auto& [b, k] : sys.uppers) qs.push_back(engine.qf(b));
    for (const auto& [b, k] : sys.lowers) qs.push_back(engine.qf(b));
    counting::CellFilter filter;
    if (engine.options().prune) {
      filter = [&](const std::vector<int>& signs, const Formula&) {
        std::vector<pres::PresFormula> parts;
        for (std::size_t i = 0; i < signs.size(); ++i) {
          parts.push_back(signs[i] ? qs[i] : pres::PresFormula::negate(qs[i]));
        }
        pres::PresFormula q = pres::PresFormula::conj(std::move(parts));
        if (!engine.satisfiable(q)) return counting::CellStatus::kEmpty;
        if (engine.generic(q)) return counting::CellStatus::kCofinite;
        return counting::CellStatus::kUnknown;
      };
    }
    std::vector<counting::InconsistentSystem> systems =
        counting::normalize_inconsistent(sys, filter,
                                         engine.options().counting);
    engine.stats().systems += systems.size();

    std::vector<Formula> alternatives;
    for (auto& s : systems) {
      for (auto& c : s.exact) c.body = engine.canonical_body(c.body);
      for (auto& c : s.atleast) c.body = engine.canonical_body(c.body);
      Formula f = system_formula(w, s, engine);
      if (f.is_const(true)) {
        alternatives = {f};
        break;
      }
      alternatives.push_back(std::move(f));
    }
    Formula out = mk_and(fixed, mk_or(std::move(alternatives)));
    if (out.is_const(true)) {
      disjuncts = {out};
      break;
    }
    disjuncts.push_back(std::move(out));
  }
  Formula result = mk_or(std::move(disjuncts));
  engine.store_exists(w, matrix, result);
  return result;
}

Formula exists_step(const std::string& w, const Formula& matrix) {
  Engine engine;
  engine.set_binder(fresh_binder(matrix, w));
  return exists_step(w, matrix, engine);
}

namespace {

class Eliminator {
 public:
  explicit Eliminator(Engine& engine) : e_(engine) {}

  Formula run(const Formula& f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    Formula out = step(f);
    memo_.emplace(f, out);
    return out;
  }

 private:
  Formula step(const Formula& f) {
    switch (f.kind()) {
      case Kind::kConst:
        return f;
      case Kind::kEq:
        return atomic_step(f, e_);
      case Kind::kNot:
        return mk_not(run(f.child()));
      case Kind::kAnd:
      case Kind::kOr: {
        std::vector<Formula> kids;
        for (const auto& k : f.children()) kids.push_back(run(k));
        return f.kind() == Kind::kAnd ? mk_and(std::move(kids))
                                      : mk_or(std::move(kids));
      }
      case Kind::kImplies:
        return mk_implies(run(f.child(0)), run(f.child(1)));
      case Kind::kExists:
        return exists_step(f.var(), run(f.child()), e_);
      case Kind::kForall:
        return mk_not(exists_step(f.var(), mk_not(run(f.child())), e_));
      case Kind::kCountGE: {
        if (f.child().has_counting()) {
          throw InvalidArgument("counting atoms cannot be nested");
        }
        Formula body = f.var() == e_.binder()
                           ? f.child()
                           : rename_free(f.child(), {{f.var(), e_.binder()}});
        return e_.count(f.count(), body);
      }
      default:
        throw InvalidArgument("eliminate: unexpanded sugar");
    }
  }

  Engine& e_;
  std::unordered_map<Formula, Formula, FormulaHash> memo_;
};

}  // namespace

Formula eliminate(const Formula& f, Engine& engine) {
  Formula g = rename_apart(desugar(f));
  engine.set_binder(fresh_binder(g));
  return Eliminator(engine).run(g);
}

Formula eliminate(const Formula& f, const EngineOptions& options) {
  Engine engine(options);
  return eliminate(f, engine);
}

Formula simplify(const Formula& nf, Engine& engine) {
  switch (nf.kind()) {
    case Kind::kConst:
      return nf;
    case Kind::kCountGE: {
      Formula body = nf.var() == engine.binder()
                         ? nf.child()
                         : rename_free(nf.child(), {{nf.var(), engine.binder()}});
      return engine.count(nf.count(), body);
    }
    case Kind::kNot:
      return mk_not(simplify(nf.child(), engine));
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<Formula> kids;
      for (const auto& k : nf.children()) kids.push_back(simplify(k, engine));
      return nf.kind() == Kind::kAnd ? mk_and(std::move(kids))
                                     : mk_or(std::move(kids));
    }
    case Kind::kImplies:
      return mk_implies(simplify(nf.child(0), engine),
                        simplify(nf.child(1), engine));
    default:
      throw InvalidArgument("simplify: expected a counting normal form");
  }
}

}  // namespace skolem
