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

#include "skolem/counting.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "skolem/error.hpp"

namespace skolem::counting {

// ------------------------------------------------ system normalization

namespace {

struct CellPlan {
  std::vector<int> signs;
  Formula body;
  bool exact = true;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

class SystemEnumerator {
 public:
  SystemEnumerator(const CountingSystem& sys, std::vector<CellPlan> cells,
                   const CountingLimits& limits)
      : sys_(sys), cells_(std::move(cells)), limits_(limits),
        k_(sys.uppers.size()), l_(sys.lowers.size()),
        upper_sum_(k_, 0), lower_sum_(l_, 0), value_(cells_.size(), 0) {}

  std::vector<InconsistentSystem> run() {
    dfs(0);
    return std::move(out_);
  }

 private:
  void dfs(std::size_t idx) {
    if (idx == cells_.size()) {
      for (std::size_t j = 0; j < l_; ++j) {
        if (lower_sum_[j] < sys_.lowers[j].second) return;
      }
      emit();
      return;
    }
    const CellPlan& c = cells_[idx];
    for (std::uint64_t v = c.lo; v <= c.hi; ++v) {
      bool ok = true;
      for (std::size_t i = 0; i < k_; ++i) {
        if (c.signs[i] && upper_sum_[i] + v > sys_.uppers[i].second) ok = false;
      }
      if (!ok) break;  // sums only grow with v
      for (std::size_t i = 0; i < k_; ++i) {
        if (c.signs[i]) upper_sum_[i] += v;
      }
      for (std::size_t j = 0; j < l_; ++j) {
        if (c.signs[k_ + j]) lower_sum_[j] += v;
      }
      value_[idx] = v;
      dfs(idx + 1);
      for (std::size_t i = 0; i < k_; ++i) {
        if (c.signs[i]) upper_sum_[i] -= v;
      }
      for (std::size_t j = 0; j < l_; ++j) {
        if (c.signs[k_ + j]) lower_sum_[j] -= v;
      }
    }
  }

  void emit() {
    if (out_.size() >= limits_.max_systems) {
      throw ResourceError("counting normalization exceeds " +
                          std::to_string(limits_.max_systems) + " systems");
    }
    InconsistentSystem s;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const CellPlan& c = cells_[i];
      if (c.exact) {
        s.exact.push_back({c.signs, c.body, value_[i]});
      } else if (value_[i] > 0) {
        s.atleast.push_back({c.signs, c.body, value_[i]});
      }
    }
    out_.push_back(std::move(s));
  }

  const CountingSystem& sys_;
  std::vector<CellPlan> cells_;
  const CountingLimits& limits_;
  std::size_t k_, l_;
  std::vector<std::uint64_t> upper_sum_, lower_sum_, value_;
  std::vector<InconsistentSystem> out_;
};

}  // namespace

std::vector<InconsistentSystem> normalize_inconsistent(
    const CountingSystem& sys, const CellFilter& filter,
    const CountingLimits& limits) {
  const std::size_t k = sys.uppers.size();
  const std::size_t l = sys.lowers.size();
  if (k + l >= 20) throw ResourceError("too many counting constraints");
  std::vector<Formula> bodies;
  for (const auto& [b, m] : sys.uppers) {
    if (b.has_counting()) throw InvalidArgument("nested counting atom");
    bodies.push_back(b);
  }
  for (const auto& [b, n] : sys.lowers) {
    if (b.has_counting()) throw InvalidArgument("nested counting atom");
    bodies.push_back(b);
  }

  std::vector<CellPlan> exact, atleast;
  const std::uint64_t full = std::uint64_t{1} << (k + l);
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    CellPlan c;
    std::vector<Formula> lits;
    bool any_upper = false;
    for (std::size_t b = 0; b < k + l; ++b) {
      int s = static_cast<int>((mask >> b) & 1);
      c.signs.push_back(s);
      lits.push_back(s ? bodies[b] : mk_not(bodies[b]));
      if (s && b < k) any_upper = true;
    }
    c.body = lits.size() == 1 ? lits.front() : mk_and(std::move(lits));
    c.exact = any_upper;
    if (c.exact) {
      // f(cell) <= m_i for every upper body occurring positively.
      std::uint64_t hi = UINT64_MAX;
      for (std::size_t i = 0; i < k; ++i) {
        if (c.signs[i]) hi = std::min(hi, sys.uppers[i].second);
      }
      c.hi = hi;
    } else {
      // Lower cells never need more than the largest demand they serve.
      std::uint64_t hi = 0;
      for (std::size_t j = 0; j < l; ++j) {
        if (c.signs[k + j]) hi = std::max(hi, sys.lowers[j].second);
      }
      c.hi = hi;
    }
    CellStatus st = filter ? filter(c.signs, c.body) : CellStatus::kUnknown;
    if (st == CellStatus::kEmpty) continue;
    if (st == CellStatus::kCofinite) {
      // A cofinite set has no finite exact size; as a lower cell it meets
      // every bound, so only the largest useful value is kept.
      if (c.exact) return {};
      c.lo = c.hi;
    }
    (c.exact ? exact : atleast).push_back(std::move(c));
  }
  std::vector<CellPlan> cells = std::move(exact);
  for (auto& c : atleast) cells.push_back(std::move(c));
  SystemEnumerator e(sys, std::move(cells), limits);
  return e.run();
}

// ------------------------------------------------------------ SetExpr

SetExpr::SetExpr() : node_(std::make_shared<const Node>()) {}

SetExpr SetExpr::sym(const std::string& name) {
  Node n;
  n.op = SetOp::kSym;
  n.name = name;
  return SetExpr(std::make_shared<const Node>(std::move(n)));
}

SetExpr SetExpr::unite(std::vector<SetExpr> parts) {
  std::vector<SetExpr> flat;
  for (auto& p : parts) {
    if (p.op() == SetOp::kEmpty) continue;
    if (p.op() == SetOp::kUnion) {
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return SetExpr();
  if (flat.size() == 1) return flat.front();
  Node n;
  n.op = SetOp::kUnion;
  n.parts = std::move(flat);
  return SetExpr(std::make_shared<const Node>(std::move(n)));
}

SetExpr SetExpr::inter(std::vector<SetExpr> parts) {
  std::vector<SetExpr> flat;
  for (auto& p : parts) {
    if (p.op() == SetOp::kEmpty) return SetExpr();
    if (p.op() == SetOp::kInter) {
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) {
    throw InvalidArgument("intersection of no sets is not expressible");
  }
  if (flat.size() == 1) return flat.front();
  Node n;
  n.op = SetOp::kInter;
  n.parts = std::move(flat);
  return SetExpr(std::make_shared<const Node>(std::move(n)));
}

SetExpr SetExpr::diff(const SetExpr& a, const SetExpr& b) {
  if (a.op() == SetOp::kEmpty || b.op() == SetOp::kEmpty) return a;
  Node n;
  n.op = SetOp::kDiff;
  n.parts = {a, b};
  return SetExpr(std::make_shared<const Node>(std::move(n)));
}

std::string SetExpr::to_string() const {
  switch (op()) {
    case SetOp::kEmpty:
      return "{}";
    case SetOp::kSym:
      return name();
    case SetOp::kUnion:
    case SetOp::kInter: {
      std::string sep = op() == SetOp::kUnion ? " | " : " & ";
      std::string r = "(";
      for (std::size_t i = 0; i < parts().size(); ++i) {
        if (i) r += sep;
        r += parts()[i].to_string();
      }
      return r + ")";
    }
    case SetOp::kDiff:
      return "(" + parts()[0].to_string() + " \\ " + parts()[1].to_string() +
             ")";
  }
  return "?";
}

// ------------------------------------------------------------ CardExpr

CardExpr::CardExpr() : node_(std::make_shared<const Node>()) {}

CardExpr CardExpr::truth(bool v) {
  Node n;
  n.value = v;
  return CardExpr(std::make_shared<const Node>(std::move(n)));
}

CardExpr CardExpr::card_ge(const SetExpr& set, std::uint64_t c) {
  if (c == 0) return truth(true);
  if (set.op() == SetOp::kEmpty) return truth(false);
  Node n;
  n.op = CardOp::kCardGE;
  n.set = set;
  n.bound = c;
  return CardExpr(std::make_shared<const Node>(std::move(n)));
}

CardExpr CardExpr::negate(const CardExpr& e) {
  if (e.op() == CardOp::kConst) return truth(!e.value());
  if (e.op() == CardOp::kNot) return e.parts().front();
  Node n;
  n.op = CardOp::kNot;
  n.parts = {e};
  return CardExpr(std::make_shared<const Node>(std::move(n)));
}

namespace {

CardExpr junction(CardOp op, std::vector<CardExpr> parts,
                  CardExpr (*build)(CardOp, std::vector<CardExpr>)) {
  const bool is_and = op == CardOp::kAnd;
  std::vector<CardExpr> flat;
  for (auto& p : parts) {
    if (p.op() == CardOp::kConst) {
      if (p.value() != is_and) return CardExpr::truth(!is_and);
      continue;
    }
    if (p.op() == op) {
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return CardExpr::truth(is_and);
  if (flat.size() == 1) return flat.front();
  return build(op, std::move(flat));
}

}  // namespace

CardExpr CardExpr::conj(std::vector<CardExpr> parts) {
  return junction(CardOp::kAnd, std::move(parts),
                  [](CardOp op, std::vector<CardExpr> p) {
                    Node n;
                    n.op = op;
                    n.parts = std::move(p);
                    return CardExpr(std::make_shared<const Node>(std::move(n)));
                  });
}

CardExpr CardExpr::disj(std::vector<CardExpr> parts) {
  return junction(CardOp::kOr, std::move(parts),
                  [](CardOp op, std::vector<CardExpr> p) {
                    Node n;
                    n.op = op;
                    n.parts = std::move(p);
                    return CardExpr(std::make_shared<const Node>(std::move(n)));
                  });
}

std::string CardExpr::to_string() const {
  switch (op()) {
    case CardOp::kConst:
      return value() ? "true" : "false";
    case CardOp::kCardGE: {
      std::string s = set().to_string();
      if (s.size() > 1 && s.front() == '(') s = s.substr(1, s.size() - 2);
      return "|" + s + "| >= " + std::to_string(bound());
    }
    case CardOp::kNot:
      return "~" + (parts()[0].op() == CardOp::kCardGE
                        ? "(" + parts()[0].to_string() + ")"
                        : parts()[0].to_string());
    case CardOp::kAnd:
    case CardOp::kOr: {
      std::string sep = op() == CardOp::kAnd ? " /\\ " : " \\/ ";
      std::string r = "(";
      for (std::size_t i = 0; i < parts().size(); ++i) {
        if (i) r += sep;
        r += parts()[i].to_string();
      }
      return r + ")";
    }
  }
  return "?";
}

std::uint64_t CardExpr::max_bound() const {
  std::uint64_t b = op() == CardOp::kCardGE ? bound() : 0;
  for (const auto& p : parts()) b = std::max(b, p.max_bound());
  return b;
}

std::size_t CardExpr::leaf_count() const {
  if (op() == CardOp::kCardGE || op() == CardOp::kConst) return 1;
  std::size_t n = 0;
  for (const auto& p : parts()) n += p.leaf_count();
  return n;
}

std::string s_symbol(std::size_t i) { return "S" + std::to_string(i + 1); }
std::string t_symbol(std::size_t j) { return "T" + std::to_string(j + 1); }

// ---------------------------------------- subset-existence conditions

namespace {

// Hall conditions. Demands are realized by a matching of elements to demand
// slots; a matching covering every slot exists iff each family of sinks sees
// enough elements, one covering U (whose elements may only serve the P_i)
// exists iff few enough elements of U are confined to any family of P_i, and
// two such matchings combine into one covering both (Mendelsohn-Dulmage).
CardExpr b2_hall(const std::vector<std::uint64_t>& m,
                 const std::vector<std::uint64_t>& n, bool with_u) {
  const std::size_t k = m.size(), l = n.size();
  SetExpr u = SetExpr::sym(kUSymbol);
  struct Sink {
    SetExpr reach;
    std::uint64_t demand;
  };
  std::vector<Sink> sinks;
  for (std::size_t i = 0; i < k; ++i) {
    if (m[i] > 0) sinks.push_back({SetExpr::sym(s_symbol(i)), m[i]});
  }
  for (std::size_t j = 0; j < l; ++j) {
    if (n[j] == 0) continue;
    SetExpr t = SetExpr::sym(t_symbol(j));
    sinks.push_back({with_u ? SetExpr::diff(t, u) : t, n[j]});
  }
  if (sinks.size() >= 24) throw ResourceError("too many demands");
  std::vector<CardExpr> conds;
  for (std::uint64_t y = 1; y < (std::uint64_t{1} << sinks.size()); ++y) {
    std::vector<SetExpr> reach;
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < sinks.size(); ++s) {
      if ((y >> s) & 1) {
        reach.push_back(sinks[s].reach);
        total += sinks[s].demand;
      }
    }
    conds.push_back(CardExpr::card_ge(SetExpr::unite(std::move(reach)), total));
  }
  if (with_u) {
    // Families I of P-indices; zero-demand indices only enlarge the confined
    // part of U without adding capacity, so they are always in I.
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < k; ++i) {
      if (m[i] > 0) pos.push_back(i);
    }
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << pos.size()); ++sel) {
      std::vector<SetExpr> outside;
      std::uint64_t cap = 0;
      for (std::size_t q = 0; q < pos.size(); ++q) {
        if ((sel >> q) & 1) {
          cap += m[pos[q]];
        } else {
          outside.push_back(SetExpr::sym(s_symbol(pos[q])));
        }
      }
      SetExpr confined = SetExpr::diff(u, SetExpr::unite(std::move(outside)));
      conds.push_back(CardExpr::negate(CardExpr::card_ge(confined, cap + 1)));
    }
  }
  return CardExpr::conj(std::move(conds));
}

class Allocator {
 public:
  Allocator(const std::vector<std::uint64_t>& m,
            const std::vector<std::uint64_t>& n, bool with_u,
            const CountingLimits& limits)
      : m_(m), n_(n), with_u_(with_u), limits_(limits) {
    k_ = m.size();
    l_ = n.size();
    syms_ = k_ + l_ + (with_u ? 1 : 0);
    if (syms_ > 12) throw ResourceError("too many set symbols");
    atoms_ = std::size_t{1} << syms_;
    total_.assign(atoms_, 0);
    ptotal_.assign(atoms_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      sinks_.push_back({allowed(i, false), m[i], true});
    }
    for (std::size_t j = 0; j < l_; ++j) {
      sinks_.push_back({allowed(k_ + j, true), n[j], false});
    }
  }

  CardExpr run() {
    sink(0);
    std::vector<CardExpr> out;
    for (const auto& key : keys_) out.push_back(render(key));
    return CardExpr::disj(std::move(out));
  }

 private:
  struct Sink {
    std::vector<std::size_t> atoms;
    std::uint64_t demand;
    bool is_p;
  };

  bool in_u(std::size_t a) const {
    return with_u_ && ((a >> (syms_ - 1)) & 1);
  }

  std::vector<std::size_t> allowed(std::size_t bit, bool exclude_u) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 1; a < atoms_; ++a) {
      if (((a >> bit) & 1) && !(exclude_u && in_u(a))) out.push_back(a);
    }
    return out;
  }

  void sink(std::size_t s) {
    if (s == sinks_.size()) {
      if (++visited_ > limits_.max_allocations) {
        throw ResourceError("allocation enumeration exceeds " +
                            std::to_string(limits_.max_allocations));
      }
      std::vector<std::uint64_t> key = total_;
      for (std::size_t a = 0; a < atoms_; ++a) {
        key.push_back(in_u(a) ? ptotal_[a] : 0);
      }
      keys_.insert(std::move(key));
      return;
    }
    draw(s, 0, sinks_[s].demand);
  }

  // Distributes `left` units of sink s over its atoms from index pos on.
  void draw(std::size_t s, std::size_t pos, std::uint64_t left) {
    const Sink& sk = sinks_[s];
    if (left == 0) {
      sink(s + 1);
      return;
    }
    if (pos == sk.atoms.size()) return;
    std::size_t a = sk.atoms[pos];
    for (std::uint64_t take = 0; take <= left; ++take) {
      total_[a] += take;
      if (sk.is_p) ptotal_[a] += take;
      draw(s, pos + 1, left - take);
      total_[a] -= take;
      if (sk.is_p) ptotal_[a] -= take;
    }
  }

  SetExpr atom_set(std::size_t a) const {
    std::vector<SetExpr> pos, neg;
    for (std::size_t b = 0; b < syms_; ++b) {
      SetExpr sym = SetExpr::sym(symbol(b));
      (((a >> b) & 1) ? pos : neg).push_back(sym);
    }
    return SetExpr::diff(SetExpr::inter(std::move(pos)),
                         SetExpr::unite(std::move(neg)));
  }

  std::string symbol(std::size_t b) const {
    if (b < k_) return s_symbol(b);
    if (b < k_ + l_) return t_symbol(b - k_);
    return kUSymbol;
  }

  CardExpr render(const std::vector<std::uint64_t>& key) const {
    std::vector<CardExpr> parts;
    for (std::size_t a = 1; a < atoms_; ++a) {
      SetExpr set = atom_set(a);
      if (in_u(a)) {
        std::uint64_t c = key[atoms_ + a];
        parts.push_back(CardExpr::card_ge(set, c));
        parts.push_back(CardExpr::negate(CardExpr::card_ge(set, c + 1)));
      } else if (key[a] > 0) {
        parts.push_back(CardExpr::card_ge(set, key[a]));
      }
    }
    return CardExpr::conj(std::move(parts));
  }

  const std::vector<std::uint64_t>& m_;
  const std::vector<std::uint64_t>& n_;
  bool with_u_;
  const CountingLimits& limits_;
  std::size_t k_ = 0, l_ = 0, syms_ = 0, atoms_ = 0;
  std::vector<Sink> sinks_;
  std::vector<std::uint64_t> total_, ptotal_;
  std::set<std::vector<std::uint64_t>> keys_;
  std::size_t visited_ = 0;
};

}  // namespace

CardExpr b2_express(const std::vector<std::uint64_t>& m,
                    const std::vector<std::uint64_t>& n, bool with_u,
                    B2Method method, const CountingLimits& limits) {
  if (method == B2Method::kHall) return b2_hall(m, n, with_u);
  Allocator a(m, n, with_u, limits);
  return a.run();
}

// ------------------------------------------------------------ evaluation

namespace {

template <typename Set, typename Ops>
Set eval_set(const SetExpr& x, const std::map<std::string, Set>& binding,
             const Ops& ops) {
  switch (x.op()) {
    case SetOp::kEmpty:
      return ops.empty();
    case SetOp::kSym: {
      auto it = binding.find(x.name());
      if (it == binding.end()) {
        throw InvalidArgument("unbound set symbol '" + x.name() + "'");
      }
      return it->second;
    }
    case SetOp::kUnion: {
      Set r = ops.empty();
      for (const auto& p : x.parts()) r = ops.unite(r, eval_set(p, binding, ops));
      return r;
    }
    case SetOp::kInter: {
      Set r = eval_set(x.parts()[0], binding, ops);
      for (std::size_t i = 1; i < x.parts().size(); ++i) {
        r = ops.inter(r, eval_set(x.parts()[i], binding, ops));
      }
      return r;
    }
    case SetOp::kDiff:
      return ops.diff(eval_set(x.parts()[0], binding, ops),
                      eval_set(x.parts()[1], binding, ops));
  }
  return ops.empty();
}

template <typename Set, typename Ops>
bool eval_card(const CardExpr& e, const std::map<std::string, Set>& binding,
               const Ops& ops) {
  switch (e.op()) {
    case CardOp::kConst:
      return e.value();
    case CardOp::kCardGE:
      return ops.size(eval_set(e.set(), binding, ops)) >= e.bound();
    case CardOp::kNot:
      return !eval_card(e.parts()[0], binding, ops);
    case CardOp::kAnd:
      for (const auto& p : e.parts()) {
        if (!eval_card(p, binding, ops)) return false;
      }
      return true;
    case CardOp::kOr:
      for (const auto& p : e.parts()) {
        if (eval_card(p, binding, ops)) return true;
      }
      return false;
  }
  return false;
}

struct MaskOps {
  std::uint64_t empty() const { return 0; }
  std::uint64_t unite(std::uint64_t a, std::uint64_t b) const { return a | b; }
  std::uint64_t inter(std::uint64_t a, std::uint64_t b) const { return a & b; }
  std::uint64_t diff(std::uint64_t a, std::uint64_t b) const { return a & ~b; }
  std::uint64_t size(std::uint64_t a) const { return std::popcount(a); }
};

struct SetOps {
  FiniteSet empty() const { return {}; }
  FiniteSet unite(const FiniteSet& a, const FiniteSet& b) const {
    FiniteSet r = a;
    r.insert(b.begin(), b.end());
    return r;
  }
  FiniteSet inter(const FiniteSet& a, const FiniteSet& b) const {
    FiniteSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(r, r.end()));
    return r;
  }
  FiniteSet diff(const FiniteSet& a, const FiniteSet& b) const {
    FiniteSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(r, r.end()));
    return r;
  }
  std::uint64_t size(const FiniteSet& a) const { return a.size(); }
};

// Depth-first assignment of universe elements to sinks (index 0 = none).
class Assigner {
 public:
  Assigner(const std::vector<std::uint64_t>& s,
           const std::vector<std::uint64_t>& t, std::uint64_t u,
           std::vector<std::uint64_t> cap)
      : s_(s), t_(t), u_(u), cap_(std::move(cap)), count_(cap_.size(), 0) {
    std::uint64_t all = u;
    for (auto x : s) all |= x;
    for (auto x : t) all |= x;
    for (int e = 0; e < 64; ++e) {
      if ((all >> e) & 1) elems_.push_back(e);
    }
    if (elems_.size() > 16) {
      throw ResourceError("brute-force subset search is capped at 16 elements");
    }
  }

  template <typename Leaf>
  bool run(const Leaf& leaf) {
    return dfs(0, leaf);
  }

  const std::vector<std::uint64_t>& count() const { return count_; }

 private:
  template <typename Leaf>
  bool dfs(std::size_t idx, const Leaf& leaf) {
    if (idx == elems_.size()) return leaf(count_);
    const std::uint64_t bit = std::uint64_t{1} << elems_[idx];
    const bool in_u = (u_ & bit) != 0;
    if (!in_u && dfs(idx + 1, leaf)) return true;
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if ((s_[i] & bit) && count_[i] < cap_[i]) {
        ++count_[i];
        bool done = dfs(idx + 1, leaf);
        --count_[i];
        if (done) return true;
      }
    }
    if (in_u) return false;
    for (std::size_t j = 0; j < t_.size(); ++j) {
      std::size_t slot = s_.size() + j;
      if ((t_[j] & bit) && count_[slot] < cap_[slot]) {
        ++count_[slot];
        bool done = dfs(idx + 1, leaf);
        --count_[slot];
        if (done) return true;
      }
    }
    return false;
  }

  const std::vector<std::uint64_t>& s_;
  const std::vector<std::uint64_t>& t_;
  std::uint64_t u_;
  std::vector<std::uint64_t> cap_;
  std::vector<std::uint64_t> count_;
  std::vector<int> elems_;
};

}  // namespace

bool eval_card_expr(const CardExpr& e,
                    const std::map<std::string, FiniteSet>& binding) {
  return eval_card(e, binding, SetOps{});
}

bool eval_card_expr(const CardExpr& e,
                    const std::map<std::string, std::uint64_t>& binding) {
  return eval_card(e, binding, MaskOps{});
}

bool b2_check_concrete(const std::vector<std::uint64_t>& s,
                       const std::vector<std::uint64_t>& t, std::uint64_t u,
                       const std::vector<std::uint64_t>& m,
                       const std::vector<std::uint64_t>& n) {
  if (s.size() != m.size() || t.size() != n.size()) {
    throw InvalidArgument("b2_check_concrete: sets and demands differ in number");
  }
  std::vector<std::uint64_t> want = m;
  want.insert(want.end(), n.begin(), n.end());
  Assigner a(s, t, u, want);
  return a.run([&](const std::vector<std::uint64_t>& c) { return c == want; });
}

std::set<std::vector<std::uint64_t>> b2_feasible_demands(
    const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& t,
    std::uint64_t u, std::uint64_t max_demand) {
  std::set<std::vector<std::uint64_t>> out;
  Assigner a(s, t, u,
             std::vector<std::uint64_t>(s.size() + t.size(), max_demand));
  a.run([&](const std::vector<std::uint64_t>& c) {
    out.insert(c);
    return false;
  });
  return out;
}

}  // namespace skolem::counting
