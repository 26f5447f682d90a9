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

// Counting systems: recombination of counting constraints into systems over
// pairwise-inconsistent bodies, and the subset-existence conditions on prime
// sets expressed as Boolean combinations of cardinality constraints.

#ifndef SKOLEM_COUNTING_HPP_
#define SKOLEM_COUNTING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skolem/formula.hpp"

namespace skolem::counting {

// Conjunction of uppers theta_i^{<= m_i} and lowers psi_j^{>= n_j}.
struct CountingSystem {
  std::vector<std::pair<Formula, std::uint64_t>> uppers;
  std::vector<std::pair<Formula, std::uint64_t>> lowers;
};

// A body of an inconsistent system: signs[i] says whether the i-th input
// body (uppers first, then lowers) occurs positively (1) or negated (0).
struct Cell {
  std::vector<int> signs;
  Formula body;
  std::uint64_t count = 0;
};

// Conjunction of exact constraints (body^{= count}) and lower bounds
// (body^{>= count}) whose bodies are pairwise inconsistent at every prime.
struct InconsistentSystem {
  std::vector<Cell> exact;
  std::vector<Cell> atleast;
};

// What is known about a cell at a given parameter tuple: nothing, that it
// holds at no prime, or that it holds at all but finitely many primes.
enum class CellStatus { kUnknown, kEmpty, kCofinite };
using CellFilter =
    std::function<CellStatus(const std::vector<int>& signs, const Formula&)>;

struct CountingLimits {
  // Largest number of systems normalize_inconsistent may emit.
  std::size_t max_systems = 200'000;
  // Largest number of allocations the allocation form of b2_express visits.
  std::size_t max_allocations = 2'000'000;
};

// Rewrites the system into an equivalent disjunction of inconsistent
// systems. Cells reported empty by the filter are dropped; exact cells
// reported cofinite make a system unsatisfiable.
std::vector<InconsistentSystem> normalize_inconsistent(
    const CountingSystem& sys, const CellFilter& filter = {},
    const CountingLimits& limits = {});

// ------------------------------------------------------------ set algebra

enum class SetOp { kEmpty, kSym, kUnion, kInter, kDiff };

// Boolean combination of named sets, without absolute complement.
class SetExpr {
 public:
  SetExpr();  // the empty set
  static SetExpr sym(const std::string& name);
  static SetExpr unite(std::vector<SetExpr> parts);
  static SetExpr inter(std::vector<SetExpr> parts);
  static SetExpr diff(const SetExpr& a, const SetExpr& b);

  SetOp op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const std::vector<SetExpr>& parts() const { return node_->parts; }
  std::string to_string() const;

 private:
  struct Node {
    SetOp op = SetOp::kEmpty;
    std::string name;
    std::vector<SetExpr> parts;
  };
  explicit SetExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class CardOp { kConst, kCardGE, kNot, kAnd, kOr };

// Boolean combination of constraints |X| >= c.
class CardExpr {
 public:
  CardExpr();  // true
  static CardExpr truth(bool v);
  static CardExpr card_ge(const SetExpr& set, std::uint64_t c);
  static CardExpr negate(const CardExpr& e);
  static CardExpr conj(std::vector<CardExpr> parts);
  static CardExpr disj(std::vector<CardExpr> parts);

  CardOp op() const { return node_->op; }
  bool value() const { return node_->value; }
  const SetExpr& set() const { return node_->set; }
  std::uint64_t bound() const { return node_->bound; }
  const std::vector<CardExpr>& parts() const { return node_->parts; }
  std::string to_string() const;
  // Largest constant c over all leaves.
  std::uint64_t max_bound() const;
  std::size_t leaf_count() const;

 private:
  struct Node {
    CardOp op = CardOp::kConst;
    bool value = true;
    SetExpr set;
    std::uint64_t bound = 0;
    std::vector<CardExpr> parts;
  };
  explicit CardExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Symbol names used by b2_express.
std::string s_symbol(std::size_t i);  // "S1", "S2", ...
std::string t_symbol(std::size_t j);  // "T1", ...
inline const char* kUSymbol = "U";

enum class B2Method {
  // Hall-type conditions (one per subset of demands): polynomially many in
  // the number of sets' subsets, independent of the demands' size.
  kHall,
  // Enumeration of per-atom allocations of the demands.
  kAllocation,
};

// An expression over S1..Sk, T1..Tl (and U when with_u) that holds iff there
// are pairwise disjoint P_i in S_i with |P_i| = m_i and Q_j in T_j with
// |Q_j| = n_j whose P-part covers U.
CardExpr b2_express(const std::vector<std::uint64_t>& m,
                    const std::vector<std::uint64_t>& n, bool with_u,
                    B2Method method = B2Method::kHall,
                    const CountingLimits& limits = {});

using FiniteSet = std::set<int>;

// Evaluates with every symbol bound to an explicit finite set. Throws
// InvalidArgument on an unbound symbol.
bool eval_card_expr(const CardExpr& e,
                    const std::map<std::string, FiniteSet>& binding);
// Same over bitmask-encoded sets (universe of at most 64 elements).
bool eval_card_expr(const CardExpr& e,
                    const std::map<std::string, std::uint64_t>& binding);

// Brute-force existence of the subsets P_i, Q_j over explicit finite sets
// given as bitmasks. Throws ResourceError beyond 16 universe elements.
bool b2_check_concrete(const std::vector<std::uint64_t>& s,
                       const std::vector<std::uint64_t>& t, std::uint64_t u,
                       const std::vector<std::uint64_t>& m,
                       const std::vector<std::uint64_t>& n);

// All demand vectors (m_1..m_k, n_1..n_l), each entry at most max_demand,
// for which b2_check_concrete holds; one brute-force pass over element
// assignments.
std::set<std::vector<std::uint64_t>> b2_feasible_demands(
    const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& t,
    std::uint64_t u, std::uint64_t max_demand);

}  // namespace skolem::counting

#endif  // SKOLEM_COUNTING_HPP_
