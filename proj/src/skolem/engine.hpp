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

// Shared state of the elimination pipeline: options, resource caps,
// statistics and the caches that make repeated work cheap. Each body of a
// counting atom is interpreted through its relativization, which is turned
// into quantifier-free Presburger arithmetic once and memoized.

#ifndef SKOLEM_ENGINE_HPP_
#define SKOLEM_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "skolem/counting.hpp"
#include "skolem/formula.hpp"
#include "skolem/presburger.hpp"

namespace skolem {

struct EngineOptions {
  // Largest disjunctive normal form (clauses) built for one quantifier.
  std::size_t dnf_limit = 50'000;
  pres::PresLimits pres;
  counting::CountingLimits counting;
  counting::B2Method b2 = counting::B2Method::kHall;
  // Decide each new counting atom's body once: atoms whose body holds at no
  // prime or at every prime outside the parameters' support fold to
  // constants, and empty or cofinite cells are pruned early.
  bool prune = true;
  // Replace each body by a formula re-synthesized from its quantifier-free
  // relativization (equations, divisibility, congruences between exponents).
  bool compact_bodies = true;
};

struct EngineStats {
  std::uint64_t presburger_calls = 0;
  std::uint64_t dnf_size = 0;  // largest DNF seen
  std::uint64_t systems = 0;   // inconsistent systems processed
  std::uint64_t exists_steps = 0;
};

// Reads "dnf=N,pres=N,systems=N,alloc=N" style overrides (the format of the
// SKOLEM_CAPS environment variable). Throws InvalidArgument.
void apply_caps(EngineOptions& opts, const std::string& caps);

class Engine {
 public:
  explicit Engine(EngineOptions opts = {});

  const EngineOptions& options() const { return opts_; }
  EngineOptions& mutable_options() { return opts_; }
  const EngineStats& stats() const { return stats_; }
  EngineStats& stats() { return stats_; }

  // Name of the variable standing for the prime in counting atoms built by
  // this engine.
  const std::string& binder() const { return binder_; }
  void set_binder(std::string b) {
    if (b != binder_) {
      body_cache_.clear();
      exists_cache_.clear();
    }
    binder_ = std::move(b);
  }

  // Quantifier-free relativization of a counting-free body, with `binder`
  // pinned to exponent 1 and every other free variable v mapped to x_v.
  const pres::PresFormula& qf(const Formula& body, const std::string& binder);
  const pres::PresFormula& qf(const Formula& body) { return qf(body, binder_); }

  // exists x. q, eliminated.
  pres::PresFormula exists_exp(const std::string& x, const pres::PresFormula& q);
  // Whether q holds for some exponents.
  bool satisfiable(const pres::PresFormula& q);
  // Whether q holds when every exponent is 0 (a prime outside the support
  // of all parameters).
  bool generic(const pres::PresFormula& q);

  // A counting-free body whose relativization is q (binder pinned to 1).
  Formula body_of(const pres::PresFormula& q);
  // body_of(qf(body)) when compaction is on, otherwise body.
  Formula canonical_body(const Formula& body);

  // The counting atom "#[binder: body] >= n" with constant folding and, when
  // pruning is on, semantic folding.
  Formula count(std::uint64_t n, const Formula& body);

  // Memo of eliminated existential quantifiers, keyed by variable and
  // matrix; valid for the current binder only.
  const Formula* cached_exists(const std::string& w, const Formula& m) const;
  void store_exists(const std::string& w, const Formula& m, Formula result);

 private:
  pres::PresFormula compute_qf(const Formula& body, const std::string& binder);

  EngineOptions opts_;
  EngineStats stats_;
  std::string binder_ = "p";
  std::unordered_map<std::string,
                     std::unordered_map<Formula, pres::PresFormula, FormulaHash>>
      qf_cache_;
  std::unordered_map<pres::PresFormula, bool, pres::PresHash> sat_cache_;
  std::unordered_map<pres::PresFormula, Formula, pres::PresHash> body_cache_;
  std::unordered_map<std::string,
                     std::unordered_map<Formula, Formula, FormulaHash>>
      exists_cache_;
};

}  // namespace skolem

#endif  // SKOLEM_ENGINE_HPP_
