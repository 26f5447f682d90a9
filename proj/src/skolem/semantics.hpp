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

// Truth of formulas at tuples of naturals, through their counting normal
// forms: an atom "#[p: theta] >= n" holds when theta, relativized to p,
// holds at no fewer than n primes p.

#ifndef SKOLEM_SEMANTICS_HPP_
#define SKOLEM_SEMANTICS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skolem/bigint.hpp"
#include "skolem/engine.hpp"
#include "skolem/formula.hpp"
#include "skolem/relativize.hpp"

namespace skolem {

// Number of primes at which a body holds: finite, or infinite (the body
// holds at every prime outside the support of the tuple).
struct CountResult {
  bool infinite = false;
  std::uint64_t value = 0;  // when finite
  // The primes of the tuple's support at which the body holds.
  std::vector<BigInt> witnesses;

  static CountResult finite(std::uint64_t n) { return {false, n, {}}; }
  static CountResult inf() { return {true, 0, {}}; }
  bool at_least(std::uint64_t n) const { return infinite || value >= n; }
  std::string to_string() const;
  friend bool operator==(const CountResult&, const CountResult&) = default;
};

// |{p prime : theta^p(a)}| with `binder` (if non-empty) standing for p
// itself. theta must be counting-free; every other free variable must be
// assigned. Throws InvalidArgument.
CountResult count_atom(const Formula& theta, const Assignment& a,
                       const std::string& binder, Engine& engine);
CountResult count_atom(const Formula& theta, const Assignment& a,
                       const std::string& binder = "");

// Truth of a counting normal form under a covering assignment.
bool eval_normal_form(const Formula& nf, const Assignment& a, Engine& engine);

// Truth of any formula; eliminates first. Throws InvalidArgument when a free
// variable is unassigned, ResourceError past a cap.
bool eval(const Formula& f, const Assignment& a, Engine& engine);
bool eval(const Formula& f, const Assignment& a,
          const EngineOptions& options = {});

// Truth of a sentence. Throws InvalidArgument on free variables.
bool decide(const Formula& sentence, Engine& engine);
bool decide(const Formula& sentence, const EngineOptions& options = {});

// The grid of check_equiv: each variable ranges over the products of the
// base primes with exponents 0..max_exp in increasing order; assignments are
// visited lexicographically with variables in name order, the last fastest.
struct Grid {
  std::vector<BigInt> base = {2, 3, 5};
  unsigned max_exp = 3;
};

// The first grid assignment (over the union of both free-variable sets) at
// which f and g differ, or nullopt.
std::optional<Assignment> check_equiv(const Formula& f, const Formula& g,
                                      const Grid& grid, Engine& engine);
std::optional<Assignment> check_equiv(const Formula& f, const Formula& g,
                                      const Grid& grid = {},
                                      const EngineOptions& options = {});

// Number of grid points for the given number of variables.
std::uint64_t grid_size(const Grid& grid, std::size_t variables);

}  // namespace skolem

#endif  // SKOLEM_SEMANTICS_HPP_
