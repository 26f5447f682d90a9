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

// Quantifier elimination into counting normal form: Boolean combinations of
// atoms "#[p: theta] >= n" with counting-free bodies theta. Every quantifier
// is removed innermost first; an existential over a Boolean combination of
// counting atoms is rewritten through pairwise-inconsistent systems and the
// subset-existence conditions on prime sets.

#ifndef SKOLEM_QE_HPP_
#define SKOLEM_QE_HPP_

#include <string>

#include "skolem/engine.hpp"
#include "skolem/formula.hpp"

namespace skolem {

// True when f is a Boolean combination of constants and counting atoms over
// counting-free bodies.
bool is_counting_normal_form(const Formula& f);

// An atomic formula as a counting normal form: not (#[p: not a] >= 1).
Formula atomic_step(const Formula& atom, Engine& engine);
Formula atomic_step(const Formula& atom);

// exists w. matrix, for a matrix in counting normal form; the result is in
// counting normal form and does not mention w. Throws InvalidArgument when
// the matrix is not in normal form, ResourceError past a cap.
Formula exists_step(const std::string& w, const Formula& matrix,
                    Engine& engine);
Formula exists_step(const std::string& w, const Formula& matrix);

// An equivalent counting normal form with the same free variables. Sugar is
// expanded first. Throws InvalidArgument or ResourceError.
Formula eliminate(const Formula& f, Engine& engine);
Formula eliminate(const Formula& f, const EngineOptions& options = {});

// Rebuilds a normal form atom by atom: atoms whose body holds at no prime or
// at all primes outside the parameters fold to constants, and bodies are
// compacted.
Formula simplify(const Formula& nf, Engine& engine);

}  // namespace skolem

#endif  // SKOLEM_QE_HPP_
