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

// Concrete syntax: parser, canonical printer and desugaring of the sugar
// predicates divides/prime/rad/ppart.
//
// Grammar (ASCII):
//   term    := "1" | var | term "*" term | var "^" posint
//   atom    := term "=" term | "divides(" term "," term ")" | "prime(" var ")"
//            | "rad(" var ")" | "ppart(" var "," var ")" "=" term
//            | "#[" var ":" formula "]" ">=" nat | "true" | "false"
//   formula := atom | "~" formula | formula "/\" formula
//            | formula "\/" formula | formula "->" formula
//            | "exists" var "." formula | "forall" var "." formula
// Precedence ~ > /\ > \/ > ->, "->" is right associative and quantifiers
// extend as far right as possible.

#ifndef SKOLEM_SYNTAX_HPP_
#define SKOLEM_SYNTAX_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "skolem/formula.hpp"

namespace skolem {

// Throws SyntaxError with line/column.
Formula parse(std::string_view text);

// Fully parenthesized Boolean structure, "^" exponents; parse(pretty(f)) == f.
std::string pretty(const Formula& f);

// Expands divides, prime, rad and ppart into Eq, connectives and quantifiers
// with fresh bound variables.
Formula desugar(const Formula& f);

// exists! w. body, spelled exists w. (body /\ forall z. (body[z/w] -> z = w))
// with z fresh. The grammar has no token for it.
Formula exists_unique(const std::string& w, const Formula& body);

// Reads newline-separated formulas; blank lines and lines starting with '#'
// (outside a formula) are skipped.
std::vector<std::string> split_corpus(std::string_view text);

}  // namespace skolem

#endif  // SKOLEM_SYNTAX_HPP_
