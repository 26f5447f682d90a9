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

#ifndef SKOLEM_BIGINT_HPP_
#define SKOLEM_BIGINT_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace skolem {

using BigInt = boost::multiprecision::cpp_int;

// Parses an optionally signed decimal literal. Throws InvalidArgument.
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.str(); }

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Floor division and the matching non-negative remainder (divisor > 0).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& b);

// Narrowing with a range check; throws ResourceError when out of range.
std::int64_t to_int64(const BigInt& v);
std::uint64_t to_uint64(const BigInt& v);

}  // namespace skolem

#endif  // SKOLEM_BIGINT_HPP_
