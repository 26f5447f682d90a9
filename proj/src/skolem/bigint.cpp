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

#include "skolem/bigint.hpp"

#include <cctype>
#include <limits>

#include "skolem/error.hpp"

namespace skolem {

SyntaxError::SyntaxError(const std::string& msg, std::size_t line,
                         std::size_t column)
    : Error(msg + " at line " + std::to_string(line) + ", column " +
            std::to_string(column)),
      line_(line),
      column_(column) {}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw InvalidArgument("expected a decimal integer, got '" +
                          std::string(text) + "'");
  }
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidArgument("expected a decimal integer, got '" +
                            std::string(text) + "'");
    }
    v = v * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-v) : v;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a < 0 ? BigInt(-a) : a;
  BigInt y = b < 0 ? BigInt(-b) : b;
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = gcd(a, b);
  BigInt r = (a / g) * b;
  return r < 0 ? BigInt(-r) : r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) {
  BigInt r = a % b;
  if (r < 0) r += (b < 0 ? BigInt(-b) : b);
  return r;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceError("integer " + v.str() + " exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

std::uint64_t to_uint64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError("integer " + v.str() + " exceeds 64-bit range");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace skolem
