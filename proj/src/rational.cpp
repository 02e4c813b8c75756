// Copyright 2026 The pcralloc Authors
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

#include "pcralloc/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace pcralloc {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational value out of 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer in rational: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::reduce(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = reduce(num, den);
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t n = parse_int(text.substr(0, slash));
    std::int64_t d = parse_int(text.substr(slash + 1));
    return Rational(n, d);
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text));
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.empty() || frac_part.size() > 18) {
    throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
  }
  bool negative = !int_part.empty() && int_part.front() == '-';
  if (negative || (!int_part.empty() && int_part.front() == '+')) {
    int_part.remove_prefix(1);
  }
  __int128 scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  __int128 whole = int_part.empty() ? 0 : parse_int(int_part);
  __int128 frac = parse_int(frac_part);
  if (frac < 0) throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
  __int128 num = whole * scale + frac;
  if (negative) num = -num;
  return reduce(num, scale);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<__int128>(num_));
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  __int128 num = static_cast<__int128>(num_) * o.den_ +
                 static_cast<__int128>(o.num_) * den_;
  __int128 den = static_cast<__int128>(den_) * o.den_;
  return reduce(num, den);
}

Rational Rational::operator-(const Rational& o) const {
  __int128 num = static_cast<__int128>(num_) * o.den_ -
                 static_cast<__int128>(o.num_) * den_;
  __int128 den = static_cast<__int128>(den_) * o.den_;
  return reduce(num, den);
}

Rational Rational::operator*(const Rational& o) const {
  __int128 num = static_cast<__int128>(num_) * o.num_;
  __int128 den = static_cast<__int128>(den_) * o.den_;
  return reduce(num, den);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  __int128 num = static_cast<__int128>(num_) * o.den_;
  __int128 den = static_cast<__int128>(den_) * o.num_;
  return reduce(num, den);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  std::int64_t rest = den_;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  int digits = twos > fives ? twos : fives;
  __int128 scaled = num_ < 0 ? -static_cast<__int128>(num_) : num_;
  for (int i = 0; i < digits - twos; ++i) scaled *= 2;
  for (int i = 0; i < digits - fives; ++i) scaled *= 5;
  std::string raw;
  while (scaled > 0) {
    raw.insert(raw.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  while (static_cast<int>(raw.size()) <= digits) raw.insert(raw.begin(), '0');
  raw.insert(raw.size() - digits, ".");
  while (raw.back() == '0') raw.pop_back();
  if (raw.back() == '.') raw.pop_back();  // unreachable for reduced fractions
  return (num_ < 0 ? "-" : "") + raw;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace pcralloc
