// Copyright 2026 The mmd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmd/rational.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <system_error>

#include "mmd/errors.hpp"

namespace mmd {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class PowerOfTen(unsigned long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, exponent);
  return p;
}

Rational ParseDecimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!AllDigits(exp_text) || exp_text.size() > 6) {
      Fail(ErrorKind::kParseError, "bad exponent in '" + std::string(original) + "'");
    }
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string digits;
  auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    if (!AllDigits(text)) {
      Fail(ErrorKind::kParseError, "not a number: '" + std::string(original) + "'");
    }
    digits = std::string(text);
  } else {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac))) {
      Fail(ErrorKind::kParseError, "not a number: '" + std::string(original) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  }

  mpz_class mantissa(digits, 10);
  Rational result;
  if (exponent >= 0) {
    result = Rational(mantissa * PowerOfTen(static_cast<unsigned long>(exponent)));
  } else {
    result = Rational(mantissa, PowerOfTen(static_cast<unsigned long>(-exponent)));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) Fail(ErrorKind::kParseError, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = ParseDecimal(text.substr(0, slash), original);
    Rational den = ParseDecimal(text.substr(slash + 1), original);
    if (den == 0) {
      Fail(ErrorKind::kParseError, "zero denominator in '" + std::string(original) + "'");
    }
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  return ParseDecimal(text, original);
}

std::string ToString(const Rational& q) { return q.get_str(10); }

double ToDouble(const Rational& q) {
  // mpq_get_d truncates toward zero; the neighbour away from zero may be
  // closer. Ties go to the even significand.
  const double t = q.get_d();
  if (sgn(q) == 0 || !std::isfinite(t)) return t;
  const double away = std::nextafter(t, sgn(q) > 0 ? INFINITY : -INFINITY);
  if (!std::isfinite(away)) return t;
  const Rational lo_gap = abs(q - Rational(t));
  const Rational hi_gap = abs(Rational(away) - q);
  const int c = cmp(hi_gap, lo_gap);
  if (c < 0) return away;
  if (c > 0) return t;
  std::int64_t bits = 0;
  std::memcpy(&bits, &t, sizeof bits);
  return (bits & 1) == 0 ? t : away;
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) Fail(ErrorKind::kInvalidArgument, "cannot format double");
  return std::string(buffer, end);
}

Rational FromDoubleDecimal(double value) {
  if (!std::isfinite(value)) {
    Fail(ErrorKind::kNonFiniteInput, "non-finite value cannot become a rational");
  }
  return ParseRational(FormatDouble(value));
}

std::vector<double> ToDouble(const std::vector<Rational>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& q : values) out.push_back(ToDouble(q));
  return out;
}

}  // namespace mmd
