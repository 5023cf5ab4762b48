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

#ifndef MMD_RATIONAL_HPP_
#define MMD_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mmd {

// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

// Parses "p/q", an integer, or a base-10 decimal with optional exponent
// ("0.125", "-3e-2"). Decimals are converted exactly: "0.1" is 1/10.
// Throws Error(kParseError) on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical "p/q" text, or "p" when the denominator is one.
std::string ToString(const Rational& q);

double ToDouble(const Rational& q);

// Exact rational of the shortest decimal that round-trips to `value`,
// so 0.6 becomes 3/5 rather than the binary expansion of the double.
Rational FromDoubleDecimal(double value);

// Shortest round-trip decimal text of a double.
std::string FormatDouble(double value);

std::vector<double> ToDouble(const std::vector<Rational>& values);

}  // namespace mmd

#endif  // MMD_RATIONAL_HPP_
