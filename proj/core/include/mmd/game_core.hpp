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

#ifndef MMD_GAME_CORE_HPP_
#define MMD_GAME_CORE_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mmd/errors.hpp"
#include "mmd/rational.hpp"

namespace mmd {

// Simplex membership and support threshold for floating-point strategies.
inline constexpr double kFloatTolerance = 1e-12;

// Numeric policy for the two supported scalar modes: exact rationals for
// construction and certification, doubles for long simulations.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool IsPositive(const Rational& q) { return sgn(q) > 0; }
  static bool IsNegative(const Rational& q) { return sgn(q) < 0; }
  static bool SumsToOne(const Rational& sum) { return sum == 1; }
  static double AsDouble(const Rational& q) { return ToDouble(q); }
};

template <>
struct ScalarTraits<double> {
  static bool IsPositive(double x) { return x > kFloatTolerance; }
  static bool IsNegative(double x) { return x < 0.0; }
  static bool SumsToOne(double sum) { return std::fabs(sum - 1.0) <= kFloatTolerance; }
  static double AsDouble(double x) { return x; }
};

// A probability vector over a finite action set. Construction validates
// non-negativity and unit mass; afterwards the weights are immutable.
template <typename T>
class MixedStrategy {
 public:
  static MixedStrategy Make(std::vector<T> weights);
  static MixedStrategy Uniform(std::size_t dimension);
  static MixedStrategy Pure(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return weights_.size(); }
  const std::vector<T>& weights() const { return weights_; }
  const T& operator[](std::size_t i) const { return weights_[i]; }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  explicit MixedStrategy(std::vector<T> weights) : weights_(std::move(weights)) {}
  std::vector<T> weights_;
};

// Row-major n x m payoff matrix; entry (i, j) is the column player's gain
// and the row player's loss.
template <typename T>
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  PayoffMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0));
  static PayoffMatrix FromRows(const std::vector<std::vector<T>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::vector<T>> ToRows() const;

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

struct GameValue {
  Rational v;
  friend bool operator==(const GameValue&, const GameValue&) = default;
};

template <typename T>
struct BestResponse {
  T value;            // f(x) = max_j (x^T A)_j
  std::size_t index;  // smallest column attaining the max
};

using QStrategy = MixedStrategy<Rational>;
using QMatrix = PayoffMatrix<Rational>;
using Strategy = MixedStrategy<double>;
using Matrix = PayoffMatrix<double>;

template <typename T>
std::vector<std::size_t> Support(const MixedStrategy<T>& s);

// A^T x: the payoff of each column against the row strategy.
template <typename T>
std::vector<T> ColumnPayoffs(const MixedStrategy<T>& x, const PayoffMatrix<T>& a);

// A y: the loss of each row against the column strategy.
template <typename T>
std::vector<T> RowPayoffs(const PayoffMatrix<T>& a, const MixedStrategy<T>& y);

template <typename T>
T ExpectedPayoff(const MixedStrategy<T>& x, const PayoffMatrix<T>& a,
                 const MixedStrategy<T>& y);

template <typename T>
BestResponse<T> BestResponseValue(const MixedStrategy<T>& x, const PayoffMatrix<T>& a);

// Lowest-index argmax, shared by best responses and the LRCA e_t choice.
template <typename T>
BestResponse<T> ArgMax(std::span<const T> values);

template <typename T>
double L2Distance(const MixedStrategy<T>& a, const MixedStrategy<T>& b);

Strategy ToDouble(const QStrategy& s);
Matrix ToDouble(const QMatrix& a);

// Promotes float data to exact rationals via their shortest decimal text.
QStrategy ToRational(const Strategy& s);
QMatrix ToRational(const Matrix& a);

template <typename T>
std::string DebugString(const MixedStrategy<T>& s);

}  // namespace mmd

#endif  // MMD_GAME_CORE_HPP_
