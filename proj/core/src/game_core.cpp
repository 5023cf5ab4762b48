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

#include "mmd/game_core.hpp"

#include <sstream>

namespace mmd {
namespace {

template <typename T>
std::string Show(const T& value) {
  if constexpr (std::is_same_v<T, Rational>) {
    return ToString(value);
  } else {
    return FormatDouble(value);
  }
}

void CheckDims(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    Fail(ErrorKind::kDimensionMismatch, std::string(what) + ": expected " +
                                            std::to_string(expected) + ", got " +
                                            std::to_string(actual));
  }
}

}  // namespace

template <typename T>
MixedStrategy<T> MixedStrategy<T>::Make(std::vector<T> weights) {
  if (weights.empty()) Fail(ErrorKind::kBadDimension, "strategy has no actions");
  T sum(0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if constexpr (std::is_same_v<T, Rational>) {
      weights[i].canonicalize();
    } else {
      if (!std::isfinite(weights[i])) {
        Fail(ErrorKind::kNonFiniteInput, "weight " + std::to_string(i) + " is not finite");
      }
    }
    if (ScalarTraits<T>::IsNegative(weights[i])) {
      Fail(ErrorKind::kNegativeWeight,
           "weight " + std::to_string(i) + " = " + Show(weights[i]));
    }
    sum += weights[i];
  }
  if (!ScalarTraits<T>::SumsToOne(sum)) {
    T deviation = sum - T(1);
    Fail(ErrorKind::kSumNotOne, "weights sum to " + Show(T(sum)) + " (deviation " +
                                    Show(deviation) + ")");
  }
  return MixedStrategy(std::move(weights));
}

template <typename T>
MixedStrategy<T> MixedStrategy<T>::Uniform(std::size_t dimension) {
  if (dimension == 0) Fail(ErrorKind::kBadDimension, "strategy has no actions");
  T w;
  if constexpr (std::is_same_v<T, Rational>) {
    w = Rational(1, dimension);
  } else {
    w = 1.0 / static_cast<double>(dimension);
  }
  return MixedStrategy(std::vector<T>(dimension, w));
}

template <typename T>
MixedStrategy<T> MixedStrategy<T>::Pure(std::size_t dimension, std::size_t index) {
  if (index >= dimension) Fail(ErrorKind::kBadDimension, "pure index out of range");
  std::vector<T> w(dimension, T(0));
  w[index] = T(1);
  return MixedStrategy(std::move(w));
}

template <typename T>
PayoffMatrix<T>::PayoffMatrix(std::size_t rows, std::size_t cols, const T& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) Fail(ErrorKind::kBadDimension, "empty payoff matrix");
}

template <typename T>
PayoffMatrix<T> PayoffMatrix<T>::FromRows(const std::vector<std::vector<T>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    Fail(ErrorKind::kBadDimension, "empty payoff matrix");
  }
  PayoffMatrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CheckDims(a.cols_, rows[i].size(), "matrix row length");
    for (std::size_t j = 0; j < a.cols_; ++j) {
      a(i, j) = rows[i][j];
      if constexpr (std::is_same_v<T, Rational>) a(i, j).canonicalize();
    }
  }
  return a;
}

template <typename T>
std::vector<std::vector<T>> PayoffMatrix<T>::ToRows() const {
  std::vector<std::vector<T>> out(rows_, std::vector<T>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

template <typename T>
std::vector<std::size_t> Support(const MixedStrategy<T>& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    if (ScalarTraits<T>::IsPositive(s[i])) out.push_back(i);
  }
  return out;
}

template <typename T>
std::vector<T> ColumnPayoffs(const MixedStrategy<T>& x, const PayoffMatrix<T>& a) {
  CheckDims(a.rows(), x.dimension(), "row strategy");
  std::vector<T> out(a.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += x[i] * a(i, j);
  }
  return out;
}

template <typename T>
std::vector<T> RowPayoffs(const PayoffMatrix<T>& a, const MixedStrategy<T>& y) {
  CheckDims(a.cols(), y.dimension(), "column strategy");
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (y[j] != 0) out[i] += a(i, j) * y[j];
    }
  }
  return out;
}

template <typename T>
T ExpectedPayoff(const MixedStrategy<T>& x, const PayoffMatrix<T>& a,
                 const MixedStrategy<T>& y) {
  CheckDims(a.cols(), y.dimension(), "column strategy");
  const std::vector<T> col = ColumnPayoffs(x, a);
  T total(0);
  for (std::size_t j = 0; j < col.size(); ++j) total += col[j] * y[j];
  return total;
}

template <typename T>
BestResponse<T> ArgMax(std::span<const T> values) {
  if (values.empty()) Fail(ErrorKind::kBadDimension, "argmax of empty vector");
  BestResponse<T> best{values[0], 0};
  for (std::size_t j = 1; j < values.size(); ++j) {
    if (values[j] > best.value) best = {values[j], j};
  }
  return best;
}

template <typename T>
BestResponse<T> BestResponseValue(const MixedStrategy<T>& x, const PayoffMatrix<T>& a) {
  const std::vector<T> col = ColumnPayoffs(x, a);
  return ArgMax<T>(col);
}

template <typename T>
double L2Distance(const MixedStrategy<T>& a, const MixedStrategy<T>& b) {
  CheckDims(a.dimension(), b.dimension(), "strategy");
  T sum(0);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    T d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(ScalarTraits<T>::AsDouble(sum));
}

Strategy ToDouble(const QStrategy& s) {
  std::vector<double> w = ToDouble(s.weights());
  // Rounding each weight may leave the sum a few ulps away from one; the
  // float tolerance absorbs that.
  return Strategy::Make(std::move(w));
}

Matrix ToDouble(const QMatrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ToDouble(a(i, j));
  }
  return out;
}

QStrategy ToRational(const Strategy& s) {
  std::vector<Rational> w;
  w.reserve(s.dimension());
  for (double x : s.weights()) w.push_back(FromDoubleDecimal(x));
  return QStrategy::Make(std::move(w));
}

QMatrix ToRational(const Matrix& a) {
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = FromDoubleDecimal(a(i, j));
  }
  return out;
}

template <typename T>
std::string DebugString(const MixedStrategy<T>& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    if (i) os << ", ";
    os << Show(s[i]);
  }
  os << ']';
  return os.str();
}

#define MMD_INSTANTIATE(T)                                                              \
  template class MixedStrategy<T>;                                                      \
  template class PayoffMatrix<T>;                                                       \
  template std::vector<std::size_t> Support(const MixedStrategy<T>&);                   \
  template std::vector<T> ColumnPayoffs(const MixedStrategy<T>&, const PayoffMatrix<T>&); \
  template std::vector<T> RowPayoffs(const PayoffMatrix<T>&, const MixedStrategy<T>&);  \
  template T ExpectedPayoff(const MixedStrategy<T>&, const PayoffMatrix<T>&,            \
                            const MixedStrategy<T>&);                                   \
  template BestResponse<T> BestResponseValue(const MixedStrategy<T>&,                   \
                                             const PayoffMatrix<T>&);                   \
  template BestResponse<T> ArgMax(std::span<const T>);                                  \
  template double L2Distance(const MixedStrategy<T>&, const MixedStrategy<T>&);         \
  template std::string DebugString(const MixedStrategy<T>&);

MMD_INSTANTIATE(Rational)
MMD_INSTANTIATE(double)

#undef MMD_INSTANTIATE

}  // namespace mmd
