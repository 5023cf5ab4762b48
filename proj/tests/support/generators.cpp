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


#include "support/generators.hpp"

#include <algorithm>
#include <numeric>

namespace mmd::testing {

QStrategy RandomRationalStrategy(std::mt19937_64& rng, std::size_t dim, std::size_t support,
                                 int max_weight) {
  std::vector<std::size_t> idx(dim);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uniform_int_distribution<int> weight(1, max_weight);
  std::vector<Rational> w(dim, Rational(0));
  Rational total(0);
  for (std::size_t i = 0; i < support; ++i) {
    w[idx[i]] = weight(rng);
    total += w[idx[i]];
  }
  for (Rational& q : w) q /= total;
  return QStrategy::Make(std::move(w));
}

QMatrix RandomRationalMatrix(std::mt19937_64& rng, std::size_t n, std::size_t m, int lo, int hi,
                             int denom) {
  std::uniform_int_distribution<int> num(lo, hi);
  QMatrix a(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Rational q(num(rng), denom);
      q.canonicalize();
      a(i, j) = q;
    }
  }
  return a;
}

RandomSpec DrawSpec(std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(2, max_dim);
  const std::size_t n = dim(rng);
  const std::size_t m = dim(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(2, std::min(n, m))(rng);
  const std::size_t l = std::uniform_int_distribution<std::size_t>(k, m)(rng);
  RandomSpec spec{RandomRationalStrategy(rng, n, k), RandomRationalStrategy(rng, m, l),
                  Rational(0)};
  spec.v = Rational(std::uniform_int_distribution<int>(1, 40)(rng), 8);
  spec.v.canonicalize();
  return spec;
}

std::vector<double> RandomLosses(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> out(n);
  for (double& x : out) x = u(rng);
  return out;
}

}  // namespace mmd::testing
