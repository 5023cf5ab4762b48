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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "mmd/errors.hpp"
#include "mmd/lp_engine.hpp"

namespace mmd {
namespace {

struct Candidate {
  std::vector<Rational> x;
  Rational w;
};

std::vector<std::size_t> Members(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

bool LexLess(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& l, const Rational& r) { return l < r; });
}

}  // namespace

MinimaxFace EnumerateMinimaxRows(const QMatrix& a, std::size_t cap) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  if (n > cap || m > cap) {
    Fail(ErrorKind::kCapExceeded, "oracle limited to " + std::to_string(cap) + "x" +
                                      std::to_string(cap) + ", got " + std::to_string(n) +
                                      "x" + std::to_string(m));
  }

  std::vector<std::vector<std::uint32_t>> col_sets_by_size(m + 1);
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    col_sets_by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }

  std::vector<Candidate> candidates;
  for (std::uint32_t row_mask = 1; row_mask < (1u << n); ++row_mask) {
    const std::vector<std::size_t> rows = Members(row_mask);
    const std::size_t s = rows.size();
    if (s > m) continue;
    for (std::uint32_t col_mask : col_sets_by_size[s]) {
      const std::vector<std::size_t> cols = Members(col_mask);
      // Unknowns (x_rows..., w): sum x = 1, and x^T A_j = w on each chosen column.
      RationalRows system(s + 1, std::vector<Rational>(s + 1, Rational(0)));
      std::vector<Rational> rhs(s + 1, Rational(0));
      for (std::size_t k = 0; k < s; ++k) system[0][k] = 1;
      rhs[0] = 1;
      for (std::size_t t = 0; t < s; ++t) {
        for (std::size_t k = 0; k < s; ++k) system[t + 1][k] = a(rows[k], cols[t]);
        system[t + 1][s] = -1;
      }
      auto sol = SolveSquare(std::move(system), std::move(rhs));
      if (!sol) continue;

      bool ok = true;
      std::vector<Rational> x(n, Rational(0));
      for (std::size_t k = 0; k < s && ok; ++k) {
        if (sgn((*sol)[k]) < 0) ok = false;
        x[rows[k]] = (*sol)[k];
      }
      if (!ok) continue;
      const Rational& w = (*sol)[s];
      for (std::size_t j = 0; j < m && ok; ++j) {
        Rational payoff(0);
        for (std::size_t r : rows) payoff += a(r, j) * x[r];
        if (payoff > w) ok = false;
      }
      if (ok) candidates.push_back({std::move(x), w});
    }
  }

  // The polyhedron {(x, w)} always has vertices: every pure row strategy
  // paired with its worst column is one.
  if (candidates.empty()) {
    Fail(ErrorKind::kCertificationFailed, "oracle found no feasible vertex");
  }

  Rational value = candidates.front().w;
  for (const auto& c : candidates) {
    if (c.w < value) value = c.w;
  }

  std::vector<std::vector<Rational>> vertices;
  for (auto& c : candidates) {
    if (c.w == value) vertices.push_back(std::move(c.x));
  }
  std::sort(vertices.begin(), vertices.end(), LexLess);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  MinimaxFace face;
  face.value = GameValue{value};
  face.unique_row = vertices.size() == 1;
  for (auto& v : vertices) face.row_vertices.push_back(QStrategy::Make(std::move(v)));
  return face;
}

}  // namespace mmd
