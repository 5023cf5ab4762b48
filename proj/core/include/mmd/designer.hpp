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

#ifndef MMD_DESIGNER_HPP_
#define MMD_DESIGNER_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mmd/game_core.hpp"
#include "mmd/verifier.hpp"

namespace mmd {

enum class Construction {
  kEqualSupport,
  kLargerSupport,
  kSingletonSupport,
  // Equal supports that fill every column (k = l = m < n). No matrix with
  // A y* = v 1 has a unique row minimax here, so the rows outside
  // support(x*) are made strictly worse against y*.
  kEqualSupportDominated,
};

std::string_view ConstructionName(Construction c);

struct DesignSpec {
  QStrategy x_star;  // target row strategy, dimension n
  QStrategy y_star;  // designer's own minimax strategy, dimension m
  Rational v{1};
  std::optional<Rational> z;   // equal-support gap
  std::optional<Rational> v1;  // larger-support slack
  // Extra payoff g put on rows outside support(x*) in columns where the
  // support rows read v. Without it those rows are y*-mixtures of the
  // support rows and x* is not unique.
  std::optional<Rational> guard;
};

// Everything the constructions computed, indexed in support order.
struct DesignParameters {
  std::optional<Rational> z;
  std::optional<Rational> v1;
  std::optional<Rational> y_bar;
  std::optional<Rational> gap;
  std::optional<Rational> guard;
  // Larger supports: amount taken off the first k entries of guarded rows
  // so that A y* stays v 1.
  std::optional<Rational> guard_shift;
  std::vector<Rational> alpha;
  std::vector<Rational> a;
  std::vector<Rational> beta;
};

struct DesignedGame {
  QMatrix matrix;
  QStrategy x_star;
  QStrategy y_star;
  GameValue value;
  // Canonical index -> original index. The canonical layout puts the
  // supports of x* and y* first, in increasing index order.
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;
  Construction construction = Construction::kEqualSupport;
  DesignParameters parameters;
  std::optional<MinimaxCertificate> certificate;
};

// Open interval (0, bound) for z when supports are equal.
Rational EqualSupportZBound(const QStrategy& x_star, const QStrategy& y_star, const Rational& v);

// Largest admissible guard for the larger-support construction at the
// given slack v*y_bar - v1. Keeps guarded entries positive and above a_c.
Rational LargerSupportGuardBound(const QStrategy& x_star, const QStrategy& y_star,
                                 const Rational& v, const Rational& slack);

// Largest admissible v*y_bar - v1 for the larger-support construction.
// Besides v1 > 0 it keeps every entry strictly positive.
Rational LargerSupportSlackBound(const QStrategy& x_star, const QStrategy& y_star,
                                 const Rational& v);

DesignedGame DesignEqualSupport(const DesignSpec& spec);
DesignedGame DesignLargerSupport(const DesignSpec& spec);

// Dominant-column construction for a pure target e_i0: column `column`
// reads v at row i0 and v + gap elsewhere, every other column is v.
// `num_cols` defaults to the target's dimension; `column` defaults to i0
// (or 0 when i0 is out of range).
DesignedGame DesignSingleton(const QStrategy& x_star, const Rational& v, const Rational& gap,
                             std::optional<std::size_t> num_cols = std::nullopt,
                             std::optional<std::size_t> column = std::nullopt);

struct DesignOptions {
  std::optional<Rational> z;
  std::optional<Rational> v1;
  std::optional<Rational> gap;  // singleton only; defaults to v / 2
  std::optional<Rational> guard;
  bool run_oracle = true;
  // Skipping certification leaves DesignedGame::certificate empty.
  bool certify = true;
};

// Routes on support sizes, fills absent parameters with interval midpoints,
// and (unless told otherwise) certifies the result before returning it.
DesignedGame Design(const QStrategy& x_star, const QStrategy& y_star, const Rational& v,
                    const DesignOptions& options = {});

// Support indices in increasing order, followed by the remaining indices.
std::vector<std::size_t> SupportFirstPermutation(const QStrategy& s);

QMatrix ApplyPermutation(const QMatrix& canonical, const std::vector<std::size_t>& row_perm,
                         const std::vector<std::size_t>& col_perm);

QMatrix CanonicalMatrix(const DesignedGame& game);

}  // namespace mmd

#endif  // MMD_DESIGNER_HPP_
