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

#include "mmd/designer.hpp"

#include <algorithm>
#include <string>

#include "mmd/errors.hpp"

namespace mmd {
namespace {

void RequirePositiveValue(const Rational& v) {
  if (sgn(v) <= 0) Fail(ErrorKind::kParameterOutOfRange, "game value must be positive");
}

std::vector<Rational> Gather(const QStrategy& s, const std::vector<std::size_t>& idx) {
  std::vector<Rational> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(s[i]);
  return out;
}

}  // namespace

std::string_view ConstructionName(Construction c) {
  switch (c) {
    case Construction::kEqualSupport: return "EqualSupport";
    case Construction::kLargerSupport: return "LargerSupport";
    case Construction::kSingletonSupport: return "SingletonSupport";
    case Construction::kEqualSupportDominated: return "EqualSupportDominated";
  }
  return "Unknown";
}

std::vector<std::size_t> SupportFirstPermutation(const QStrategy& s) {
  std::vector<std::size_t> perm = Support(s);
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    if (sgn(s[i]) == 0) perm.push_back(i);
  }
  return perm;
}

QMatrix ApplyPermutation(const QMatrix& canonical, const std::vector<std::size_t>& row_perm,
                         const std::vector<std::size_t>& col_perm) {
  if (row_perm.size() != canonical.rows() || col_perm.size() != canonical.cols()) {
    Fail(ErrorKind::kDimensionMismatch, "permutation size differs from matrix shape");
  }
  QMatrix out(canonical.rows(), canonical.cols());
  for (std::size_t i = 0; i < canonical.rows(); ++i) {
    for (std::size_t j = 0; j < canonical.cols(); ++j) {
      out(row_perm[i], col_perm[j]) = canonical(i, j);
    }
  }
  return out;
}

QMatrix CanonicalMatrix(const DesignedGame& game) {
  const QMatrix& a = game.matrix;
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(game.row_perm[i], game.col_perm[j]);
    }
  }
  return out;
}

Rational EqualSupportZBound(const QStrategy& x_star, const QStrategy& y_star, const Rational& v) {
  const std::vector<Rational> xs = Gather(x_star, Support(x_star));
  const std::vector<Rational> ys = Gather(y_star, Support(y_star));
  Rational bound = v;
  for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) {
    if (xs[i] == 1) continue;
    Rational cap = v * ys[i] / (1 - xs[i]);
    if (cap < bound) bound = cap;
  }
  return bound;
}

Rational LargerSupportSlackBound(const QStrategy& x_star, const QStrategy& y_star,
                                 const Rational& v) {
  const std::vector<Rational> xs = Gather(x_star, Support(x_star));
  const std::vector<Rational> ys = Gather(y_star, Support(y_star));
  const std::size_t k = xs.size();
  Rational paired_mass(0);
  for (std::size_t i = 0; i < k; ++i) paired_mass += ys[i];
  const Rational y_bar = 1 - paired_mass;

  // v1 > 0.
  Rational bound = v * y_bar;
  for (std::size_t i = 0; i < k; ++i) {
    // a_i = v - w (1 - x_i) / y_i > 0.
    if (xs[i] != 1) {
      Rational cap = v * ys[i] / (1 - xs[i]);
      if (cap < bound) bound = cap;
    }
    // alpha_i - z = v + w (x_i / y_i - 1 / paired_mass) > 0.
    Rational slope = 1 / paired_mass - xs[i] / ys[i];
    if (sgn(slope) > 0) {
      Rational cap = v / slope;
      if (cap < bound) bound = cap;
    }
  }
  return bound;
}

Rational LargerSupportGuardBound(const QStrategy& x_star, const QStrategy& y_star,
                                 const Rational& v, const Rational& slack) {
  const std::vector<Rational> xs = Gather(x_star, Support(x_star));
  const std::vector<Rational> ys = Gather(y_star, Support(y_star));
  const std::size_t k = xs.size();
  Rational paired_mass(0);
  for (std::size_t i = 0; i < k; ++i) paired_mass += ys[i];
  const Rational y_bar = 1 - paired_mass;
  const Rational z = slack / paired_mass;
  // The shift h must stay below alpha_c - z (positivity) and below
  // alpha_c - z - a_c (the column pattern).
  std::optional<Rational> room;
  for (std::size_t c = 0; c < k; ++c) {
    const Rational alpha = v + xs[c] * slack / ys[c];
    const Rational a = alpha - slack / ys[c];
    Rational cap = std::min(Rational(alpha - z), Rational(alpha - z - a));
    if (!room || cap < *room) room = cap;
  }
  return *room * paired_mass / y_bar;
}

DesignedGame DesignEqualSupport(const DesignSpec& spec) {
  RequirePositiveValue(spec.v);
  const std::vector<std::size_t> sx = Support(spec.x_star);
  const std::vector<std::size_t> sy = Support(spec.y_star);
  if (sx.size() != sy.size()) {
    Fail(ErrorKind::kSupportMismatch, "support sizes " + std::to_string(sx.size()) + " and " +
                                          std::to_string(sy.size()) + " differ");
  }
  const std::size_t k = sx.size();
  if (k == 1) Fail(ErrorKind::kDegenerateSupport, "support of size 1 needs the singleton design");

  const Rational& v = spec.v;
  const Rational bound = EqualSupportZBound(spec.x_star, spec.y_star, v);
  Rational z = spec.z.value_or(bound / 2);
  if (sgn(z) <= 0 || z >= bound) {
    Fail(ErrorKind::kParameterOutOfRange,
         "z = " + ToString(z) + " outside (0, " + ToString(bound) + ")");
  }

  const std::vector<Rational> xs = Gather(spec.x_star, sx);
  const std::vector<Rational> ys = Gather(spec.y_star, sy);
  DesignParameters params;
  params.z = z;
  for (std::size_t i = 0; i < k; ++i) {
    params.alpha.push_back(v + z * xs[i] / ys[i]);
    params.a.push_back(v - z * (1 - xs[i]) / ys[i]);
  }

  const std::size_t n = spec.x_star.dimension();
  const std::size_t m = spec.y_star.dimension();
  const bool guarded = n > k;
  // With a spare column the guard goes there and A y* = v 1 survives.
  // Otherwise the off-support rows have to be dominated.
  const bool dominated = guarded && m == k;
  Construction kind = dominated ? Construction::kEqualSupportDominated : Construction::kEqualSupport;
  Rational guard(0);
  if (guarded) {
    guard = spec.guard.value_or(v / 2);
    if (sgn(guard) <= 0) Fail(ErrorKind::kParameterOutOfRange, "guard must be positive");
    params.guard = guard;
  }

  QMatrix canonical(n, m, v);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (r < k) {
        if (c < k) canonical(r, c) = r == c ? params.a[c] : params.alpha[c];
      } else if (c < k) {
        canonical(r, c) = params.alpha[c] - z;
        if (dominated) canonical(r, c) += guard;
      } else {
        canonical(r, c) = v + guard;
      }
    }
  }

  DesignedGame game{QMatrix(), spec.x_star, spec.y_star, GameValue{v},
                    SupportFirstPermutation(spec.x_star), SupportFirstPermutation(spec.y_star),
                    kind, std::move(params), std::nullopt};
  game.matrix = ApplyPermutation(canonical, game.row_perm, game.col_perm);
  return game;
}

DesignedGame DesignLargerSupport(const DesignSpec& spec) {
  RequirePositiveValue(spec.v);
  const std::vector<std::size_t> sx = Support(spec.x_star);
  const std::vector<std::size_t> sy = Support(spec.y_star);
  const std::size_t k = sx.size();
  const std::size_t l = sy.size();
  if (k >= l) {
    Fail(ErrorKind::kSupportNotSmaller, "support(x*) = " + std::to_string(k) +
                                            " is not smaller than support(y*) = " +
                                            std::to_string(l));
  }
  if (k == 1) Fail(ErrorKind::kDegenerateSupport, "support of size 1 needs the singleton design");

  const Rational& v = spec.v;
  const std::vector<Rational> xs = Gather(spec.x_star, sx);
  const std::vector<Rational> ys = Gather(spec.y_star, sy);
  Rational paired_mass(0);
  for (std::size_t i = 0; i < k; ++i) paired_mass += ys[i];
  const Rational y_bar = 1 - paired_mass;
  const Rational v_y_bar = v * y_bar;
  const Rational slack_bound = LargerSupportSlackBound(spec.x_star, spec.y_star, v);

  Rational v1 = spec.v1.value_or(v_y_bar - slack_bound / 2);
  if (sgn(v1) <= 0 || v1 >= v_y_bar) {
    Fail(ErrorKind::kParameterOutOfRange,
         "v1 = " + ToString(v1) + " outside (0, " + ToString(v_y_bar) + ")");
  }
  const Rational slack = v_y_bar - v1;
  if (slack >= slack_bound) {
    Fail(ErrorKind::kParameterOutOfRange,
         "v1 = " + ToString(v1) + " would make some entry non-positive; need v1 > " +
             ToString(Rational(v_y_bar - slack_bound)));
  }

  DesignParameters params;
  params.v1 = v1;
  params.y_bar = y_bar;
  const Rational z = slack / paired_mass;
  params.z = z;
  for (std::size_t i = 0; i < k; ++i) {
    Rational alpha = v + xs[i] * slack / ys[i];
    params.a.push_back(alpha - slack / ys[i]);
    params.alpha.push_back(std::move(alpha));
    params.beta.push_back(v);
  }

  const std::size_t n = spec.x_star.dimension();
  const std::size_t m = spec.y_star.dimension();
  Rational guard(0);
  Rational shift(0);
  if (n > k) {
    // Off-support rows gain g on the beta columns and give back
    // h = g y_bar / S on the first k, keeping (A y*)_r = v.
    const Rational guard_bound = LargerSupportGuardBound(spec.x_star, spec.y_star, v, slack);
    guard = spec.guard.value_or(guard_bound / 2);
    if (sgn(guard) <= 0 || guard >= guard_bound) {
      Fail(ErrorKind::kParameterOutOfRange,
           "guard = " + ToString(guard) + " outside (0, " + ToString(guard_bound) + ")");
    }
    shift = guard * y_bar / paired_mass;
    params.guard = guard;
    params.guard_shift = shift;
  }

  QMatrix canonical(n, m, v);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (c < k) {
        if (r < k) {
          canonical(r, c) = r == c ? params.a[c] : params.alpha[c];
        } else {
          canonical(r, c) = params.alpha[c] - z - shift;
        }
      } else if (r < k) {
        canonical(r, c) = params.beta[r];
      } else if (c < l) {
        canonical(r, c) = v + guard;
      }
    }
  }

  DesignedGame game{QMatrix(), spec.x_star, spec.y_star, GameValue{v},
                    SupportFirstPermutation(spec.x_star), SupportFirstPermutation(spec.y_star),
                    Construction::kLargerSupport, std::move(params), std::nullopt};
  game.matrix = ApplyPermutation(canonical, game.row_perm, game.col_perm);
  return game;
}

DesignedGame DesignSingleton(const QStrategy& x_star, const Rational& v, const Rational& gap,
                             std::optional<std::size_t> num_cols,
                             std::optional<std::size_t> column) {
  const std::vector<std::size_t> sx = Support(x_star);
  if (sx.size() != 1) {
    Fail(ErrorKind::kNotSingleton,
         "target has support " + std::to_string(sx.size()) + ", expected 1");
  }
  RequirePositiveValue(v);
  if (sgn(gap) <= 0) Fail(ErrorKind::kParameterOutOfRange, "gap must be positive");

  const std::size_t n = x_star.dimension();
  const std::size_t m = num_cols.value_or(n);
  if (m == 0) Fail(ErrorKind::kBadDimension, "column count must be positive");
  const std::size_t i0 = sx.front();
  const std::size_t c = column.value_or(i0 < m ? i0 : 0);
  if (c >= m) Fail(ErrorKind::kBadDimension, "dominant column out of range");

  QMatrix a(n, m, v);
  for (std::size_t r = 0; r < n; ++r) {
    if (r != i0) a(r, c) = v + gap;
  }
  QStrategy y_star = QStrategy::Pure(m, c);

  DesignParameters params;
  params.gap = gap;
  DesignedGame game{std::move(a), x_star, y_star, GameValue{v},
                    SupportFirstPermutation(x_star), SupportFirstPermutation(y_star),
                    Construction::kSingletonSupport, std::move(params), std::nullopt};
  return game;
}

DesignedGame Design(const QStrategy& x_star, const QStrategy& y_star, const Rational& v,
                    const DesignOptions& options) {
  RequirePositiveValue(v);
  const std::vector<std::size_t> sx = Support(x_star);
  const std::vector<std::size_t> sy = Support(y_star);
  if (sy.size() < sx.size()) {
    Fail(ErrorKind::kSupportTooSmall, "support(y*) = " + std::to_string(sy.size()) +
                                          " is smaller than support(x*) = " +
                                          std::to_string(sx.size()));
  }

  DesignedGame game = [&] {
    if (sx.size() == 1) {
      return DesignSingleton(x_star, v, options.gap.value_or(v / 2), y_star.dimension(),
                             sy.front());
    }
    const DesignSpec spec{x_star, y_star, v, options.z, options.v1, options.guard};
    return sx.size() == sy.size() ? DesignEqualSupport(spec) : DesignLargerSupport(spec);
  }();

  if (!options.certify) return game;
  MinimaxCertificate cert = Certify(game.matrix, game.x_star, game.y_star, options.run_oracle);
  if (!cert.certified() || cert.value.v != v) {
    Fail(ErrorKind::kCertificationFailed, "designed matrix failed its own certificate");
  }
  game.certificate = std::move(cert);
  return game;
}

}  // namespace mmd
