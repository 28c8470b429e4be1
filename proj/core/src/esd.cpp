// Copyright 2026 The tanglesim Authors
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

#include "tanglesim/esd.hpp"

#include <algorithm>
#include <cmath>

#include "tanglesim/error.hpp"
#include "tanglesim/parallel.hpp"

namespace tanglesim {
namespace {

constexpr double kBisectionWidth = 1e-8;
constexpr double kMinWidth = 1e-6;
// A detected run must vanish to this level at interior probe points. Tangential
// zeros such as C0 z^2 stay above it.
constexpr double kExactZero = 1e-12;

EsdWindow analytic(std::string pair, double lo, double hi) {
  EsdWindow w;
  w.pair = std::move(pair);
  w.lo = std::clamp(lo, 0.0, 1.0);
  w.hi = std::clamp(hi, 0.0, 1.0);
  w.axis = GridKind::Z;
  w.kind = EsdWindow::Kind::Analytic;
  return w;
}

// Half-width of the AD window in |chi|^2, or nullopt when it does not exist.
std::optional<double> ad_half_width(double r) {
  double disc = 0.25 - r * r;
  if (disc < 0.0 && disc >= -1e-12) disc = 0.0;
  if (disc < 0.0) return std::nullopt;
  return std::sqrt(disc);
}

// Last point on the `inside` side of a sign change between `outside` and `inside`.
double refine(const std::function<double(double)>& curve, double outside, double inside,
              double tol) {
  while (std::abs(inside - outside) > kBisectionWidth) {
    const double mid = 0.5 * (inside + outside);
    if (curve(mid) <= tol)
      inside = mid;
    else
      outside = mid;
  }
  return inside;
}

bool vanishes_inside(const std::function<double(double)>& curve, const EsdWindow& w) {
  for (double f : {0.25, 0.5, 0.75})
    if (!(curve(w.lo + f * w.width()) <= kExactZero)) return false;
  return true;
}

}  // namespace

std::optional<EsdWindow> esd_window_ab(Complex alpha, Complex beta) {
  const double a = std::abs(alpha);
  const double b = std::abs(beta);
  if (b == 0.0) return std::nullopt;
  if (a == 0.0) {
    auto w = analytic("AB", 0.0, 1.0);
    w.degenerate = true;
    return w;
  }
  const double r = a / b;
  if (r > 1.0) return std::nullopt;
  return analytic("AB", std::sqrt(r), 1.0);
}

std::optional<EsdWindow> esd_window_ad(Complex alpha, Complex beta) {
  const double a = std::abs(alpha);
  const double b = std::abs(beta);
  if (b == 0.0) return std::nullopt;
  const auto half = ad_half_width(a / b);
  if (!half) return std::nullopt;
  auto w = analytic("AD", std::sqrt(std::max(0.0, 0.5 - *half)), std::sqrt(0.5 + *half));
  w.degenerate = a == 0.0;
  return w;
}

std::optional<EsdWindow> simultaneous_window(Complex alpha, Complex beta) {
  const double a = std::abs(alpha);
  const double b = std::abs(beta);
  if (b == 0.0 || !(b > 2.0 * a)) return std::nullopt;
  const double r = a / b;
  const auto half = ad_half_width(r);
  if (!half) return std::nullopt;
  auto w = analytic("AB+AD", std::sqrt(r), std::sqrt(0.5 + *half));
  w.degenerate = a == 0.0;
  return w;
}

std::vector<EsdWindow> detect_zero_intervals(std::span<const double> xs,
                                             std::span<const double> values,
                                             const std::function<double(double)>& curve,
                                             const std::string& pair, GridKind axis,
                                             double tol) {
  if (xs.size() != values.size()) throw Error("detect_zero_intervals: size mismatch");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1])) throw Error("detect_zero_intervals: x must be strictly increasing");
  for (double v : values)
    if (!(v >= -1e-9)) throw Error("detect_zero_intervals: concurrence below -1e-9");

  std::vector<EsdWindow> out;
  std::size_t i = 0;
  while (i < xs.size()) {
    if (values[i] > tol) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < xs.size() && values[j + 1] <= tol) ++j;

    EsdWindow w;
    w.pair = pair;
    w.axis = axis;
    w.kind = EsdWindow::Kind::Numeric;
    w.lo = i == 0 ? xs[0] : refine(curve, xs[i - 1], xs[i], tol);
    w.hi = j + 1 == xs.size() ? xs[j] : refine(curve, xs[j + 1], xs[j], tol);
    const bool wide_enough = i != j || w.width() > kMinWidth;
    if (wide_enough && vanishes_inside(curve, w)) out.push_back(std::move(w));
    i = j + 1;
  }
  return out;
}

SweepReport sweep(std::span<const double> alphas, std::size_t z_points) {
  if (z_points < 2) throw Error("sweep: need at least 2 z points");
  for (double a : alphas)
    if (!(a >= 0.0 && a <= 1.0)) throw Error("sweep: alpha must lie in [0, 1]");

  SweepReport report;
  report.rows.resize(alphas.size());
  const std::vector<double> zs = uniform_grid(0.0, 1.0, z_points);
  const BathSpec bath = SingleMode{};

  parallel_for(alphas.size(), [&](std::size_t k) {
    SweepRow row;
    row.alpha = alphas[k];
    row.beta = std::sqrt(std::max(0.0, 1.0 - row.alpha * row.alpha));
    row.beta_exceeds_twice_alpha = row.beta > 2.0 * row.alpha;
    row.ab = esd_window_ab(row.alpha, row.beta);
    row.ad = esd_window_ad(row.alpha, row.beta);
    row.both = simultaneous_window(row.alpha, row.beta);
    row.max_excess = -std::numeric_limits<double>::infinity();
    for (double z : zs) {
      const double e = closed_form_double_jc(Scenario::DoubleJCPhi, amplitude_pair_from_z(z, bath),
                                             row.alpha, row.beta)
                           .residual;
      if (e > row.max_excess) {
        row.max_excess = e;
        row.max_excess_z = z;
      }
    }
    report.rows[k] = std::move(row);
  });

  std::optional<double> last_ab, last_ad;
  for (const auto& row : report.rows) {
    if (row.ab && !row.ab->degenerate) {
      if (last_ab && row.ab->width() > *last_ab + 1e-12) report.ab_width_monotone = false;
      last_ab = row.ab->width();
    }
    if (row.ad) {
      if (last_ad && row.ad->width() > *last_ad + 1e-12) report.ad_width_monotone = false;
      last_ad = row.ad->width();
    }
  }
  return report;
}

SweepReport sweep(std::size_t resolution, std::size_t z_points) {
  if (resolution < 2) throw Error("sweep: resolution must be >= 2");
  const auto alphas = uniform_grid(0.0, 1.0, resolution);
  return sweep(std::span<const double>(alphas), z_points);
}

}  // namespace tanglesim
