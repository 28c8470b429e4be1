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

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tanglesim/cmatrix.hpp"
#include "tanglesim/dynamics.hpp"

namespace tanglesim {

/// Interval on which a pair concurrence is exactly zero.
struct EsdWindow {
  enum class Kind { Analytic, Numeric };

  std::string pair;
  double lo = 0.0;
  double hi = 0.0;
  GridKind axis = GridKind::Z;
  Kind kind = Kind::Analytic;
  /// Set for the alpha = 0 limit, where the concurrence vanishes identically.
  bool degenerate = false;

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  /// Endpoints in |chi|^2; only meaningful on the z axis.
  double chi2_lo() const { return lo * lo; }
  double chi2_hi() const { return hi * hi; }
};

// Windows for the phi-type double Jaynes-Cummings state. They depend on
// (alpha, beta) only through |alpha / beta|, so the pair need not be normalized.

/// C_AB = 0 iff |chi|^2 >= |alpha/beta|. Absent for beta = 0 or |alpha/beta| > 1.
std::optional<EsdWindow> esd_window_ab(Complex alpha, Complex beta);

/// C_AD = 0 iff |chi| sqrt(1 - |chi|^2) >= |alpha/beta|; requires |beta| >= 2|alpha|.
std::optional<EsdWindow> esd_window_ad(Complex alpha, Complex beta);

/// Overlap of the AB and AD windows; nonempty iff |beta| > 2|alpha|.
std::optional<EsdWindow> simultaneous_window(Complex alpha, Complex beta);

/// Maximal runs of a sampled curve with value <= tol. When `curve` is given,
/// each interior endpoint is refined by bisection to 1e-6 in x and runs
/// narrower than that are dropped. Throws Error if xs is not strictly
/// increasing or the spans differ in length.
std::vector<EsdWindow> detect_zero_intervals(std::span<const double> xs,
                                             std::span<const double> values,
                                             const std::function<double(double)>& curve,
                                             const std::string& pair, GridKind axis,
                                             double tol = 1e-9);

struct SweepRow {
  double alpha = 0.0;
  double beta = 0.0;
  bool beta_exceeds_twice_alpha = false;
  std::optional<EsdWindow> ab;
  std::optional<EsdWindow> ad;
  std::optional<EsdWindow> both;
  double max_excess = 0.0;
  double max_excess_z = 0.0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  /// Window widths never grow with alpha over rows where the window exists.
  bool ab_width_monotone = true;
  bool ad_width_monotone = true;
};

/// One row per alpha (ascending), beta = sqrt(1 - alpha^2); max E_ABCD is
/// taken over `z_points` uniform z values of the closed-form phi-type curves.
SweepReport sweep(std::span<const double> alphas, std::size_t z_points = 501);
/// alphas uniformly spaced over [0, 1]; throws Error for resolution < 2.
SweepReport sweep(std::size_t resolution, std::size_t z_points = 501);

}  // namespace tanglesim
