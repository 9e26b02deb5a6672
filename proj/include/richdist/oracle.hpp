// Copyright 2026 The richdist Authors.
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
#include <vector>

#include "richdist/geometry.hpp"
#include "richdist/spectrum.hpp"

namespace richdist {

struct ApproxPoint {
  double x = 0;
  double y = 0;
};

/// Floating-point coordinates, same order as the source PointSet.
struct ApproxPointSet {
  std::vector<ApproxPoint> coords;
  long source_precision_bits = 0;
};

/// Midpoints of the certified boxes of every point.
ApproxPointSet approx_points(const PointSet& ps, long precision_bits = 64);

struct ApproxCluster {
  /// Mean of the clustered squared distances.
  double value = 0;
  std::size_t multiplicity = 0;
};

/// Sorted squared distances, split wherever consecutive values differ by at
/// least `tolerance`. Clusters come out in increasing value order.
std::vector<ApproxCluster> approx_spectrum(const ApproxPointSet& aps, double tolerance);

enum class CrossCheckStatus { match, inconclusive };

struct CrossCheckResult {
  CrossCheckStatus status = CrossCheckStatus::inconclusive;
  /// Certified lower bound on the smallest gap between distinct exact values
  /// (infinity with fewer than two classes, 0 when not certified).
  double certified_min_gap = 0;
  std::size_t exact_classes = 0;
  std::size_t approx_clusters = 0;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Compares the exact spectrum with the floating-point one. When the
/// certified minimum gap exceeds 3 * tolerance the value-ordered
/// multiplicities must agree, otherwise OracleMismatchError is thrown; below
/// that margin the result is inconclusive.
CrossCheckResult cross_check(const PointSet& ps, double tolerance = kDefaultTolerance);
CrossCheckResult cross_check(const PointSet& ps, const DistanceSpectrum& exact,
                             double tolerance = kDefaultTolerance);

}  // namespace richdist
