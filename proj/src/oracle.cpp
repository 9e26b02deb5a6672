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

#include "richdist/oracle.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "richdist/errors.hpp"
#include "richdist/interval.hpp"

namespace richdist {

ApproxPointSet approx_points(const PointSet& ps, long precision_bits) {
  if (precision_bits < 16) throw std::invalid_argument("precision_bits must be at least 16");
  ApproxPointSet out;
  out.source_precision_bits = precision_bits;
  out.coords.reserve(ps.size());
  for (const auto& p : ps.points()) {
    const ComplexBox box = eval_interval(p, precision_bits);
    out.coords.push_back(ApproxPoint{box.re.midpoint(), box.im.midpoint()});
  }
  return out;
}

std::vector<ApproxCluster> approx_spectrum(const ApproxPointSet& aps, double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  const auto& c = aps.coords;
  std::vector<double> values;
  values.reserve(c.size() * (c.size() > 0 ? c.size() - 1 : 0) / 2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const double dx = c[i].x - c[j].x;
      const double dy = c[i].y - c[j].y;
      values.push_back(dx * dx + dy * dy);
    }
  }
  std::sort(values.begin(), values.end());
  std::vector<ApproxCluster> clusters;
  double sum = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i] - values[i - 1] >= tolerance) {
      if (!clusters.empty()) clusters.back().value = sum / clusters.back().multiplicity;
      clusters.push_back(ApproxCluster{values[i], 0});
      sum = 0;
    }
    ++clusters.back().multiplicity;
    sum += values[i];
  }
  if (!clusters.empty()) clusters.back().value = sum / clusters.back().multiplicity;
  return clusters;
}

CrossCheckResult cross_check(const PointSet& ps, double tolerance) {
  return cross_check(ps, distance_spectrum(ps), tolerance);
}

CrossCheckResult cross_check(const PointSet& ps, const DistanceSpectrum& exact,
                             double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  CrossCheckResult result;
  result.exact_classes = exact.classes.size();

  std::vector<Interval> values;
  values.reserve(exact.classes.size());
  for (const auto& cls : exact.classes) values.push_back(eval_interval(cls.value, 64).re);
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ma = values[a].midpoint();
    const double mb = values[b].midpoint();
    return ma != mb ? ma < mb : a < b;
  });

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < order.size(); ++i) {
    const std::size_t lo = order[i - 1];
    const std::size_t hi = order[i];
    if (!values[lo].precedes(values[hi]) ||
        compare_real(exact.classes[lo].value, exact.classes[hi].value) >= 0) {
      min_gap = 0;
      break;
    }
    BigFloat gap(values[hi].precision());
    mpfr_sub(gap.get(), values[hi].lower().get(), values[lo].upper().get(), MPFR_RNDD);
    min_gap = std::min(min_gap, gap.to_double(MPFR_RNDD));
  }
  result.certified_min_gap = min_gap;

  const auto clusters = approx_spectrum(approx_points(ps), tolerance);
  result.approx_clusters = clusters.size();
  if (!(min_gap > 3 * tolerance)) return result;

  auto mismatch = [&](const std::string& why) {
    throw OracleMismatchError(fmt::format("exact and floating spectra disagree: {}", why));
  };
  if (clusters.size() != order.size()) {
    mismatch(fmt::format("{} exact classes vs {} clusters", order.size(), clusters.size()));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& cls = exact.classes[order[i]];
    if (cls.multiplicity != clusters[i].multiplicity) {
      mismatch(fmt::format("class {} has multiplicity {} but its cluster has {}", cls.value.to_string(),
                           cls.multiplicity, clusters[i].multiplicity));
    }
    if (std::abs(values[order[i]].midpoint() - clusters[i].value) > tolerance) {
      mismatch(fmt::format("class {} ~ {} vs cluster value {}", cls.value.to_string(),
                           values[order[i]].midpoint(), clusters[i].value));
    }
  }
  result.status = CrossCheckStatus::match;
  return result;
}

}  // namespace richdist
