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
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "richdist/cyclo.hpp"
#include "richdist/geometry.hpp"

namespace richdist {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// One exact squared-distance value and the pairs realizing it.
struct DistanceClass {
  CycloNum value;
  std::size_t multiplicity = 0;
  /// Pairs (i, j), i < j, in lexicographic order; may be truncated by
  /// SpectrumOptions::witness_cap.
  std::vector<IndexPair> witnesses;
};

struct DistanceSpectrum {
  /// Ordered by first witness pair.
  std::vector<DistanceClass> classes;
  std::size_t total_pairs = 0;
  std::size_t point_count = 0;
};

struct SpectrumOptions {
  std::size_t witness_cap = std::numeric_limits<std::size_t>::max();
  /// 0 selects worker_count().
  unsigned workers = 0;
};

/// Groups all n(n-1)/2 squared distances into exact equality classes by
/// hashing canonical forms. The result does not depend on the worker count.
DistanceSpectrum distance_spectrum(const PointSet& ps, const SpectrumOptions& options = {});

/// Number of classes with multiplicity >= q (q >= 1).
std::size_t rich_classes(const DistanceSpectrum& spectrum, std::size_t q);

/// Checks that the regular m-gon has exactly floor((m-1)/2) classes of
/// multiplicity m (plus one diameter class of multiplicity m/2 for even m)
/// and returns that count. A violation throws std::logic_error.
std::size_t regular_polygon_class_count(int m);

struct Diameter {
  CycloNum value;
  std::size_t multiplicity = 0;
  std::size_t class_index = 0;
};

/// Largest squared distance, located with certified comparisons.
Diameter diameter_multiplicity(const DistanceSpectrum& spectrum);
Diameter diameter_multiplicity(const PointSet& ps);

struct SpectrumStats {
  std::size_t point_count = 0;
  std::size_t total_pairs = 0;
  std::size_t distinct = 0;
  std::size_t max_multiplicity = 0;
  /// multiplicity -> number of classes with that multiplicity
  std::map<std::size_t, std::size_t> histogram;
  /// Classes occurring at least once but for at most n pairs.
  std::size_t at_most_n_classes = 0;
};

SpectrumStats spectrum_stats(const DistanceSpectrum& spectrum);

enum class ReportFormat { text, key_value };

/// Deterministic spectrum report.
std::string format_report(const DistanceSpectrum& spectrum, ReportFormat format,
                          bool include_histogram);

}  // namespace richdist
