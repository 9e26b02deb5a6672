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

struct Decomposition {
  long k = 0;
  long r = 0;
};

/// n = (m+1) k + r with k = floor((n-2)/(m+1)), so that 2 <= r <= m+2 and
/// k >= 1. Throws BelowThresholdError when n < m + 3.
Decomposition decompose(long n, long m);

/// One reflection step: copy `source_copy` mirrored over the edge between
/// point indices a and b.
struct EdgeChoice {
  std::size_t source_copy = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const EdgeChoice&, const EdgeChoice&) = default;
};

/// Every choice a builder made, enough to rebuild the configuration.
/// Rotations always act on the base polygon (copy 0) about point 0.
struct ConstructionPlan {
  int theorem = 1;
  long n = 0;
  /// Richness surplus; 0 for the n+1 construction.
  long m = 0;
  long k = 0;
  long r = 0;
  int sides = 0;
  std::vector<Turn> turns;
  std::vector<EdgeChoice> edges;
  friend bool operator==(const ConstructionPlan&, const ConstructionPlan&) = default;
};

struct RichWitness {
  std::size_t class_index = 0;
  CycloNum value;
  std::size_t multiplicity = 0;
};

struct Verdict {
  bool pass = false;
  std::size_t required_classes = 0;
  std::size_t required_multiplicity = 0;
  /// Classes reaching the required multiplicity, in spectrum order.
  std::vector<RichWitness> witnesses;
  /// Number of classes reaching the required multiplicity.
  std::size_t achieved_classes = 0;
  /// Largest q such that at least required_classes classes occur >= q times
  /// (0 when there are fewer classes than required).
  std::size_t best_multiplicity = 0;
  /// Witness pairs of rich classes whose endpoints share no polygon copy:
  /// accidental coincidences, which only strengthen the claim.
  std::size_t cross_copy_pairs = 0;
};

Verdict verify_claim(const DistanceSpectrum& spectrum, std::size_t classes,
                     std::size_t multiplicity);
Verdict verify_claim(const PointSet& ps, std::size_t classes, std::size_t multiplicity);

/// Fills Verdict::cross_copy_pairs using the copies recorded in `ps`.
void annotate_cross_copy(const PointSet& ps, const DistanceSpectrum& spectrum, Verdict& verdict);

struct Construction {
  PointSet points;
  ConstructionPlan plan;
  Verdict verdict;
};

/// n points with floor(n/4) distances occurring at least n+1 times: two
/// regular (m+1)-gons glued at a vertex (n = 2m+1, point reflection through
/// that vertex) or along an edge (n = 2m, mirror over the edge).
Construction build_theorem1(long n);

/// n points with floor(n/(2(m+1))) distances occurring at least n+m times:
/// a regular (k+2)-gon, r-2 rotated copies about one vertex and m+2-r
/// chained edge reflections, searched until exact verification passes.
Construction build_theorem2(long n, long m);

/// Rebuilds the configuration recorded in a plan.
PointSet replay_plan(const ConstructionPlan& plan);

/// Candidate rotation turns for a configuration living in Q(zeta_order),
/// cheapest resulting field first.
std::vector<Turn> turn_pool(long order, std::size_t limit);

/// Required (classes, multiplicity) for a plan's theorem.
std::pair<std::size_t, std::size_t> claim_thresholds(const ConstructionPlan& plan);

}  // namespace richdist
