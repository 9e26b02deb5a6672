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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "richdist/cyclo.hpp"

namespace richdist {

/// A rotation angle as a reduced fraction of a full revolution, 0 < a/b < 1.
class Turn {
 public:
  Turn(long numerator, long denominator);

  long numerator() const noexcept { return numerator_; }
  long denominator() const noexcept { return denominator_; }
  std::string to_string() const;
  /// Parses "a/b".
  static Turn parse(std::string_view text);

  friend bool operator==(const Turn&, const Turn&) = default;

 private:
  long numerator_;
  long denominator_;
};

/// zeta_b^a, the unit complex number for a turn a/b, in Q(zeta_b).
CycloNum rotation_factor(const Turn& turn);

struct BasePolygon {
  int sides;
  friend bool operator==(const BasePolygon&, const BasePolygon&) = default;
};

/// Rotation about `center`. Without a source copy the whole set is mapped in
/// place; with one, the image of that polygon copy is added as a new copy.
struct Rotation {
  std::optional<std::size_t> source_copy;
  CycloNum center;
  Turn turn;
  friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// Reflection across the line through `a` and `b`; same source-copy
/// semantics as Rotation.
struct Reflection {
  std::optional<std::size_t> source_copy;
  CycloNum a;
  CycloNum b;
  friend bool operator==(const Reflection&, const Reflection&) = default;
};

using Transform = std::variant<BasePolygon, Rotation, Reflection>;

struct TransformLog {
  std::vector<Transform> entries;
  friend bool operator==(const TransformLog&, const TransformLog&) = default;
};

/// Distinct points of one cyclotomic field, together with the polygon copies
/// they were assembled from and the log that reproduces them.
class PointSet {
 public:
  explicit PointSet(FieldPtr field);

  /// Validates that every point lives in `field` and that points are
  /// pairwise distinct. The result carries no copies and an empty log.
  static PointSet from_points(FieldPtr field, std::vector<CycloNum> points);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<CycloNum>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const CycloNum& operator[](std::size_t i) const { return points_.at(i); }

  /// Polygon copies as vertex-index cycles; copy 0 is the base polygon.
  const std::vector<std::vector<std::size_t>>& copies() const noexcept { return copies_; }
  const TransformLog& log() const noexcept { return log_; }

  std::optional<std::size_t> index_of(const CycloNum& p) const;

  /// Same set with every point and log value embedded into `target`.
  PointSet embedded(const FieldPtr& target) const;

  friend bool operator==(const PointSet& a, const PointSet& b);

 private:
  void append_point(CycloNum p);

  FieldPtr field_;
  std::vector<CycloNum> points_;
  std::vector<std::vector<std::size_t>> copies_;
  TransformLog log_;
  std::unordered_map<CycloNum, std::size_t, CycloNumHash> index_;

  friend PointSet regular_ngon(int sides);
  friend PointSet rotate_about(const PointSet&, const CycloNum&, const Turn&);
  friend PointSet reflect_line(const PointSet&, const CycloNum&, const CycloNum&);
  friend PointSet add_rotated_copy(const PointSet&, std::size_t, const CycloNum&, const Turn&);
  friend PointSet add_reflected_copy(const PointSet&, std::size_t, const CycloNum&,
                                     const CycloNum&);
};

/// Vertices zeta_s^j, j = 0..s-1: unit circumradius, a vertex at 1.
PointSet regular_ngon(int sides);

/// Maps every point p to center + zeta_b^a (p - center).
PointSet rotate_about(const PointSet& ps, const CycloNum& center, const Turn& turn);

/// Maps every point p to a + (b - a) conj(p - a) / conj(b - a).
PointSet reflect_line(const PointSet& ps, const CycloNum& a, const CycloNum& b);

/// Adds the rotated image of copy `source_copy` as a new copy. Vertices
/// fixed by the rotation are shared; any other image landing on an existing
/// point raises DegeneracyError.
PointSet add_rotated_copy(const PointSet& ps, std::size_t source_copy, const CycloNum& center,
                          const Turn& turn);

/// Adds the reflected image of copy `source_copy`; sharing rules as for
/// add_rotated_copy (the points on the mirror line are the fixed ones).
PointSet add_reflected_copy(const PointSet& ps, std::size_t source_copy, const CycloNum& a,
                            const CycloNum& b);

/// (p - q) conj(p - q): real, and zero iff p = q.
CycloNum squared_distance(const CycloNum& p, const CycloNum& q);

/// Rebuilds a point set from its log.
PointSet replay(const TransformLog& log);

}  // namespace richdist
