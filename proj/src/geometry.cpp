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

#include "richdist/geometry.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "richdist/errors.hpp"

namespace richdist {

Turn::Turn(long numerator, long denominator) {
  if (denominator <= 0 || numerator <= 0 || numerator >= denominator) {
    throw std::invalid_argument("turn must satisfy 0 < a/b < 1, got " + std::to_string(numerator) +
                                "/" + std::to_string(denominator));
  }
  const long g = std::gcd(numerator, denominator);
  numerator_ = numerator / g;
  denominator_ = denominator / g;
}

std::string Turn::to_string() const {
  return std::to_string(numerator_) + "/" + std::to_string(denominator_);
}

Turn Turn::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw std::invalid_argument("turn must be written a/b");
  long a = 0;
  long b = 0;
  const auto head = text.substr(0, slash);
  const auto tail = text.substr(slash + 1);
  auto [pa, ea] = std::from_chars(head.data(), head.data() + head.size(), a);
  auto [pb, eb] = std::from_chars(tail.data(), tail.data() + tail.size(), b);
  if (ea != std::errc() || eb != std::errc() || pa != head.data() + head.size() ||
      pb != tail.data() + tail.size()) {
    throw std::invalid_argument("malformed turn '" + std::string(text) + "'");
  }
  return Turn(a, b);
}

CycloNum rotation_factor(const Turn& turn) {
  return CycloNum::zeta_power(cyclotomic_field(turn.denominator()), turn.numerator());
}

PointSet::PointSet(FieldPtr field) : field_(std::move(field)) {}

PointSet PointSet::from_points(FieldPtr field, std::vector<CycloNum> points) {
  PointSet out(std::move(field));
  for (auto& p : points) {
    if (p.order() != out.field_->order()) {
      throw FieldMismatchError("point " + p.to_string() + " is not in Q(zeta_" +
                               std::to_string(out.field_->order()) + ")");
    }
    out.append_point(std::move(p));
  }
  return out;
}

void PointSet::append_point(CycloNum p) {
  const auto [it, inserted] = index_.emplace(p, points_.size());
  if (!inserted) {
    throw DegeneracyError("duplicate point " + p.to_string() + " (already index " +
                          std::to_string(it->second) + ")");
  }
  points_.push_back(std::move(p));
}

std::optional<std::size_t> PointSet::index_of(const CycloNum& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

Transform embed_transform(const Transform& t, const FieldPtr& target) {
  return std::visit(
      [&](const auto& entry) -> Transform {
        using T = std::decay_t<decltype(entry)>;
        if constexpr (std::is_same_v<T, BasePolygon>) {
          return entry;
        } else if constexpr (std::is_same_v<T, Rotation>) {
          return Rotation{entry.source_copy, entry.center.embed(target), entry.turn};
        } else {
          return Reflection{entry.source_copy, entry.a.embed(target), entry.b.embed(target)};
        }
      },
      t);
}

// Adds the image of one copy under `map`, sharing only fixed vertices.
template <typename Map>
PointSet extend_copy(PointSet out, std::size_t source_copy, Map&& map,
                     std::vector<std::size_t>& new_copy) {
  if (source_copy >= out.copies().size()) {
    throw std::invalid_argument("source copy " + std::to_string(source_copy) + " does not exist");
  }
  const auto source = out.copies()[source_copy];
  std::vector<CycloNum> fresh;
  for (const std::size_t idx : source) {
    const CycloNum& p = out.points()[idx];
    CycloNum q = map(p);
    if (q == p) {
      new_copy.push_back(idx);
      continue;
    }
    if (const auto hit = out.index_of(q)) {
      throw DegeneracyError("image of point " + std::to_string(idx) + " coincides with point " +
                            std::to_string(*hit));
    }
    new_copy.push_back(out.size() + fresh.size());
    fresh.push_back(std::move(q));
  }
  std::vector<CycloNum> all = out.points();
  for (auto& q : fresh) all.push_back(std::move(q));
  return PointSet::from_points(out.field(), std::move(all));
}

}  // namespace

PointSet PointSet::embedded(const FieldPtr& target) const {
  if (target->order() == field_->order()) return *this;
  PointSet out(target);
  for (const auto& p : points_) out.append_point(p.embed(target));
  out.copies_ = copies_;
  for (const auto& entry : log_.entries) out.log_.entries.push_back(embed_transform(entry, target));
  return out;
}

bool operator==(const PointSet& a, const PointSet& b) {
  return a.field_->order() == b.field_->order() && a.points_ == b.points_ &&
         a.copies_ == b.copies_ && a.log_ == b.log_;
}

PointSet regular_ngon(int sides) {
  if (sides < 3) {
    throw DegeneracyError("a polygon needs at least 3 sides, got " + std::to_string(sides));
  }
  PointSet out(cyclotomic_field(sides));
  std::vector<std::size_t> cycle;
  for (int j = 0; j < sides; ++j) {
    out.append_point(CycloNum::zeta_power(out.field_, j));
    cycle.push_back(static_cast<std::size_t>(j));
  }
  out.copies_.push_back(std::move(cycle));
  out.log_.entries.push_back(BasePolygon{sides});
  return out;
}

PointSet rotate_about(const PointSet& ps, const CycloNum& center, const Turn& turn) {
  const FieldPtr field = join_fields(join_fields(ps.field(), center.field()),
                                     cyclotomic_field(turn.denominator()));
  const PointSet src = ps.embedded(field);
  const CycloNum c = center.embed(field);
  const CycloNum w = rotation_factor(turn).embed(field);
  PointSet out(field);
  for (const auto& p : src.points_) out.append_point(c + w * (p - c));
  out.copies_ = src.copies_;
  out.log_ = src.log_;
  out.log_.entries.push_back(Rotation{std::nullopt, c, turn});
  return out;
}

PointSet reflect_line(const PointSet& ps, const CycloNum& a, const CycloNum& b) {
  const FieldPtr field = join_fields(join_fields(ps.field(), a.field()), b.field());
  const CycloNum x = a.embed(field);
  const CycloNum y = b.embed(field);
  if (x == y) throw DegeneracyError("reflection line needs two distinct points");
  const PointSet src = ps.embedded(field);
  const CycloNum dir = y - x;
  const CycloNum unit = dir * dir.conj().inverse();
  PointSet out(field);
  for (const auto& p : src.points_) out.append_point(x + unit * (p - x).conj());
  out.copies_ = src.copies_;
  out.log_ = src.log_;
  out.log_.entries.push_back(Reflection{std::nullopt, x, y});
  return out;
}

PointSet add_rotated_copy(const PointSet& ps, std::size_t source_copy, const CycloNum& center,
                          const Turn& turn) {
  const FieldPtr field = join_fields(join_fields(ps.field(), center.field()),
                                     cyclotomic_field(turn.denominator()));
  const CycloNum c = center.embed(field);
  const CycloNum w = rotation_factor(turn).embed(field);
  std::vector<std::size_t> copy;
  PointSet base = ps.embedded(field);
  PointSet out = extend_copy(base, source_copy, [&](const CycloNum& p) { return c + w * (p - c); },
                             copy);
  out.copies_ = base.copies_;
  out.copies_.push_back(std::move(copy));
  out.log_ = std::move(base.log_);
  out.log_.entries.push_back(Rotation{source_copy, c, turn});
  return out;
}

PointSet add_reflected_copy(const PointSet& ps, std::size_t source_copy, const CycloNum& a,
                            const CycloNum& b) {
  const FieldPtr field = join_fields(join_fields(ps.field(), a.field()), b.field());
  const CycloNum x = a.embed(field);
  const CycloNum y = b.embed(field);
  if (x == y) throw DegeneracyError("reflection line needs two distinct points");
  const CycloNum dir = y - x;
  const CycloNum unit = dir * dir.conj().inverse();
  std::vector<std::size_t> copy;
  PointSet base = ps.embedded(field);
  PointSet out = extend_copy(
      base, source_copy, [&](const CycloNum& p) { return x + unit * (p - x).conj(); }, copy);
  out.copies_ = base.copies_;
  out.copies_.push_back(std::move(copy));
  out.log_ = std::move(base.log_);
  out.log_.entries.push_back(Reflection{source_copy, x, y});
  return out;
}

CycloNum squared_distance(const CycloNum& p, const CycloNum& q) {
  const CycloNum d = p - q;
  return d * d.conj();
}

PointSet replay(const TransformLog& log) {
  if (log.entries.empty() || !std::holds_alternative<BasePolygon>(log.entries.front())) {
    throw std::invalid_argument("transform log must start with a base polygon");
  }
  PointSet ps = regular_ngon(std::get<BasePolygon>(log.entries.front()).sides);
  for (std::size_t i = 1; i < log.entries.size(); ++i) {
    ps = std::visit(
        [&](const auto& entry) -> PointSet {
          using T = std::decay_t<decltype(entry)>;
          if constexpr (std::is_same_v<T, BasePolygon>) {
            throw std::invalid_argument("base polygon may only appear first in a transform log");
          } else if constexpr (std::is_same_v<T, Rotation>) {
            if (entry.source_copy) return add_rotated_copy(ps, *entry.source_copy, entry.center, entry.turn);
            return rotate_about(ps, entry.center, entry.turn);
          } else {
            if (entry.source_copy) return add_reflected_copy(ps, *entry.source_copy, entry.a, entry.b);
            return reflect_line(ps, entry.a, entry.b);
          }
        },
        log.entries[i]);
  }
  return ps;
}

}  // namespace richdist
