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

#include <optional>
#include <string>
#include <string_view>

#include "richdist/geometry.hpp"

namespace richdist {

/// Text form of a point set:
///
///   richdist 1
///   cyclo N
///   points K
///   <phi(N) rationals>      (K lines, coefficients of 1, z, ..., z^(d-1))
///
/// optionally followed by the transform log
///
///   log L
///   polygon S
///   rotate <copy|*> a/b <phi(N) rationals: center>
///   reflect <copy|*> <phi(N) rationals: a> <phi(N) rationals: b>
///
/// Rationals are "num/den" in lowest terms, or "num" when den = 1.
std::string serialize_points(const PointSet& ps);

/// Inverse of serialize_points. A present log must replay to exactly the
/// listed points. Throws ParseError with line and column.
PointSet parse_points(std::string_view text, std::optional<long> expected_order = std::nullopt);

PointSet read_points_file(const std::string& path);
void write_points_file(const std::string& path, const PointSet& ps);

}  // namespace richdist
