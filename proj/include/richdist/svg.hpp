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
#include <string>

#include "richdist/geometry.hpp"
#include "richdist/spectrum.hpp"

namespace richdist {

struct SvgOptions {
  /// Width and height of the square canvas in pixels.
  int canvas = 640;
  /// Draw polygon copies: the base polygon solid, transformed copies dashed.
  bool edges = true;
  /// Number of richest distance classes to draw as colored segments.
  std::size_t highlight = 0;
  /// Index labels next to the markers.
  bool labels = false;
};

/// Deterministic SVG 1.1 rendering. The viewport is the bounding box of the
/// approximate coordinates plus a 10% margin. Throws EmptySetError for an
/// empty set. `spectrum` is only consulted when highlighting and is computed
/// on demand when null.
std::string render_svg(const PointSet& ps, const SvgOptions& options = {},
                       const DistanceSpectrum* spectrum = nullptr);

}  // namespace richdist
