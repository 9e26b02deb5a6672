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

#include "richdist/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

#include "richdist/errors.hpp"
#include "richdist/oracle.hpp"

namespace richdist {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

// Fixed-point with the sign of zero dropped, so output is byte-stable.
std::string num(double v) {
  std::string s = fmt::format("{:.6f}", v);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::string render_svg(const PointSet& ps, const SvgOptions& options,
                       const DistanceSpectrum* spectrum) {
  if (ps.empty()) throw EmptySetError("cannot render an empty point set");
  const ApproxPointSet aps = approx_points(ps);
  const auto& c = aps.coords;

  double min_x = c[0].x, max_x = c[0].x, min_y = c[0].y, max_y = c[0].y;
  for (const auto& p : c) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  double extent = std::max(max_x - min_x, max_y - min_y);
  if (extent <= 0) extent = 2;
  const double side = extent * 1.2;
  const double cx = (min_x + max_x) / 2;
  const double cy = (min_y + max_y) / 2;
  const double stroke = extent * 0.004;
  const double radius = extent * 0.012;
  // SVG y grows downward; plot (x, -y).
  auto sx = [](double x) { return num(x); };
  auto sy = [](double y) { return num(-y); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{0}\" "
      "viewBox=\"{1} {2} {3} {3}\">\n",
      options.canvas, num(cx - side / 2), num(-cy - side / 2), num(side));
  out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
                     num(cx - side / 2), num(-cy - side / 2), num(side), num(side));

  if (options.highlight > 0) {
    std::optional<DistanceSpectrum> owned;
    if (spectrum == nullptr) {
      owned = distance_spectrum(ps);
      spectrum = &*owned;
    }
    std::vector<std::size_t> order(spectrum->classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return spectrum->classes[a].multiplicity > spectrum->classes[b].multiplicity;
    });
    const std::size_t shown = std::min(options.highlight, order.size());
    for (std::size_t rank = 0; rank < shown; ++rank) {
      const auto& cls = spectrum->classes[order[rank]];
      out += fmt::format(
          "<g id=\"class-{}\" stroke=\"{}\" stroke-width=\"{}\" stroke-opacity=\"0.55\" "
          "data-multiplicity=\"{}\">\n",
          order[rank], kPalette[rank % kPalette.size()], num(stroke * 1.5), cls.multiplicity);
      for (const auto& [i, j] : cls.witnesses) {
        out += fmt::format("  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", sx(c[i].x),
                           sy(c[i].y), sx(c[j].x), sy(c[j].y));
      }
      out += "</g>\n";
    }
  }

  if (options.edges && !ps.copies().empty()) {
    auto polygon = [&](const std::vector<std::size_t>& cycle, bool dashed) {
      std::string pts;
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (k > 0) pts += ' ';
        pts += sx(c[cycle[k]].x) + "," + sy(c[cycle[k]].y);
      }
      out += fmt::format("<polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"{}/>\n",
                         pts, num(stroke),
                         dashed ? fmt::format(" stroke-dasharray=\"{} {}\"", num(stroke * 4), num(stroke * 3))
                                : std::string());
    };
    for (std::size_t k = 1; k < ps.copies().size(); ++k) polygon(ps.copies()[k], true);
    polygon(ps.copies()[0], false);
  }

  for (std::size_t i = 0; i < c.size(); ++i) {
    out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\" data-index=\"{}\"/>\n",
                       sx(c[i].x), sy(c[i].y), num(radius), i);
  }
  if (options.labels) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"sans-serif\">{}</text>\n",
                         sx(c[i].x + radius * 1.5), sy(c[i].y + radius * 1.5), num(radius * 3), i);
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace richdist
