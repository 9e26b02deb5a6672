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

#include "richdist/spectrum.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "richdist/errors.hpp"
#include "richdist/interval.hpp"
#include "richdist/parallel.hpp"

namespace richdist {

namespace {

struct PartialSpectrum {
  std::unordered_map<CycloNum, std::size_t, CycloNumHash> index;
  std::vector<DistanceClass> classes;
};

void record(PartialSpectrum& part, CycloNum value, IndexPair pair, std::size_t cap) {
  const auto [it, inserted] = part.index.try_emplace(value, part.classes.size());
  if (inserted) part.classes.push_back(DistanceClass{std::move(value), 0, {}});
  DistanceClass& cls = part.classes[it->second];
  ++cls.multiplicity;
  if (cls.witnesses.size() < cap) cls.witnesses.push_back(pair);
}

}  // namespace

DistanceSpectrum distance_spectrum(const PointSet& ps, const SpectrumOptions& options) {
  const std::size_t n = ps.size();
  const auto& pts = ps.points();
  std::vector<CycloNum> conjugates;
  conjugates.reserve(n);
  for (const auto& p : pts) conjugates.push_back(p.conj());

  unsigned workers = options.workers == 0 ? worker_count() : options.workers;
  if (n < 48) workers = 1;
  std::vector<PartialSpectrum> parts(workers);
  parallel_slices(n, workers, true, [&](unsigned w, std::size_t begin, std::size_t end) {
    PartialSpectrum& part = parts[w];
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        record(part, (pts[i] - pts[j]) * (conjugates[i] - conjugates[j]), {i, j},
               options.witness_cap);
      }
    }
  });

  // Slices cover increasing row ranges, so merging in slice order keeps
  // classes sorted by first witness and witness lists sorted.
  DistanceSpectrum out;
  out.point_count = n;
  out.total_pairs = n < 2 ? 0 : n * (n - 1) / 2;
  std::unordered_map<CycloNum, std::size_t, CycloNumHash> index;
  for (auto& part : parts) {
    for (auto& cls : part.classes) {
      const auto [it, inserted] = index.try_emplace(cls.value, out.classes.size());
      if (inserted) {
        out.classes.push_back(std::move(cls));
        continue;
      }
      DistanceClass& target = out.classes[it->second];
      target.multiplicity += cls.multiplicity;
      for (const auto& w : cls.witnesses) {
        if (target.witnesses.size() >= options.witness_cap) break;
        target.witnesses.push_back(w);
      }
    }
  }
  return out;
}

std::size_t rich_classes(const DistanceSpectrum& spectrum, std::size_t q) {
  if (q == 0) throw std::invalid_argument("rich_classes: q must be at least 1");
  return static_cast<std::size_t>(
      std::count_if(spectrum.classes.begin(), spectrum.classes.end(),
                    [q](const DistanceClass& c) { return c.multiplicity >= q; }));
}

std::size_t regular_polygon_class_count(int m) {
  if (m < 3) throw std::invalid_argument("regular_polygon_class_count: m must be at least 3");
  const auto spectrum = distance_spectrum(regular_ngon(m));
  const auto sides = static_cast<std::size_t>(m);
  std::size_t full = 0;
  std::size_t half = 0;
  for (const auto& cls : spectrum.classes) {
    if (cls.multiplicity == sides) {
      ++full;
    } else if (m % 2 == 0 && cls.multiplicity == sides / 2) {
      ++half;
    } else {
      throw std::logic_error(fmt::format("regular {}-gon: unexpected class {} with multiplicity {}",
                                         m, cls.value.to_string(), cls.multiplicity));
    }
  }
  const std::size_t expected = (sides - 1) / 2;
  if (full != expected || half != (m % 2 == 0 ? 1u : 0u)) {
    throw std::logic_error(fmt::format("regular {}-gon: {} classes of multiplicity {}, expected {}",
                                       m, full, m, expected));
  }
  return full;
}

Diameter diameter_multiplicity(const DistanceSpectrum& spectrum) {
  if (spectrum.point_count < 2 || spectrum.classes.empty()) {
    throw TooFewPointsError("diameter needs at least 2 points");
  }
  std::vector<Interval> values;
  values.reserve(spectrum.classes.size());
  for (const auto& cls : spectrum.classes) values.push_back(eval_interval(cls.value, 64).re);
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[best].precedes(values[i])) {
      best = i;
    } else if (!values[i].precedes(values[best]) &&
               compare_real(spectrum.classes[i].value, spectrum.classes[best].value) > 0) {
      best = i;
    }
  }
  const auto& cls = spectrum.classes[best];
  return Diameter{cls.value, cls.multiplicity, best};
}

Diameter diameter_multiplicity(const PointSet& ps) {
  if (ps.size() < 2) throw TooFewPointsError("diameter needs at least 2 points");
  return diameter_multiplicity(distance_spectrum(ps));
}

SpectrumStats spectrum_stats(const DistanceSpectrum& spectrum) {
  SpectrumStats stats;
  stats.point_count = spectrum.point_count;
  stats.total_pairs = spectrum.total_pairs;
  stats.distinct = spectrum.classes.size();
  for (const auto& cls : spectrum.classes) {
    stats.max_multiplicity = std::max(stats.max_multiplicity, cls.multiplicity);
    ++stats.histogram[cls.multiplicity];
    if (cls.multiplicity <= spectrum.point_count) ++stats.at_most_n_classes;
  }
  return stats;
}

std::string format_report(const DistanceSpectrum& spectrum, ReportFormat format,
                          bool include_histogram) {
  const SpectrumStats stats = spectrum_stats(spectrum);
  std::string out;
  auto approx = [](const CycloNum& v) { return eval_interval(v, 64).re.midpoint(); };
  if (format == ReportFormat::key_value) {
    out += fmt::format("points={}\npairs={}\ndistinct={}\nmax_multiplicity={}\nat_most_n={}\n",
                       stats.point_count, stats.total_pairs, stats.distinct,
                       stats.max_multiplicity, stats.at_most_n_classes);
    for (std::size_t i = 0; i < spectrum.classes.size(); ++i) {
      const auto& cls = spectrum.classes[i];
      out += fmt::format("class.{0}.multiplicity={1}\nclass.{0}.value={2}\nclass.{0}.approx={3:.12f}\n",
                         i, cls.multiplicity, cls.value.to_string(), approx(cls.value));
      if (!cls.witnesses.empty()) {
        out += fmt::format("class.{}.first={},{}\n", i, cls.witnesses.front().first,
                           cls.witnesses.front().second);
      }
    }
    if (include_histogram) {
      for (const auto& [mult, count] : stats.histogram) {
        out += fmt::format("histogram.{}={}\n", mult, count);
      }
    }
    return out;
  }

  out += fmt::format("points: {}\npairs: {}\ndistinct distances: {}\nmax multiplicity: {}\n",
                     stats.point_count, stats.total_pairs, stats.distinct, stats.max_multiplicity);
  out += fmt::format("classes occurring at most n times: {}\n", stats.at_most_n_classes);
  for (std::size_t i = 0; i < spectrum.classes.size(); ++i) {
    const auto& cls = spectrum.classes[i];
    out += fmt::format("class {}: multiplicity {}, squared distance {} (~{:.12f})", i,
                       cls.multiplicity, cls.value.to_string(), approx(cls.value));
    if (!cls.witnesses.empty()) {
      out += fmt::format(", first pair ({}, {})", cls.witnesses.front().first,
                         cls.witnesses.front().second);
    }
    out += "\n";
  }
  if (include_histogram) {
    out += "histogram:\n";
    for (const auto& [mult, count] : stats.histogram) {
      out += fmt::format("  multiplicity {}: {} class(es)\n", mult, count);
    }
  }
  return out;
}

}  // namespace richdist
