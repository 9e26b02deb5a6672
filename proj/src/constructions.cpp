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

#include "richdist/constructions.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "richdist/errors.hpp"

namespace richdist {

Decomposition decompose(long n, long m) {
  if (m < 1) throw std::invalid_argument("decompose: m must be at least 1");
  if (n < m + 3) {
    throw BelowThresholdError(
        fmt::format("n = {} < m + 3 = {}: the claim holds vacuously", n, m + 3));
  }
  Decomposition d;
  d.k = (n - 2) / (m + 1);
  d.r = n - (m + 1) * d.k;
  if (d.k < 1 || d.r < 2 || d.r > m + 2) {
    throw std::logic_error(fmt::format("decompose({}, {}) gave k = {}, r = {}", n, m, d.k, d.r));
  }
  return d;
}

Verdict verify_claim(const DistanceSpectrum& spectrum, std::size_t classes,
                     std::size_t multiplicity) {
  Verdict v;
  v.required_classes = classes;
  v.required_multiplicity = multiplicity;
  std::vector<std::size_t> mults;
  mults.reserve(spectrum.classes.size());
  for (std::size_t i = 0; i < spectrum.classes.size(); ++i) {
    const auto& cls = spectrum.classes[i];
    mults.push_back(cls.multiplicity);
    if (cls.multiplicity >= multiplicity) {
      v.witnesses.push_back(RichWitness{i, cls.value, cls.multiplicity});
    }
  }
  v.achieved_classes = v.witnesses.size();
  std::sort(mults.begin(), mults.end(), std::greater<>());
  if (classes == 0) {
    v.best_multiplicity = mults.empty() ? 0 : mults.front();
  } else if (mults.size() >= classes) {
    v.best_multiplicity = mults[classes - 1];
  }
  v.pass = v.achieved_classes >= classes;
  return v;
}

Verdict verify_claim(const PointSet& ps, std::size_t classes, std::size_t multiplicity) {
  const auto spectrum = distance_spectrum(ps);
  Verdict v = verify_claim(spectrum, classes, multiplicity);
  annotate_cross_copy(ps, spectrum, v);
  return v;
}

void annotate_cross_copy(const PointSet& ps, const DistanceSpectrum& spectrum, Verdict& verdict) {
  verdict.cross_copy_pairs = 0;
  if (ps.copies().empty()) return;
  std::vector<std::vector<std::size_t>> membership(ps.size());
  for (std::size_t c = 0; c < ps.copies().size(); ++c) {
    for (const std::size_t idx : ps.copies()[c]) membership[idx].push_back(c);
  }
  auto share_copy = [&](std::size_t i, std::size_t j) {
    for (const std::size_t c : membership[i]) {
      if (std::find(membership[j].begin(), membership[j].end(), c) != membership[j].end()) {
        return true;
      }
    }
    return false;
  };
  for (const auto& w : verdict.witnesses) {
    for (const auto& [i, j] : spectrum.classes[w.class_index].witnesses) {
      if (!share_copy(i, j)) ++verdict.cross_copy_pairs;
    }
  }
}

std::vector<Turn> turn_pool(long order, std::size_t limit) {
  const long max_den = std::min<long>(96, std::max<long>(12, 2 * order));
  using Key = std::tuple<long, bool, long, long>;
  std::vector<Key> keyed;
  for (long b = 2; b <= max_den; ++b) {
    const long joined = std::lcm(order, b);
    const long degree = euler_phi(joined);
    for (long a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      keyed.emplace_back(degree, joined != order, b, a);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Turn> out;
  for (const auto& [degree, grows, b, a] : keyed) {
    if (out.size() >= limit) break;
    out.emplace_back(a, b);
  }
  return out;
}

std::pair<std::size_t, std::size_t> claim_thresholds(const ConstructionPlan& plan) {
  const auto n = static_cast<std::size_t>(plan.n);
  if (plan.theorem == 1) return {n / 4, n + 1};
  const auto m = static_cast<std::size_t>(plan.m);
  return {n / (2 * (m + 1)), n + m};
}

PointSet replay_plan(const ConstructionPlan& plan) {
  PointSet ps = regular_ngon(plan.sides);
  for (const auto& turn : plan.turns) ps = add_rotated_copy(ps, 0, ps[0], turn);
  for (const auto& e : plan.edges) ps = add_reflected_copy(ps, e.source_copy, ps[e.a], ps[e.b]);
  return ps;
}

namespace {

std::optional<Construction> finish(PointSet ps, const ConstructionPlan& plan) {
  if (ps.size() != static_cast<std::size_t>(plan.n)) {
    throw std::logic_error(fmt::format("construction produced {} points, expected {}", ps.size(),
                                       plan.n));
  }
  const auto [classes, mult] = claim_thresholds(plan);
  const auto spectrum = distance_spectrum(ps);
  Verdict verdict = verify_claim(spectrum, classes, mult);
  if (!verdict.pass) return std::nullopt;
  annotate_cross_copy(ps, spectrum, verdict);
  return Construction{std::move(ps), plan, std::move(verdict)};
}

class Theorem2Search {
 public:
  Theorem2Search(long n, long m) {
    const auto d = decompose(n, m);
    plan_.theorem = 2;
    plan_.n = n;
    plan_.m = m;
    plan_.k = d.k;
    plan_.r = d.r;
    plan_.sides = static_cast<int>(d.k + 2);
    rotations_ = static_cast<std::size_t>(d.r - 2);
    reflections_ = static_cast<std::size_t>(m + 2 - d.r);
    const long identity = (d.k + 2) + (d.r - 2) * (d.k + 1) + (m + 2 - d.r) * d.k;
    if (identity != n) {
      throw std::logic_error(fmt::format("point-count identity gives {} for n = {}", identity, n));
    }
  }

  Construction run() {
    PointSet base = regular_ngon(plan_.sides);
    std::vector<std::size_t> anchors{0};
    if (rotate(base, anchors)) return std::move(*result_);
    throw ExhaustedSearchError(fmt::format(
        "no rotation/reflection choice verified for n = {}, m = {}", plan_.n, plan_.m));
  }

 private:
  static constexpr std::size_t kTurnCandidates = 48;
  static constexpr std::size_t kAttemptBudget = 20000;

  void spend() {
    if (++attempts_ > kAttemptBudget) {
      throw ExhaustedSearchError(fmt::format("search budget exhausted for n = {}, m = {}",
                                             plan_.n, plan_.m));
    }
  }

  bool rotate(const PointSet& ps, std::vector<std::size_t>& anchors) {
    if (plan_.turns.size() == rotations_) return reflect(ps, anchors);
    for (const Turn& turn : turn_pool(ps.field()->order(), kTurnCandidates)) {
      if (std::find(plan_.turns.begin(), plan_.turns.end(), turn) != plan_.turns.end()) continue;
      spend();
      std::optional<PointSet> next;
      try {
        next = add_rotated_copy(ps, 0, ps[0], turn);
      } catch (const DegeneracyError&) {
        continue;
      }
      plan_.turns.push_back(turn);
      anchors.push_back(0);
      if (rotate(*next, anchors)) return true;
      anchors.pop_back();
      plan_.turns.pop_back();
    }
    return false;
  }

  // Offsets from a copy's anchor edge: the opposite edge first, then
  // alternating outward, the anchor edge itself last.
  std::vector<std::size_t> edge_offsets() const {
    const auto s = static_cast<std::size_t>(plan_.sides);
    const std::size_t opposite = (s + 1) / 2;
    std::vector<std::size_t> out{opposite};
    for (std::size_t step = 1; out.size() < s - 1; ++step) {
      if (opposite + step < s) out.push_back(opposite + step);
      if (opposite > step) out.push_back(opposite - step);
    }
    out.push_back(0);
    return out;
  }

  bool reflect(const PointSet& ps, std::vector<std::size_t>& anchors) {
    if (plan_.edges.size() == reflections_) {
      result_ = finish(ps, plan_);
      return result_.has_value();
    }
    const auto s = static_cast<std::size_t>(plan_.sides);
    const auto offsets = edge_offsets();
    for (std::size_t c = ps.copies().size(); c-- > 0;) {
      const auto& copy = ps.copies()[c];
      for (const std::size_t off : offsets) {
        const std::size_t pos = (anchors[c] + off) % s;
        const EdgeChoice edge{c, copy[pos], copy[(pos + 1) % s]};
        spend();
        std::optional<PointSet> next;
        try {
          next = add_reflected_copy(ps, c, ps[edge.a], ps[edge.b]);
        } catch (const DegeneracyError&) {
          continue;
        }
        plan_.edges.push_back(edge);
        anchors.push_back(pos);
        if (reflect(*next, anchors)) return true;
        anchors.pop_back();
        plan_.edges.pop_back();
      }
    }
    return false;
  }

  ConstructionPlan plan_;
  std::size_t rotations_ = 0;
  std::size_t reflections_ = 0;
  std::size_t attempts_ = 0;
  std::optional<Construction> result_;
};

}  // namespace

Construction build_theorem1(long n) {
  if (n < 4) {
    throw BelowThresholdError(fmt::format("n = {} < 4: the claim holds vacuously", n));
  }
  ConstructionPlan plan;
  plan.theorem = 1;
  plan.n = n;
  const long half = n / 2;
  plan.sides = static_cast<int>(half + 1);
  const PointSet base = regular_ngon(plan.sides);

  if (n % 2 == 0) {
    plan.edges.push_back(EdgeChoice{0, 0, 1});
    if (auto built = finish(replay_plan(plan), plan)) return std::move(*built);
    throw ExhaustedSearchError(fmt::format("edge reflection failed to verify for n = {}", n));
  }

  std::vector<Turn> candidates{Turn(1, 2)};
  for (const Turn& t : turn_pool(base.field()->order(), 32)) {
    if (!(t == Turn(1, 2))) candidates.push_back(t);
  }
  for (const Turn& turn : candidates) {
    plan.turns = {turn};
    std::optional<PointSet> ps;
    try {
      ps = add_rotated_copy(base, 0, base[0], turn);
    } catch (const DegeneracyError&) {
      continue;
    }
    if (auto built = finish(std::move(*ps), plan)) return std::move(*built);
  }
  throw ExhaustedSearchError(fmt::format("no rotation turn verified for n = {}", n));
}

Construction build_theorem2(long n, long m) { return Theorem2Search(n, m).run(); }

}  // namespace richdist
