#include "tcg/growth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "tcg/errors.hpp"

namespace tcg {

GeneratingSet::GeneratingSet(const VAGroupData& group, std::vector<GroupElement> elements)
    : inputs_(std::move(elements)) {
  if (inputs_.empty()) throw std::invalid_argument("generating set is empty");
  for (const auto& s : inputs_) {
    check_element(group, s);
    if (is_identity(s)) continue;
    symmetric_.push_back(s);
    symmetric_.push_back(inverse(group, s));
  }
  std::sort(symmetric_.begin(), symmetric_.end());
  symmetric_.erase(std::unique(symmetric_.begin(), symmetric_.end()), symmetric_.end());
  if (symmetric_.empty()) throw std::invalid_argument("generating set contains only the identity");
}

std::uint64_t BallEnumeration::size(std::size_t r) const {
  std::uint64_t total = 0;
  for (std::size_t l = 0; l <= r && l < layers.size(); ++l) total += layers[l].size();
  return total;
}

namespace {

using ElementSet = std::unordered_set<GroupElement, GroupElementHash>;

// Grows `layers` by one BFS step; returns false when the frontier is empty.
bool expand(const VAGroupData& group, const GeneratingSet& gens, ElementSet& seen,
            std::vector<std::vector<GroupElement>>& layers, std::size_t budget) {
  std::vector<GroupElement> next;
  for (const auto& g : layers.back())
    for (const auto& s : gens.symmetric()) {
      GroupElement h = multiply(group, s, g);
      if (seen.contains(h)) continue;
      if (seen.size() >= budget)
        throw ResourceLimitError("ball enumeration exceeds the element budget of " + std::to_string(budget));
      seen.insert(h);
      next.push_back(std::move(h));
    }
  if (next.empty()) return false;
  std::sort(next.begin(), next.end());
  layers.push_back(std::move(next));
  return true;
}

}  // namespace

BallEnumeration bfs_ball(const VAGroupData& group, const GeneratingSet& gens, std::size_t r_max, std::size_t budget) {
  BallEnumeration ball;
  ElementSet seen;
  ball.layers.push_back({identity_element(group)});
  seen.insert(ball.layers.front().front());
  for (std::size_t r = 1; r <= r_max; ++r) {
    if (!expand(group, gens, seen, ball.layers, budget)) ball.layers.emplace_back();
  }
  return ball;
}

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::ball: return "ball";
    case SeriesKind::twisted_classes: return "twisted-classes";
    case SeriesKind::class_subset: return "class-subset";
    case SeriesKind::quotient: return "quotient";
  }
  return "unknown";
}

GrowthSeries beta_series(const BallEnumeration& ball) {
  GrowthSeries series{SeriesKind::ball, {}};
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < ball.layers.size(); ++r) {
    total += ball.layers[r].size();
    series.points.push_back({static_cast<std::int64_t>(r), total});
  }
  return series;
}

GrowthSeries f_r_series(const TwistedConjugacy& engine, const BallEnumeration& ball) {
  GrowthSeries series{SeriesKind::twisted_classes, {}};
  std::unordered_set<ClassCanonicalForm, ClassCanonicalFormHash> forms;
  for (std::size_t r = 0; r < ball.layers.size(); ++r) {
    for (const auto& g : ball.layers[r]) forms.insert(engine.canonical_form(g));
    series.points.push_back({static_cast<std::int64_t>(r), forms.size()});
  }
  return series;
}

GrowthSeries class_series(const TwistedConjugacy& engine, const BallEnumeration& ball, const GroupElement& g0) {
  GrowthSeries series{SeriesKind::class_subset, {}};
  const ClassCanonicalForm target = engine.canonical_form(g0);
  const auto support = engine.class_support_and_degree(g0).cosets;
  std::uint64_t count = 0;
  for (std::size_t r = 0; r < ball.layers.size(); ++r) {
    for (const auto& g : ball.layers[r]) {
      if (!std::binary_search(support.begin(), support.end(), g.coset)) continue;
      if (engine.canonical_form(g) == target) ++count;
    }
    series.points.push_back({static_cast<std::int64_t>(r), count});
  }
  return series;
}

GrowthSeries quotient_series(const TwistedConjugacy& engine, std::uint64_t k_max, std::uint64_t budget) {
  if (k_max == 0) throw std::invalid_argument("quotient_series: k_max must be positive");
  GrowthSeries series{SeriesKind::quotient, {}};
  for (std::uint64_t k = 1; k <= k_max; ++k)
    series.points.push_back({static_cast<std::int64_t>(k), quotient_reidemeister(engine, k, budget)});
  return series;
}

SlopeWindow default_window(std::int64_t r_max) { return {std::max<std::int64_t>(1, r_max / 3), r_max}; }

SlopeReport slope_fit(const GrowthSeries& series, SlopeWindow window, int predicted_degree, double tolerance) {
  if (window.lo <= 0 || window.hi <= window.lo) throw std::invalid_argument("slope_fit: degenerate window");
  std::vector<SeriesPoint> points;
  for (const auto& p : series.points)
    if (p.argument >= window.lo && p.argument <= window.hi) points.push_back(p);
  if (points.size() < 3) throw std::invalid_argument("slope_fit: window holds fewer than three points");
  if (points.front().argument != window.lo || points.back().argument != window.hi)
    throw std::invalid_argument("slope_fit: window not covered by the series");

  SlopeReport report;
  report.predicted_degree = predicted_degree;
  report.window = window;
  report.tolerance = tolerance;

  const bool positive = std::all_of(points.begin(), points.end(), [](const SeriesPoint& p) { return p.count > 0; });
  if (positive) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double cnt = static_cast<double>(points.size());
    for (const auto& p : points) {
      const double x = std::log(static_cast<double>(p.argument));
      const double y = std::log(static_cast<double>(p.count));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / cnt;
    double ss = 0;
    for (const auto& p : points) {
      const double e = std::log(static_cast<double>(p.count)) -
                       (intercept + slope * std::log(static_cast<double>(p.argument)));
      ss += e * e;
    }
    report.fitted_slope = slope;
    report.residual = std::sqrt(ss / cnt);
  } else if (predicted_degree != 0) {
    throw std::invalid_argument("slope_fit: counts must be positive on the window");
  }

  if (predicted_degree == 0) {
    const auto n = points.size();
    report.pass = points[n - 1].count == points[n - 2].count && points[n - 2].count == points[n - 3].count;
  } else {
    report.pass = std::abs(report.fitted_slope - predicted_degree) <= tolerance;
  }
  return report;
}

GenerationStatus check_generates(const VAGroupData& group, const GeneratingSet& gens, std::size_t budget) {
  ElementSet targets;
  for (std::size_t a = 1; a < group.m(); ++a) targets.insert(coset_element(group, a));
  for (std::size_t i = 0; i < group.n; ++i) {
    Vec e(group.n, 0);
    e[i] = 1;
    targets.insert(lattice_element(group, e));
    e[i] = -1;
    targets.insert(lattice_element(group, e));
  }

  ElementSet seen;
  std::vector<std::vector<GroupElement>> layers{{identity_element(group)}};
  seen.insert(layers.front().front());
  auto remaining = [&] {
    return std::any_of(targets.begin(), targets.end(), [&](const GroupElement& t) { return !seen.contains(t); });
  };
  try {
    while (remaining()) {
      if (!expand(group, gens, seen, layers, budget)) return GenerationStatus::unknown;
    }
  } catch (const ResourceLimitError&) {
    return GenerationStatus::unknown;
  }
  return GenerationStatus::verified;
}

}  // namespace tcg
