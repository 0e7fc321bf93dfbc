#pragma once

// Word-metric growth: Cayley-ball enumeration, the ball / twisted-class /
// class-subset / quotient series, and log-log slope verdicts against
// predicted polynomial degrees.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tcg/group.hpp"
#include "tcg/tc.hpp"

namespace tcg {

inline constexpr std::size_t kDefaultBallBudget = 20'000'000;

/// Finite generating set S; stores the symmetrised closure S u S^-1 with
/// identities removed, deduplicated and sorted.
class GeneratingSet {
 public:
  GeneratingSet(const VAGroupData& group, std::vector<GroupElement> elements);

  const std::vector<GroupElement>& inputs() const noexcept { return inputs_; }
  const std::vector<GroupElement>& symmetric() const noexcept { return symmetric_; }

 private:
  std::vector<GroupElement> inputs_;
  std::vector<GroupElement> symmetric_;
};

struct BallEnumeration {
  std::vector<std::vector<GroupElement>> layers;  // layer l: word length exactly l, sorted

  std::size_t radius() const noexcept { return layers.empty() ? 0 : layers.size() - 1; }
  /// beta(r) = number of elements of word length <= r.
  std::uint64_t size(std::size_t r) const;
};

/// Exact ball B(r_max); throws ResourceLimitError beyond `budget` elements.
BallEnumeration bfs_ball(const VAGroupData& group, const GeneratingSet& gens, std::size_t r_max,
                         std::size_t budget = kDefaultBallBudget);

enum class SeriesKind { ball, twisted_classes, class_subset, quotient };
std::string_view to_string(SeriesKind kind);

struct SeriesPoint {
  std::int64_t argument = 0;  // radius r, or modulus k for quotient series
  std::uint64_t count = 0;
};

struct GrowthSeries {
  SeriesKind kind = SeriesKind::ball;
  std::vector<SeriesPoint> points;
};

GrowthSeries beta_series(const BallEnumeration& ball);
GrowthSeries f_r_series(const TwistedConjugacy& engine, const BallEnumeration& ball);
GrowthSeries class_series(const TwistedConjugacy& engine, const BallEnumeration& ball, const GroupElement& g0);
GrowthSeries quotient_series(const TwistedConjugacy& engine, std::uint64_t k_max,
                             std::uint64_t budget = kDefaultEnumerationBudget);

struct SlopeWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct SlopeReport {
  double fitted_slope = 0.0;
  int predicted_degree = 0;
  SlopeWindow window;
  double residual = 0.0;  // RMS residual of the log-log fit
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kDefaultSlopeTolerance = 0.2;

/// Least-squares slope of log(count) against log(argument) over the window.
/// Degree 0 is judged by eventual constancy: the last three window values
/// must agree. Throws std::invalid_argument on an empty or degenerate window.
SlopeReport slope_fit(const GrowthSeries& series, SlopeWindow window, int predicted_degree,
                      double tolerance = kDefaultSlopeTolerance);

/// Default window [max(1, r_max/3), r_max].
SlopeWindow default_window(std::int64_t r_max);

enum class GenerationStatus { verified, unknown };

/// Semi-decision for <S> = G: Verified when a BFS within `budget` elements
/// reaches every (0,a) and every (+-e_i, 1).
GenerationStatus check_generates(const VAGroupData& group, const GeneratingSet& gens, std::size_t budget);

}  // namespace tcg
