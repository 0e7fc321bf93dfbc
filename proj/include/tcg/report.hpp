#pragma once

// Machine-readable reports behind the C API and the CLI. All reports are
// deterministic JSON; only the optional "timing" member varies between runs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "tcg/growth.hpp"
#include "tcg/io.hpp"
#include "tcg/tc.hpp"

namespace tcg::report {

using json = nlohmann::json;

json validation(const VAGroupData& group, const ValidationReport& group_report,
                const std::optional<ValidationReport>& endo_report);
json predict(const TwistedConjugacy& engine);
json canonical(const TwistedConjugacy& engine, const GroupElement& g);
json conjtest(const TwistedConjugacy& engine, const GroupElement& g, const GroupElement& h);
json reidemeister(const TwistedConjugacy& engine);

struct GrowthOptions {
  SeriesKind kind = SeriesKind::ball;
  std::optional<GroupElement> g0;  // required for class_subset
  std::size_t r_max = 20;
  std::optional<SlopeWindow> window;  // default [r_max/3, r_max]
  double tolerance = kDefaultSlopeTolerance;
  std::size_t budget = kDefaultBallBudget;
};

/// `engine` may be null for the ball series.
json growth(const VAGroupData& group, const TwistedConjugacy* engine, const GeneratingSet& gens,
            const GrowthOptions& options);

json quotient(const TwistedConjugacy& engine, std::uint64_t k_max, bool brute,
              std::optional<SlopeWindow> window = std::nullopt, double tolerance = 0.25);

struct VerifyOptions {
  std::size_t r_max = 30;
  std::uint64_t k_max = 16;
  double tolerance = kDefaultSlopeTolerance;
  double quotient_tolerance = 0.25;
  std::size_t budget = kDefaultBallBudget;
  bool include_timing = true;
};

/// Predictions versus measured slopes for ball, twisted-class, per-coset
/// class and quotient series. "pass" is false if any verdict fails.
json verify(const TwistedConjugacy& engine, const GeneratingSet& gens, const VerifyOptions& options);

json slope_json(const SlopeReport& slope);
json series_json(const GrowthSeries& series);

/// FNV-1a 64 of the canonical dumps of the given documents, hex encoded.
std::string digest(std::initializer_list<const json*> documents);

}  // namespace tcg::report
