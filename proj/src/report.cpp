#include "tcg/report.hpp"

#include <chrono>
#include <cstdio>

namespace tcg::report {

json slope_json(const SlopeReport& s) {
  return json{{"fitted_slope", s.fitted_slope},
              {"predicted_degree", s.predicted_degree},
              {"window", {s.window.lo, s.window.hi}},
              {"residual", s.residual},
              {"tolerance", s.tolerance},
              {"pass", s.pass}};
}

json series_json(const GrowthSeries& series) {
  json points = json::array();
  for (const auto& p : series.points) points.push_back({p.argument, p.count});
  return json{{"kind", std::string(to_string(series.kind))}, {"points", std::move(points)}};
}

namespace {

json failures_json(const VAGroupData& group, const ValidationReport& report) {
  json out = json::array();
  for (const auto& f : report.failures) {
    json labels = json::array();
    for (auto i : f.indices) labels.push_back(i < group.m() ? group.cosets[i] : std::to_string(i));
    out.push_back({{"identity", f.identity}, {"indices", f.indices}, {"labels", labels}, {"message", f.message}});
  }
  return out;
}

json form_json(const VAGroupData& group, const ClassCanonicalForm& f) {
  return json{{"coset", group.cosets[f.coset]}, {"residue", f.residue},
              {"literal", io::format_element(group, GroupElement{f.residue, f.coset})}};
}

json labels(const VAGroupData& group, const std::vector<std::size_t>& cosets) {
  json out = json::array();
  for (auto a : cosets) out.push_back(group.cosets[a]);
  return out;
}

json fitted_or_null(const GrowthSeries& series, const SlopeWindow& window, int degree, double tolerance) {
  try {
    return slope_json(slope_fit(series, window, degree, tolerance));
  } catch (const std::invalid_argument&) {
    return nullptr;
  }
}

}  // namespace

json validation(const VAGroupData& group, const ValidationReport& group_report,
                const std::optional<ValidationReport>& endo_report) {
  json out{{"group", {{"valid", group_report.ok()}, {"failures", failures_json(group, group_report)}}}};
  bool valid = group_report.ok();
  if (endo_report) {
    out["endomorphism"] = {{"valid", endo_report->ok()}, {"failures", failures_json(group, *endo_report)}};
    valid = valid && endo_report->ok();
  }
  out["valid"] = valid;
  return out;
}

json predict(const TwistedConjugacy& engine) {
  const auto& group = engine.group();
  const auto p = engine.predicted_degrees();
  json ranks = json::object();
  for (std::size_t a = 0; a < group.m(); ++a) ranks[group.cosets[a]] = p.coset_ranks[a];
  json invariants = json::object();
  for (const auto& l : engine.coset_lattices()) {
    json d = json::array();
    for (const auto& v : l.snf.diag) d.push_back(v.get_str());
    invariants[group.cosets[l.coset]] = std::move(d);
  }
  return json{{"lattice_rank", p.lattice_rank},
              {"coset_ranks", std::move(ranks)},
              {"invariant_factors", std::move(invariants)},
              {"fr_degree", p.fr_degree},
              {"fq_degree", p.fq_degree},
              {"ball_degree", p.ball_degree}};
}

json canonical(const TwistedConjugacy& engine, const GroupElement& g) {
  const auto& group = engine.group();
  const auto support = engine.class_support_and_degree(g);
  return json{{"element", io::format_element(group, g)},
              {"canonical_form", form_json(group, engine.canonical_form(g))},
              {"support", labels(group, support.cosets)},
              {"class_degree", support.degree}};
}

json conjtest(const TwistedConjugacy& engine, const GroupElement& g, const GroupElement& h) {
  const auto& group = engine.group();
  const auto fg = engine.canonical_form(g);
  const auto fh = engine.canonical_form(h);
  return json{{"g", io::format_element(group, g)},
              {"h", io::format_element(group, h)},
              {"g_form", form_json(group, fg)},
              {"h_form", form_json(group, fh)},
              {"twisted_conjugate", fg == fh}};
}

json reidemeister(const TwistedConjugacy& engine) {
  const auto r = engine.reidemeister_number();
  if (r.infinite) return json{{"infinite", true}, {"reidemeister_number", "infinite"}};
  return json{{"infinite", false}, {"reidemeister_number", r.value}};
}

json growth(const VAGroupData& group, const TwistedConjugacy* engine, const GeneratingSet& gens,
            const GrowthOptions& options) {
  if (options.kind != SeriesKind::ball && engine == nullptr)
    throw std::invalid_argument("growth: this series needs an endomorphism");
  const auto ball = bfs_ball(group, gens, options.r_max, options.budget);
  GrowthSeries series;
  int degree = static_cast<int>(group.n);
  json extra = json::object();
  switch (options.kind) {
    case SeriesKind::ball:
      series = beta_series(ball);
      break;
    case SeriesKind::twisted_classes:
      series = f_r_series(*engine, ball);
      degree = static_cast<int>(engine->predicted_degrees().fr_degree);
      break;
    case SeriesKind::class_subset: {
      if (!options.g0) throw std::invalid_argument("growth: class series needs g0");
      series = class_series(*engine, ball, *options.g0);
      const auto support = engine->class_support_and_degree(*options.g0);
      degree = static_cast<int>(support.degree);
      extra["g0"] = io::format_element(group, *options.g0);
      extra["support"] = labels(group, support.cosets);
      break;
    }
    case SeriesKind::quotient:
      throw std::invalid_argument("growth: use the quotient report for f_Q");
  }
  const SlopeWindow window = options.window.value_or(default_window(static_cast<std::int64_t>(options.r_max)));
  json out = series_json(series);
  out["predicted_degree"] = degree;
  out["slope"] = fitted_or_null(series, window, degree, options.tolerance);
  out["generators"] = io::generators_to_json(group, gens.inputs())["generators"];
  for (auto& [k, v] : extra.items()) out[k] = v;
  return out;
}

json quotient(const TwistedConjugacy& engine, std::uint64_t k_max, bool brute, std::optional<SlopeWindow> window,
              double tolerance) {
  const auto series = quotient_series(engine, k_max);
  const int degree = static_cast<int>(engine.predicted_degrees().fq_degree);
  json out = series_json(series);
  out["predicted_degree"] = degree;
  out["slope"] = fitted_or_null(series, window.value_or(default_window(static_cast<std::int64_t>(k_max))), degree,
                                tolerance);
  if (brute) {
    json checks = json::array();
    bool agree = true;
    for (const auto& p : series.points) {
      const auto k = static_cast<std::uint64_t>(p.argument);
      const auto b = quotient_reidemeister_bruteforce(engine.group(), engine.endo(), k);
      agree = agree && b == p.count;
      checks.push_back({{"k", k}, {"smart", p.count}, {"brute", b}, {"agree", b == p.count}});
    }
    out["brute_force"] = std::move(checks);
    out["oracle_agrees"] = agree;
  }
  return out;
}

json verify(const TwistedConjugacy& engine, const GeneratingSet& gens, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto& group = engine.group();
  const auto predicted = engine.predicted_degrees();

  const json group_doc = io::group_to_json(group);
  const json endo_doc = io::endo_to_json(engine.endo());
  const json gens_doc = io::generators_to_json(group, gens.inputs());
  const json options_doc{{"r_max", options.r_max},
                         {"k_max", options.k_max},
                         {"tolerance", options.tolerance},
                         {"quotient_tolerance", options.quotient_tolerance}};

  json out;
  out["inputs"] = {{"digest", digest({&group_doc, &endo_doc, &gens_doc, &options_doc})}, {"options", options_doc}};
  out["predicted"] = predict(engine);
  const bool generates = check_generates(group, gens, options.budget) == GenerationStatus::verified;
  out["generation"] = generates ? "verified" : "unknown";

  bool pass = true;
  json checks = json::array();
  auto record = [&](std::string name, const GrowthSeries& series, int degree, SlopeWindow window, double tol) {
    json entry{{"name", std::move(name)}, {"series", series_json(series)}};
    try {
      const auto s = slope_fit(series, window, degree, tol);
      entry["slope"] = slope_json(s);
      pass = pass && s.pass;
    } catch (const std::invalid_argument& e) {
      entry["slope"] = nullptr;
      entry["error"] = e.what();
      pass = false;
    }
    checks.push_back(std::move(entry));
  };

  const auto ball = bfs_ball(group, gens, options.r_max, options.budget);
  const SlopeWindow window = default_window(static_cast<std::int64_t>(options.r_max));
  record("ball", beta_series(ball), static_cast<int>(predicted.ball_degree), window, options.tolerance);
  record("twisted-classes", f_r_series(engine, ball), static_cast<int>(predicted.fr_degree), window, options.tolerance);
  for (std::size_t a = 0; a < group.m(); ++a) {
    const GroupElement g0 = coset_element(group, a);
    const auto degree = static_cast<int>(engine.class_support_and_degree(g0).degree);
    record("class-subset " + io::format_element(group, g0), class_series(engine, ball, g0), degree, window,
           options.tolerance);
  }
  record("quotient", quotient_series(engine, options.k_max), static_cast<int>(predicted.fq_degree),
         default_window(static_cast<std::int64_t>(options.k_max)), options.quotient_tolerance);

  out["checks"] = std::move(checks);
  out["pass"] = pass;
  if (options.include_timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out["timing"] = {{"total_ms", ms}};
  }
  return out;
}

std::string digest(std::initializer_list<const json*> documents) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const json* doc : documents) {
    for (unsigned char c : doc->dump()) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    h ^= 0xff;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tcg::report
