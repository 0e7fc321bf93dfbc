#include "tcg/tcg.h"

#include <cstring>
#include <memory>
#include <string>

#include "tcg/errors.hpp"
#include "tcg/report.hpp"

struct tcg_group {
  tcg::VAGroupData data;
  tcg::ValidationReport report;
};

struct tcg_endo {
  tcg::Endomorphism data;
  tcg::ValidationReport report;
  std::unique_ptr<tcg::TwistedConjugacy> engine;  // set iff group and endo are valid
};

struct tcg_genset {
  std::unique_ptr<tcg::GeneratingSet> gens;
};

namespace {

thread_local std::string last_error;

tcg_status fail(tcg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tcg_status emit(const nlohmann::json& doc, char** out_json) {
  if (out_json) *out_json = dup_string(doc.dump());
  return TCG_OK;
}

template <class F>
tcg_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const tcg::ParseError& e) {
    return fail(TCG_PARSE_ERROR, e.what());
  } catch (const tcg::InvalidInputError& e) {
    return fail(TCG_INVALID, e.what());
  } catch (const tcg::ResourceLimitError& e) {
    return fail(TCG_RESOURCE_LIMIT, e.what());
  } catch (const tcg::OverflowError& e) {
    return fail(TCG_RESOURCE_LIMIT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TCG_BAD_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(TCG_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(TCG_INTERNAL_ERROR, "unknown error");
  }
}

const tcg::TwistedConjugacy& engine_of(const tcg_group* group, const tcg_endo* endo) {
  if (!group || !endo) throw std::invalid_argument("group and endomorphism handles are required");
  if (!group->report.ok())
    throw tcg::InvalidInputError("group invalid: " + group->report.failures.front().identity + ": " +
                                 group->report.failures.front().message);
  if (!endo->engine)
    throw tcg::InvalidInputError("endomorphism invalid: " + endo->report.failures.front().identity + ": " +
                                 endo->report.failures.front().message);
  return *endo->engine;
}

tcg::GroupElement element(const tcg_group* group, const char* literal) {
  if (!literal) throw std::invalid_argument("element literal is required");
  return tcg::io::parse_element(group->data, literal);
}

}  // namespace

extern "C" {

const char* tcg_version(void) { return "1.0.0"; }

const char* tcg_last_error(void) { return last_error.c_str(); }

void tcg_string_free(char* s) { std::free(s); }

tcg_status tcg_group_load(const char* json_text, tcg_group** out) {
  return guarded([&] {
    if (!json_text || !out) return fail(TCG_BAD_ARGUMENT, "null argument");
    auto group = std::make_unique<tcg_group>();
    group->data = tcg::io::parse_group(tcg::io::parse_text(json_text));
    group->report = tcg::validate_group(group->data);
    *out = group.release();
    return TCG_OK;
  });
}

void tcg_group_free(tcg_group* group) { delete group; }

tcg_status tcg_group_to_json(const tcg_group* group, char** out_json) {
  return guarded([&] {
    if (!group) return fail(TCG_BAD_ARGUMENT, "null group");
    return emit(tcg::io::group_to_json(group->data), out_json);
  });
}

tcg_status tcg_endo_load(const tcg_group* group, const char* json_text, tcg_endo** out) {
  return guarded([&] {
    if (!group || !json_text || !out) return fail(TCG_BAD_ARGUMENT, "null argument");
    auto endo = std::make_unique<tcg_endo>();
    endo->data = tcg::io::parse_endo(group->data, tcg::io::parse_text(json_text));
    if (group->report.ok()) {
      endo->report = tcg::validate_endo(group->data, endo->data);
      if (endo->report.ok()) endo->engine = std::make_unique<tcg::TwistedConjugacy>(group->data, endo->data);
    } else {
      endo->report.failures.push_back({"group", {}, "group failed validation"});
    }
    *out = endo.release();
    return TCG_OK;
  });
}

void tcg_endo_free(tcg_endo* endo) { delete endo; }

tcg_status tcg_genset_load(const tcg_group* group, const char* json_text, tcg_genset** out) {
  return guarded([&] {
    if (!group || !json_text || !out) return fail(TCG_BAD_ARGUMENT, "null argument");
    auto elements = tcg::io::parse_generators(group->data, tcg::io::parse_text(json_text));
    if (!group->report.ok()) throw tcg::InvalidInputError("group invalid");
    auto gens = std::make_unique<tcg_genset>();
    gens->gens = std::make_unique<tcg::GeneratingSet>(group->data, std::move(elements));
    *out = gens.release();
    return TCG_OK;
  });
}

void tcg_genset_free(tcg_genset* gens) { delete gens; }

tcg_status tcg_validate(const tcg_group* group, const tcg_endo* endo, char** out_json) {
  return guarded([&] {
    if (!group) return fail(TCG_BAD_ARGUMENT, "null group");
    std::optional<tcg::ValidationReport> endo_report;
    if (endo) endo_report = endo->report;
    const auto doc = tcg::report::validation(group->data, group->report, endo_report);
    emit(doc, out_json);
    if (doc["valid"].get<bool>()) return TCG_OK;
    return fail(TCG_INVALID, "validation failed");
  });
}

tcg_status tcg_predict(const tcg_group* group, const tcg_endo* endo, char** out_json) {
  return guarded([&] { return emit(tcg::report::predict(engine_of(group, endo)), out_json); });
}

tcg_status tcg_canonical_form(const tcg_group* group, const tcg_endo* endo, const char* literal, char** out_json) {
  return guarded([&] {
    const auto& engine = engine_of(group, endo);
    return emit(tcg::report::canonical(engine, element(group, literal)), out_json);
  });
}

tcg_status tcg_conjtest(const tcg_group* group, const tcg_endo* endo, const char* g, const char* h,
                        int* out_conjugate, char** out_json) {
  return guarded([&] {
    const auto& engine = engine_of(group, endo);
    const auto doc = tcg::report::conjtest(engine, element(group, g), element(group, h));
    if (out_conjugate) *out_conjugate = doc["twisted_conjugate"].get<bool>() ? 1 : 0;
    return emit(doc, out_json);
  });
}

tcg_status tcg_reidemeister(const tcg_group* group, const tcg_endo* endo, char** out_json) {
  return guarded([&] { return emit(tcg::report::reidemeister(engine_of(group, endo)), out_json); });
}

tcg_status tcg_growth(const tcg_group* group, const tcg_endo* endo, const tcg_genset* gens,
                      const tcg_growth_options* options, char** out_json) {
  return guarded([&] {
    if (!group || !gens || !options) return fail(TCG_BAD_ARGUMENT, "null argument");
    if (!group->report.ok()) throw tcg::InvalidInputError("group invalid");
    tcg::report::GrowthOptions opts;
    switch (options->kind) {
      case TCG_SERIES_BALL: opts.kind = tcg::SeriesKind::ball; break;
      case TCG_SERIES_TWISTED_CLASSES: opts.kind = tcg::SeriesKind::twisted_classes; break;
      case TCG_SERIES_CLASS: opts.kind = tcg::SeriesKind::class_subset; break;
      default: return fail(TCG_BAD_ARGUMENT, "unknown series kind");
    }
    const tcg::TwistedConjugacy* engine = nullptr;
    if (opts.kind != tcg::SeriesKind::ball || endo) engine = &engine_of(group, endo);
    if (opts.kind == tcg::SeriesKind::class_subset) opts.g0 = element(group, options->g0);
    opts.r_max = options->r_max;
    if (options->window_lo > 0) opts.window = tcg::SlopeWindow{options->window_lo, options->window_hi};
    if (options->tolerance > 0) opts.tolerance = options->tolerance;
    if (options->budget > 0) opts.budget = options->budget;
    return emit(tcg::report::growth(group->data, engine, *gens->gens, opts), out_json);
  });
}

tcg_status tcg_quotient(const tcg_group* group, const tcg_endo* endo, uint64_t k_max, int brute, char** out_json) {
  return guarded([&] {
    const auto& engine = engine_of(group, endo);
    if (k_max == 0) return fail(TCG_BAD_ARGUMENT, "k_max must be positive");
    return emit(tcg::report::quotient(engine, k_max, brute != 0), out_json);
  });
}

tcg_status tcg_check_generates(const tcg_group* group, const tcg_genset* gens, size_t budget, int* out_verified) {
  return guarded([&] {
    if (!group || !gens || !out_verified) return fail(TCG_BAD_ARGUMENT, "null argument");
    if (!group->report.ok()) throw tcg::InvalidInputError("group invalid");
    *out_verified = tcg::check_generates(group->data, *gens->gens, budget == 0 ? tcg::kDefaultBallBudget : budget) ==
                    tcg::GenerationStatus::verified;
    return TCG_OK;
  });
}

tcg_status tcg_verify(const tcg_group* group, const tcg_endo* endo, const tcg_genset* gens,
                      const tcg_verify_options* options, int* out_pass, char** out_json) {
  return guarded([&] {
    const auto& engine = engine_of(group, endo);
    if (!gens || !options) return fail(TCG_BAD_ARGUMENT, "null argument");
    if (options->r_max < 3 || options->k_max < 3) return fail(TCG_BAD_ARGUMENT, "r_max and k_max must be at least 3");
    tcg::report::VerifyOptions opts;
    opts.r_max = options->r_max;
    opts.k_max = options->k_max;
    if (options->tolerance > 0) opts.tolerance = options->tolerance;
    if (options->quotient_tolerance > 0) opts.quotient_tolerance = options->quotient_tolerance;
    if (options->budget > 0) opts.budget = options->budget;
    opts.include_timing = options->include_timing != 0;
    const auto doc = tcg::report::verify(engine, *gens->gens, opts);
    if (out_pass) *out_pass = doc["pass"].get<bool>() ? 1 : 0;
    return emit(doc, out_json);
  });
}

}  // extern "C"
