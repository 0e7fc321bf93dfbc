// tcg: command-line front end over the C API.
//
// Exit codes: 0 success, 1 validation or verdict failure, 2 parse/validation
// errors on input files, 3 resource guard tripped.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcg/tcg.h"

namespace {

using json = nlohmann::json;

struct ExitError {
  int code;
  std::string message;
};

int exit_code(tcg_status s) {
  switch (s) {
    case TCG_OK: return 0;
    case TCG_RESOURCE_LIMIT: return 3;
    case TCG_INVALID:
    case TCG_PARSE_ERROR:
    case TCG_BAD_ARGUMENT: return 2;
    default: return 4;
  }
}

void check(tcg_status s, const std::string& context) {
  if (s != TCG_OK) throw ExitError{exit_code(s), context + ": " + tcg_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{2, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GroupDeleter {
  void operator()(tcg_group* g) const { tcg_group_free(g); }
};
struct EndoDeleter {
  void operator()(tcg_endo* e) const { tcg_endo_free(e); }
};
struct GensDeleter {
  void operator()(tcg_genset* s) const { tcg_genset_free(s); }
};
using GroupPtr = std::unique_ptr<tcg_group, GroupDeleter>;
using EndoPtr = std::unique_ptr<tcg_endo, EndoDeleter>;
using GensPtr = std::unique_ptr<tcg_genset, GensDeleter>;

GroupPtr load_group(const std::string& path) {
  tcg_group* g = nullptr;
  check(tcg_group_load(read_file(path).c_str(), &g), path);
  return GroupPtr(g);
}

EndoPtr load_endo(const tcg_group* group, const std::string& path) {
  tcg_endo* e = nullptr;
  check(tcg_endo_load(group, read_file(path).c_str(), &e), path);
  return EndoPtr(e);
}

GensPtr load_gens(const tcg_group* group, const std::string& path) {
  tcg_genset* s = nullptr;
  check(tcg_genset_load(group, read_file(path).c_str(), &s), path);
  return GensPtr(s);
}

json take_json(char* raw) {
  json doc = json::parse(raw);
  tcg_string_free(raw);
  return doc;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ExitError{2, "cannot write " + path};
  out << text;
}

std::string series_csv(const json& series, const char* arg_name) {
  std::ostringstream os;
  os << arg_name << ",count\n";
  for (const auto& p : series["points"]) os << p[0].get<long long>() << ',' << p[1].get<unsigned long long>() << '\n';
  return os.str();
}

void print_slope(const json& slope) {
  if (slope.is_null()) {
    std::cerr << "# slope: window not available\n";
    return;
  }
  std::cerr << "# slope " << slope["fitted_slope"].get<double>() << " predicted " << slope["predicted_degree"]
            << " window [" << slope["window"][0] << "," << slope["window"][1] << "] "
            << (slope["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted conjugacy invariants and growth series of virtually abelian groups"};
  app.require_subcommand(1);

  std::string group_path, endo_path, gens_path, output_path, format = "text";
  std::string element_lit, g_lit, h_lit, g0_lit, series_kind;
  std::size_t rmax = 20, kmax = 12, budget = 0;
  std::int64_t rmin = 0;
  double tol = 0.0, qtol = 0.0;
  bool brute = false, no_timing = false;

  auto add_group = [&](CLI::App* sub) { sub->add_option("group", group_path, "group JSON file")->required(); };
  auto add_endo = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-e,--endo", endo_path, "endomorphism JSON file");
    if (required) opt->required();
  };

  auto* validate = app.add_subcommand("validate", "check group (and endomorphism) data");
  add_group(validate);
  add_endo(validate, false);

  auto* predict = app.add_subcommand("predict", "per-coset ranks and predicted growth degrees");
  add_group(predict);
  add_endo(predict, true);

  auto* canon = app.add_subcommand("canon", "canonical form of an element's twisted conjugacy class");
  add_group(canon);
  add_endo(canon, true);
  canon->add_option("--element", element_lit, "element literal \"x1,...,xn;label\"")->required();
  canon->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* conjtest = app.add_subcommand("conjtest", "decide twisted conjugacy of two elements");
  add_group(conjtest);
  add_endo(conjtest, true);
  // --h is an element here, so help is only --help.
  conjtest->set_help_flag("--help", "Print this help message and exit");
  conjtest->add_option("--g", g_lit)->required();
  conjtest->add_option("--h", h_lit)->required();
  conjtest->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* growth = app.add_subcommand("growth", "ball, twisted-class or class-subset growth series");
  add_group(growth);
  add_endo(growth, false);
  growth->add_option("-S,--gens", gens_path, "generating set JSON file")->required();
  growth->add_option("--series", series_kind)->required()->check(CLI::IsMember({"beta", "fr", "class"}));
  growth->add_option("--g0", g0_lit, "class representative for --series class");
  growth->add_option("--rmax", rmax)->required();
  growth->add_option("--rmin", rmin, "slope window start (default rmax/3)");
  growth->add_option("--tol", tol, "slope tolerance (default 0.2)");
  growth->add_option("--budget", budget, "ball element budget");
  growth->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  growth->add_option("-o,--output", output_path);

  auto* quotient = app.add_subcommand("quotient", "quotient Reidemeister series f_Q(k), k = 1..kmax");
  add_group(quotient);
  add_endo(quotient, true);
  quotient->add_option("--kmax", kmax)->required();
  quotient->add_flag("--brute", brute, "cross-check every k against union-find enumeration");
  quotient->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  quotient->add_option("-o,--output", output_path);

  auto* reidemeister = app.add_subcommand("reidemeister", "Reidemeister number or \"infinite\"");
  add_group(reidemeister);
  add_endo(reidemeister, true);
  reidemeister->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "predicted degrees versus measured slopes");
  add_group(verify);
  add_endo(verify, true);
  verify->add_option("-S,--gens", gens_path)->required();
  verify->add_option("--rmax", rmax)->required();
  verify->add_option("--kmax", kmax)->required();
  verify->add_option("--tol", tol, "slope tolerance (default 0.2)");
  verify->add_option("--qtol", qtol, "quotient slope tolerance (default 0.25)");
  verify->add_option("--budget", budget);
  verify->add_flag("--no-timing", no_timing, "omit the timing member for byte-stable output");
  verify->add_option("-o,--output", output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    GroupPtr group = load_group(group_path);
    EndoPtr endo;
    if (!endo_path.empty()) endo = load_endo(group.get(), endo_path);

    if (validate->parsed()) {
      char* raw = nullptr;
      const tcg_status s = tcg_validate(group.get(), endo.get(), &raw);
      if (s != TCG_OK && s != TCG_INVALID) check(s, "validate");
      std::cout << take_json(raw).dump(2) << '\n';
      return s == TCG_OK ? 0 : 1;
    }

    char* raw = nullptr;
    if (predict->parsed()) {
      check(tcg_predict(group.get(), endo.get(), &raw), "predict");
      std::cout << take_json(raw).dump(2) << '\n';
    } else if (canon->parsed()) {
      check(tcg_canonical_form(group.get(), endo.get(), element_lit.c_str(), &raw), "canon");
      const json doc = take_json(raw);
      if (format == "json")
        std::cout << doc.dump(2) << '\n';
      else
        std::cout << doc["canonical_form"]["literal"].get<std::string>() << '\n';
    } else if (conjtest->parsed()) {
      int conj = 0;
      check(tcg_conjtest(group.get(), endo.get(), g_lit.c_str(), h_lit.c_str(), &conj, &raw), "conjtest");
      const json doc = take_json(raw);
      if (format == "json")
        std::cout << doc.dump(2) << '\n';
      else
        std::cout << (conj ? "true" : "false") << '\n';
    } else if (reidemeister->parsed()) {
      check(tcg_reidemeister(group.get(), endo.get(), &raw), "reidemeister");
      const json doc = take_json(raw);
      if (format == "json")
        std::cout << doc.dump(2) << '\n';
      else if (doc["infinite"].get<bool>())
        std::cout << "infinite\n";
      else
        std::cout << doc["reidemeister_number"].get<unsigned long long>() << '\n';
    } else if (growth->parsed()) {
      GensPtr gens = load_gens(group.get(), gens_path);
      int verified = 0;
      check(tcg_check_generates(group.get(), gens.get(), budget, &verified), "growth");
      if (!verified) std::cerr << "warning: could not verify that the generating set generates the group\n";
      tcg_growth_options opts{};
      opts.kind = series_kind == "beta" ? TCG_SERIES_BALL
                  : series_kind == "fr" ? TCG_SERIES_TWISTED_CLASSES
                                        : TCG_SERIES_CLASS;
      if (opts.kind == TCG_SERIES_CLASS && g0_lit.empty()) throw ExitError{2, "--series class requires --g0"};
      opts.g0 = g0_lit.c_str();
      opts.r_max = rmax;
      if (rmin > 0) {
        opts.window_lo = rmin;
        opts.window_hi = static_cast<std::int64_t>(rmax);
      }
      opts.tolerance = tol;
      opts.budget = budget;
      check(tcg_growth(group.get(), endo.get(), gens.get(), &opts, &raw), "growth");
      const json doc = take_json(raw);
      if (format == "json") {
        write_output(doc.dump(2) + "\n", output_path);
      } else {
        write_output(series_csv(doc, "r"), output_path);
        print_slope(doc["slope"]);
      }
    } else if (quotient->parsed()) {
      check(tcg_quotient(group.get(), endo.get(), kmax, brute ? 1 : 0, &raw), "quotient");
      const json doc = take_json(raw);
      if (format == "json") {
        write_output(doc.dump(2) + "\n", output_path);
      } else {
        write_output(series_csv(doc, "k"), output_path);
        print_slope(doc["slope"]);
      }
      if (brute && !doc["oracle_agrees"].get<bool>()) {
        std::cerr << "error: smart and brute-force quotient counts disagree\n";
        return 1;
      }
    } else if (verify->parsed()) {
      GensPtr gens = load_gens(group.get(), gens_path);
      tcg_verify_options opts{};
      opts.r_max = rmax;
      opts.k_max = kmax;
      opts.tolerance = tol;
      opts.quotient_tolerance = qtol;
      opts.budget = budget;
      opts.include_timing = no_timing ? 0 : 1;
      int pass = 0;
      check(tcg_verify(group.get(), endo.get(), gens.get(), &opts, &pass, &raw), "verify");
      const json doc = take_json(raw);
      if (doc["generation"] != "verified")
        std::cerr << "warning: could not verify that the generating set generates the group\n";
      write_output(doc.dump(2) + "\n", output_path);
      return pass ? 0 : 1;
    }
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
