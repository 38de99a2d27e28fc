#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmmeas/errors.hpp"
#include "pmmeas/hausdorff.hpp"
#include "pmmeas/json_io.hpp"
#include "pmmeas/suites.hpp"

namespace {

using pmmeas::Json;

// Suites run sequentially; any positive cap is honored by that.  Invalid or
// non-positive values fall back to 1 instead of failing the run.
int thread_cap() {
  const char* env = std::getenv("PMMEAS_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return static_cast<int>(v);
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw pmmeas::ConfigParse(what + ": " + e.what());
  }
}

void emit(const Json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    pmmeas::write_text_file(out_path, text);
}

std::string export_csv(const std::string& what) {
  if (what == "eps1") return pmmeas::ddf_to_csv(pmmeas::epsilon(1.0), 2.0, 0.1);
  if (what == "lambda5") {
    pmmeas::Rng rng(7);
    pmmeas::HausdorffContext ctx(pmmeas::random_dirac_metric_space(rng, 5));
    return pmmeas::ddf_to_csv(pmmeas::lambda_H(ctx, 0b00011u), 12.0, 0.1);
  }
  throw pmmeas::SuiteUnknown("unknown export id '" + what + "' (known: eps1, lambda5)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification harness for distance-distribution algebra"};
  app.require_subcommand(1);
  (void)thread_cap();  // sequential execution satisfies any positive cap

  std::string config_path, out_path;
  std::vector<std::string> suite_names;
  double tol = 0.0;
  std::uint64_t seed = 0;

  auto* verify = app.add_subcommand("verify", "run verification suites and emit a report");
  auto* opt_config = verify->add_option("--config", config_path, "JSON config file");
  auto* opt_suite =
      verify->add_option("--suite", suite_names, "suite to run (repeatable; overrides config)");
  auto* opt_tol = verify->add_option("--tol", tol, "comparison tolerance override");
  auto* opt_seed = verify->add_option("--seed", seed, "generator seed override");
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  std::string mode;
  int budget = 50;
  auto* explore = app.add_subcommand("explore", "run an exploratory probe");
  explore->add_option("--mode", mode, "probe: find-nonassoc, find-pi-top-violation, s-tau-census")
      ->required();
  explore->add_option("--budget", budget, "instance budget (default 50)");
  auto* opt_eseed = explore->add_option("--seed", seed, "generator seed override");
  explore->add_option("--out", out_path, "write the report here instead of stdout");

  std::string what;
  auto* exp = app.add_subcommand("export", "write plot data as CSV");
  exp->add_option("--what", what, "dataset id: eps1, lambda5")->required();
  exp->add_option("--out", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      pmmeas::SuiteConfig cfg;
      if (opt_config->count() > 0)
        cfg = pmmeas::config_from_json(
            parse_json(pmmeas::read_text_file(config_path), config_path));
      if (opt_suite->count() > 0) cfg.suites = suite_names;
      if (opt_tol->count() > 0) {
        if (!(tol > 0.0)) throw pmmeas::ConfigParse("--tol must be > 0");
        cfg.tolerance = tol;
      }
      if (opt_seed->count() > 0) cfg.seed = seed;
      Json report = pmmeas::run_suites(cfg);
      emit(report, out_path);
      return report.at("all_pass").get<bool>() ? 0 : 1;
    }
    if (explore->parsed()) {
      pmmeas::SuiteConfig cfg;
      if (opt_eseed->count() > 0) cfg.seed = seed;
      Json report = pmmeas::run_explore(cfg, mode, budget);
      emit(report, out_path);
      return report.at("pass").get<bool>() ? 0 : 1;
    }
    pmmeas::write_text_file(out_path, export_csv(what));
    return 0;
  } catch (const pmmeas::ConfigParse& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const pmmeas::SuiteUnknown& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const pmmeas::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
