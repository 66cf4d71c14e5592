// trine-lab — command-line front end: reproduces every headline number of the
// double-trine discrimination problem and emits machine-readable artifacts.
//
// Subcommands: global | sep | oneway | twoway | nogo | verify-all
// Exit codes: 0 success, 1 usage/IO error, 2 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "trinelab/json_io.hpp"
#include "trinelab/locc.hpp"
#include "trinelab/nogo.hpp"
#include "trinelab/numfmt.hpp"
#include "trinelab/separability.hpp"
#include "trinelab/verify.hpp"

namespace {

using namespace trinelab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct RunConfig {
  std::string subcommand;
  double grid_step = 1e-4;
  double tolerance = 1e-9;
  std::uint64_t seed = 42;
  std::string output_path;  // empty = stdout
  std::string format = "text";
  bool corrupt_pgm = false;
  std::vector<double> chi_values{0.34, 0.4, 0.5, 0.75, 1.0};
  int sweep_samples = 10000;
};

int emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.output_path.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path: " << cfg.output_path << "\n";
    return kExitUsage;
  }
  out << payload;
  return out ? kExitOk : kExitUsage;
}

int run_global(const RunConfig& cfg) {
  const double closed = 0.5 - std::sqrt(2.0) / 3.0;
  const WeightedEnsemble dt = double_trine();
  const Povm povm = pgm(dt);
  const double err = error_probability(dt, povm);
  const PovmCheck chk = validate_povm(povm);
  const OptimalityReport holevo = holevo_optimality_check(dt, povm);

  bool sep_certified = true;
  const Povm sep = separable_pgm();
  for (const CMat& el : sep.elements) sep_certified = sep_certified && ppt_separable(el).is_ppt;

  const bool verified = std::abs(err - closed) <= cfg.tolerance && chk.ok() && holevo.is_optimal && sep_certified;

  std::string payload;
  if (cfg.format == "json") {
    json j{{"schema", "trine-lab/global"},
           {"global_error", err},
           {"closed_form", closed},
           {"difference", err - closed},
           {"povm_check",
            {{"hermiticity_residual", chk.hermiticity_residual},
             {"min_eigenvalue", chk.min_eigenvalue},
             {"closure_residual", chk.closure_residual}}},
           {"optimality",
            {{"is_optimal", holevo.is_optimal},
             {"min_eigenvalue_margin", holevo.min_eigenvalue_margin},
             {"hermiticity_residual", holevo.hermiticity_residual}}},
           {"sep_povm_ppt_certified", sep_certified},
           {"povm", to_json(povm)},
           {"verified", verified}};
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "global minimum-error discrimination of the double trine\n"
       << "  error probability      " << fmt_sci17(err) << "\n"
       << "  closed form            " << fmt_sci17(closed) << "  (1/2 - sqrt(2)/3)\n"
       << "  |difference|           " << fmt_sig17(std::abs(err - closed)) << "\n"
       << "  optimality margin      " << fmt_sig17(holevo.min_eigenvalue_margin)
       << (holevo.is_optimal ? "  (optimal)" : "  (NOT optimal)") << "\n"
       << "  povm residuals         hermiticity " << fmt_sig17(chk.hermiticity_residual) << ", min eig "
       << fmt_sig17(chk.min_eigenvalue) << ", closure " << fmt_sig17(chk.closure_residual) << "\n"
       << "  separable POVM PPT     " << (sep_certified ? "certified for all elements" : "FAILED") << "\n"
       << "  verified               " << (verified ? "yes" : "NO") << "\n";
    payload = os.str();
  }
  const int rc = emit(cfg, payload);
  if (rc != kExitOk) return rc;
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_sep(const RunConfig& cfg) {
  const double closed = 0.5 - std::sqrt(2.0) / 3.0;
  const WeightedEnsemble dt = double_trine();
  const Povm sep = separable_pgm();
  const double err = error_probability(dt, sep);
  const OptimalityReport holevo = holevo_optimality_check(dt, sep);

  bool verified = std::abs(err - closed) <= cfg.tolerance && holevo.is_optimal;
  json elements = json::array();
  std::ostringstream os;
  os << "separable POVM attaining the global double-trine optimum\n"
     << "  error probability      " << fmt_sci17(err) << "\n"
     << "  closed form            " << fmt_sci17(closed) << "\n"
     << "  optimality margin      " << fmt_sig17(holevo.min_eigenvalue_margin) << "\n";
  for (int i = 0; i < 3; ++i) {
    const SeparabilityReport rep = ppt_separable(sep.elements[i]);
    const Ket phip = (pgm_basis_F(i) + std::sqrt(1.0 / 3.0) * singlet()).normalized();
    const Ket phim = (pgm_basis_F(i) - std::sqrt(1.0 / 3.0) * singlet()).normalized();
    const double cp = concurrence(phip), cm = concurrence(phim);
    verified = verified && rep.is_ppt && cp <= 1e-12 && cm <= 1e-12;
    os << "  element " << i << "             ppt " << (rep.is_ppt ? "yes" : "NO") << " (min eig "
       << fmt_sig17(rep.min_pt_eigenvalue) << "), concurrence(phi+-) = " << fmt_sig17(cp) << ", "
       << fmt_sig17(cm) << "\n";
    elements.push_back(json{{"index", i},
                            {"is_ppt", rep.is_ppt},
                            {"min_pt_eigenvalue", rep.min_pt_eigenvalue},
                            {"phi_plus_concurrence", cp},
                            {"phi_minus_concurrence", cm}});
  }
  os << "  verified               " << (verified ? "yes" : "NO") << "\n";

  std::string payload;
  if (cfg.format == "json") {
    json j{{"schema", "trine-lab/sep"},   {"sep_error", err},   {"closed_form", closed},
           {"element_reports", elements}, {"povm", to_json(sep)}, {"verified", verified}};
    payload = j.dump(2) + "\n";
  } else {
    payload = os.str();
  }
  const int rc = emit(cfg, payload);
  if (rc != kExitOk) return rc;
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_oneway(const RunConfig& cfg) {
  const double closed = 0.5 - std::sqrt(3.0) / 4.0;
  const OneWayOptimum opt = one_way_optimum();
  const bool verified = std::abs(opt.error - closed) <= cfg.tolerance;

  std::string payload;
  if (cfg.format == "json") {
    json j{{"schema", "trine-lab/oneway"}, {"error", opt.error},
           {"theta", opt.direction.theta}, {"phi", opt.direction.phi},
           {"closed_form", closed},        {"verified", verified}};
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "one-way LOCC optimum for the double trine\n"
       << "  error probability      " << fmt_sci17(opt.error) << "\n"
       << "  closed form            " << fmt_sci17(closed) << "  (1/2 - sqrt(3)/4)\n"
       << "  attained at            theta = " << fmt_sig17(opt.direction.theta)
       << ", phi = " << fmt_sig17(opt.direction.phi) << "\n"
       << "  verified               " << (verified ? "yes" : "NO") << "\n";
    payload = os.str();
  }
  const int rc = emit(cfg, payload);
  if (rc != kExitOk) return rc;
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_twoway(const RunConfig& cfg) {
  if (cfg.format == "csv") {
    // Fig-1 style sweep: one row per grid point.
    const long n = static_cast<long>(std::floor(1.0 / cfg.grid_step + 1e-9));
    std::ostringstream os;
    os << "p,p_err\n";
    for (long k = 0; k <= n; ++k) {
      double p = static_cast<double>(k) * cfg.grid_step;
      if (p > 1.0 || std::abs(p - 1.0) < cfg.grid_step * 1e-6) p = 1.0;
      os << fmt_sig17(p) << "," << fmt_sig17(two_way_error(p)) << "\n";
    }
    return emit(cfg, os.str());
  }

  const TwoWayOptimum opt = two_way_optimum(cfg.grid_step);
  const double one_way = 0.5 - std::sqrt(3.0) / 4.0;
  const double at_one = two_way_error(1.0);
  const bool verified = opt.error < one_way - 2e-3 && std::abs(at_one - one_way) <= cfg.tolerance;

  std::string payload;
  if (cfg.format == "json") {
    json j{{"schema", "trine-lab/twoway"}, {"p_star", opt.p_star},       {"error", opt.error},
           {"error_at_p1", at_one},        {"one_way_error", one_way},   {"verified", verified}};
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "two-way adaptive protocol for the double trine\n"
       << "  minimum error          " << fmt_sci17(opt.error) << "  at p = " << fmt_sig17(opt.p_star) << "\n"
       << "  error at p = 1         " << fmt_sci17(at_one) << "  (one-way optimum " << fmt_sci17(one_way)
       << ")\n"
       << "  improvement            " << fmt_sig17(one_way - opt.error) << "\n"
       << "  verified               " << (verified ? "yes" : "NO") << "\n";
    payload = os.str();
  }
  const int rc = emit(cfg, payload);
  if (rc != kExitOk) return rc;
  return verified ? kExitOk : kExitVerifyFailed;
}

int run_nogo(const RunConfig& cfg) {
  std::vector<NogoChiReport> reports;
  try {
    reports = nogo_certificate(cfg.chi_values, cfg.sweep_samples, cfg.seed);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.contradiction;

  std::string payload;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : reports)
      arr.push_back(json{{"chi", r.chi},
                         {"contradiction", r.contradiction},
                         {"margin_s_above", r.margin_s_above},
                         {"margin_s_below", r.margin_s_below},
                         {"margin_center", r.margin_center},
                         {"sweep_min_deviation", r.sweep_min_deviation},
                         {"sweep_samples", r.sweep_samples}});
    json j{{"schema", "trine-lab/nogo"}, {"reports", arr}, {"verified", all}};
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "halting-operator certificate: conditions (i)-(iii) are jointly infeasible\n";
    for (const auto& r : reports)
      os << "  chi = " << fmt_sig17(r.chi) << "  contradiction = " << (r.contradiction ? "true" : "FALSE")
         << "  margins (s>1/3, s<1/3, center) = " << fmt_sig17(r.margin_s_above) << ", "
         << fmt_sig17(r.margin_s_below) << ", " << fmt_sig17(r.margin_center)
         << "  sweep min deviation = " << fmt_sig17(r.sweep_min_deviation) << " over " << r.sweep_samples
         << " samples\n";
    os << "  verified               " << (all ? "yes" : "NO") << "\n";
    payload = os.str();
  }
  const int rc = emit(cfg, payload);
  if (rc != kExitOk) return rc;
  return all ? kExitOk : kExitVerifyFailed;
}

int run_verify_all(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.corrupt_pgm = cfg.corrupt_pgm;
  const auto results = run_acceptance_criteria(opt);
  const HeadlineNumbers h = headline_numbers();

  bool all = true;
  std::ostringstream os;
  for (const auto& r : results) {
    all = all && r.passed;
    os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << "\n"
       << "     " << r.detail << "\n";
  }
  os << "\nsummary\n"
     << "  global (= SEP)   " << fmt_sci17(h.global_error) << "\n"
     << "  separable        " << fmt_sci17(h.sep_error) << "\n"
     << "  two-way LOCC     " << fmt_sci17(h.two_way_error) << "\n"
     << "  one-way LOCC     " << fmt_sci17(h.one_way_error) << "\n"
     << "  chain            global < two-way < one-way: "
     << ((h.global_error < h.two_way_error && h.two_way_error < h.one_way_error) ? "holds" : "VIOLATED")
     << "\n"
     << (all ? "all criteria passed\n" : "SOME CRITERIA FAILED\n");

  std::string payload;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back(json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    json j{{"schema", "trine-lab/verify-all"},
           {"criteria", arr},
           {"summary",
            {{"global_error", h.global_error},
             {"sep_error", h.sep_error},
             {"two_way_error", h.two_way_error},
             {"one_way_error", h.one_way_error}}},
           {"all_passed", all}};
    payload = j.dump(2) + "\n";
  } else {
    payload = os.str();
  }
  const int rc = emit(cfg, payload);
  if (rc != kExitOk) return rc;
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"trine-lab: minimum-error discrimination of the double-trine ensemble"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub, bool with_grid, bool with_seed) {
    sub->add_option("--tol", cfg.tolerance, "verification tolerance")->check(CLI::Range(1e-300, 1e-3));
    sub->add_option("--out", cfg.output_path, "write output to this path instead of stdout");
    if (with_grid)
      sub->add_option("--grid-step", cfg.grid_step, "sweep grid step")->check(CLI::Range(1e-300, 0.1));
    if (with_seed) sub->add_option("--seed", cfg.seed, "RNG seed for randomized sweeps");
  };
  const auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(allowed));
  };

  CLI::App* c_global = app.add_subcommand("global", "global optimum and its certificates");
  add_common(c_global, false, false);
  add_format(c_global, {"text", "json"});

  CLI::App* c_sep = app.add_subcommand("sep", "separable POVM attaining the global optimum");
  add_common(c_sep, false, false);
  add_format(c_sep, {"text", "json"});

  CLI::App* c_oneway = app.add_subcommand("oneway", "one-way LOCC optimum");
  add_common(c_oneway, true, false);
  add_format(c_oneway, {"text", "json"});

  CLI::App* c_twoway = app.add_subcommand("twoway", "two-way adaptive protocol sweep");
  add_common(c_twoway, true, false);
  add_format(c_twoway, {"text", "json", "csv"});

  CLI::App* c_nogo = app.add_subcommand("nogo", "halting-operator infeasibility certificate");
  add_common(c_nogo, false, true);
  add_format(c_nogo, {"text", "json"});
  c_nogo->add_option("--chi", cfg.chi_values, "chi values (> 1/3 + 1e-6)");
  c_nogo->add_option("--samples", cfg.sweep_samples, "random product samples per chi")->check(CLI::PositiveNumber);

  CLI::App* c_verify = app.add_subcommand("verify-all", "run the full verification battery");
  add_common(c_verify, false, true);
  add_format(c_verify, {"text", "json"});
  c_verify->add_flag("--corrupt-pgm", cfg.corrupt_pgm, "perturb one PGM element (negative self-test control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (const char* env_seed = std::getenv("TRINE_LAB_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env_seed, &end, 10);
    if (end == env_seed || *end != '\0') {
      std::cerr << "error: TRINE_LAB_SEED must be an integer\n";
      return kExitUsage;
    }
    cfg.seed = v;
  }

  try {
    if (c_global->parsed()) return run_global(cfg);
    if (c_sep->parsed()) return run_sep(cfg);
    if (c_oneway->parsed()) return run_oneway(cfg);
    if (c_twoway->parsed()) return run_twoway(cfg);
    if (c_nogo->parsed()) return run_nogo(cfg);
    if (c_verify->parsed()) return run_verify_all(cfg);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
