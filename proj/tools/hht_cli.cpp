// hht: half-Hartley transforms, inversion, convolution and verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 numerical failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hht/catalog.hpp"
#include "hht/convolution.hpp"
#include "hht/csv.hpp"
#include "hht/errors.hpp"
#include "hht/hartley.hpp"
#include "hht/suites.hpp"

namespace {

using namespace hht;

constexpr int kOk = 0, kFailed = 1, kUsage = 2, kNumerical = 3;

struct GridArgs {
  double xmin = 0.1;
  double xmax = 10.0;
  std::size_t n = 50;
  bool log_grid = false;

  std::vector<double> grid() const {
    if (!(xmin > 0.0) || !(xmax >= xmin) || !std::isfinite(xmax)) throw InputError("need 0 < xmin <= xmax");
    if (n == 0) throw InputError("--n must be >= 1");
    if (n == 1) return {xmin};
    if (xmin == xmax) throw InputError("xmin == xmax needs --n 1");
    return log_grid ? geometric_grid(xmin, xmax, n) : linear_grid(xmin, xmax, n);
  }
};

void add_grid(CLI::App* app, GridArgs& g) {
  app->add_option("--xmin", g.xmin, "Left end of the output grid")->capture_default_str();
  app->add_option("--xmax", g.xmax, "Right end of the output grid")->capture_default_str();
  app->add_option("--n", g.n, "Number of grid points")->capture_default_str();
  app->add_flag("--log-grid", g.log_grid, "Geometric instead of uniform spacing");
}

// HHT_TOL sets the default absolute and relative tolerance; --tol wins.
quad::QuadratureConfig make_config(const std::optional<double>& tol) {
  quad::QuadratureConfig cfg;
  double t = cfg.abs_tol;
  if (const char* env = std::getenv("HHT_TOL"); env && *env) {
    try {
      std::size_t used = 0;
      t = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw InputError(std::string("HHT_TOL: cannot parse '") + env + "'");
    }
  }
  if (tol) t = *tol;
  cfg.abs_tol = cfg.rel_tol = t;
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  return cfg;
}

// Writes to path, or standard output for "" and "-".
template <class Fn>
void with_output(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write(out);
  if (!out) throw InputError("write to '" + path + "' failed");
}

HalfLineFunction load_samples(const std::string& path, const std::string& decay) {
  const auto s = csv::read_samples_file(path);
  if (s.x.size() < 2) throw InputError("csv: need at least two rows");
  return SampledFunction(s.x, s.value, parse_decay_class(decay)).as_function();
}

struct TransformArgs {
  std::string function, input, decay = "exponential", method = "direct", output;
  GridArgs grid;
  std::optional<double> tol;
};

int cmd_transform(const TransformArgs& a) {
  if (a.function.empty() == a.input.empty()) throw InputError("transform: give exactly one of --function, --input");
  const auto cfg = make_config(a.tol);
  const auto xs = a.grid.grid();
  const auto method = parse_hartley_method(a.method);
  TransformResult r;
  if (!a.function.empty()) {
    const auto& e = catalog_entry(a.function);
    r = method == HartleyMethod::mellin ? hartley_transform(e.mellin_line(), xs, cfg)
                                        : hartley_transform(e.f, xs, method, cfg);
  } else {
    r = hartley_transform(load_samples(a.input, a.decay), xs, method, cfg);
  }
  with_output(a.output, [&](std::ostream& out) { csv::write_samples(out, r.x_grid, r.values); });
  return kOk;
}

struct InvertArgs {
  std::string input, decay = "polynomial", output;
  GridArgs grid;
  std::optional<double> tol;
};

int cmd_invert(const InvertArgs& a) {
  const auto cfg = make_config(a.tol);
  const auto xs = a.grid.grid();
  const auto h = load_samples(a.input, a.decay);
  const auto v = hartley_inverse_grid(h, xs, cfg);
  with_output(a.output, [&](std::ostream& out) { csv::write_samples(out, xs, v); });
  return kOk;
}

struct ConvolveArgs {
  std::string f, g, route = "parseval", output, report;
  GridArgs grid;
  bool check_routes = false, strict = false;
  std::optional<double> tol;
};

int cmd_convolve(const ConvolveArgs& a) {
  const auto cfg = make_config(a.tol);
  const auto xs = a.grid.grid();
  const auto& f = catalog_entry(a.f);
  const auto& g = catalog_entry(a.g);
  const auto route = parse_convolution_route(a.route);
  const auto r = convolve(f, g, xs, route, cfg);
  if (!a.check_routes) {
    with_output(a.output, [&](std::ostream& out) { csv::write_samples(out, xs, r.values); });
    return kOk;
  }
  if ((a.output.empty() || a.output == "-") && (a.report.empty() || a.report == "-")) {
    throw InputError("convolve --check-routes: give --output or --report so CSV and JSON do not share stdout");
  }
  VerificationReport rep("convolve/" + f.name + "*" + g.name);
  constexpr double kRouteTol = 2e-3;
  for (auto other : {ConvolutionRoute::parseval, ConvolutionRoute::mellin_line, ConvolutionRoute::double_mb}) {
    if (other == route) continue;
    const auto o = convolve(f, g, xs, other, cfg);
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(o.values[i] - r.values[i]));
    rep.at_most("route/" + to_string(route) + "-" + to_string(other), worst, 0.0, kRouteTol);
  }
  const std::vector<double> probes{0.5, 1.0, 2.0, 5.0};
  rep.merge(factorization_residual(f, g, probes, cfg));
  rep.config = {{"f", f.name}, {"g", g.name}, {"route", to_string(route)},
                {"grid", {{"xmin", a.grid.xmin}, {"xmax", a.grid.xmax}, {"n", a.grid.n}, {"log", a.grid.log_grid}}},
                {"quadrature", to_json(cfg)}};
  with_output(a.output, [&](std::ostream& out) { csv::write_samples(out, xs, r.values); });
  with_output(a.report, [&](std::ostream& out) { out << rep.to_json().dump(2) << '\n'; });
  return a.strict && !rep.pass() ? kNumerical : kOk;
}

struct VerifyArgs {
  std::string suite, report;
  double tol_scale = 1.0;
  bool timing = false;
  std::optional<double> tol;
};

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions opt;
  opt.cfg = make_config(a.tol);
  opt.tol_scale = a.tol_scale;
  const auto t0 = std::chrono::steady_clock::now();
  auto rep = run_suite(a.suite, opt);
  // Timing is opt-in so that reports are byte-identical across runs.
  if (a.timing) {
    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                           .count();
  }
  rep.config = {{"suite", a.suite}, {"tol_scale", a.tol_scale}, {"quadrature", to_json(opt.cfg)}};
  with_output(a.report, [&](std::ostream& out) { out << rep.to_json().dump(2) << '\n'; });
  for (const auto& c : rep.cases()) {
    if (!c.pass) std::cerr << "FAIL " << c.name << ": measured " << c.measured << ", bound " << c.bound << '\n';
  }
  return rep.pass() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Half-Hartley transform toolkit"};
  app.require_subcommand(1);

  TransformArgs ta;
  auto* t = app.add_subcommand("transform", "Forward half-Hartley transform to x,value CSV");
  t->add_option("--function", ta.function, "Catalog function name");
  t->add_option("--input", ta.input, "x,value CSV of samples");
  t->add_option("--decay", ta.decay, "Tail model for --input: compact|exponential|gaussian|polynomial")
      ->capture_default_str();
  t->add_option("--method", ta.method, "direct|regularized|mellin")->capture_default_str();
  add_grid(t, ta.grid);
  t->add_option("--tol", ta.tol, "Absolute and relative quadrature tolerance");
  t->add_option("--output", ta.output, "Output CSV (default stdout)");

  InvertArgs ia;
  auto* inv = app.add_subcommand("invert", "Recover f from samples of its half-Hartley transform");
  inv->add_option("--input", ia.input, "x,value CSV of the transform")->required();
  inv->add_option("--decay", ia.decay, "Tail model of the input")->capture_default_str();
  add_grid(inv, ia.grid);
  inv->add_option("--tol", ia.tol, "Absolute and relative quadrature tolerance");
  inv->add_option("--output", ia.output, "Output CSV (default stdout)");

  ConvolveArgs ca;
  auto* cv = app.add_subcommand("convolve", "Convolution of two catalog functions");
  cv->add_option("--f", ca.f, "First catalog function")->required();
  cv->add_option("--g", ca.g, "Second catalog function")->required();
  cv->add_option("--route", ca.route, "parseval|mellin_line|double_mb")->capture_default_str();
  add_grid(cv, ca.grid);
  cv->add_flag("--check-routes", ca.check_routes, "Compare all routes and the factorization identity");
  cv->add_flag("--strict", ca.strict, "Exit 3 when a --check-routes residual exceeds its tolerance");
  cv->add_option("--report", ca.report, "JSON report for --check-routes (default stdout)");
  cv->add_option("--tol", ca.tol, "Absolute and relative quadrature tolerance");
  cv->add_option("--output", ca.output, "Output CSV (default stdout)");

  VerifyArgs va;
  auto* vf = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  vf->add_option("--suite", va.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  vf->add_option("--tol-scale", va.tol_scale, "Multiply every case tolerance")->capture_default_str();
  vf->add_option("--report", va.report, "JSON report path (default stdout)");
  vf->add_flag("--timing", va.timing, "Record wall time in the report");
  vf->add_option("--tol", va.tol, "Absolute and relative quadrature tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*t) return cmd_transform(ta);
    if (*inv) return cmd_invert(ia);
    if (*cv) return cmd_convolve(ca);
    if (*vf) return cmd_verify(va);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}
