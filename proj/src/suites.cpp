#include "hht/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hht/catalog.hpp"
#include "hht/convolution.hpp"
#include "hht/errors.hpp"
#include "hht/hartley.hpp"
#include "hht/homogeneous.hpp"

namespace hht {

using quad::QuadratureConfig;
using std::numbers::pi;

namespace {

constexpr std::array<double, 4> kInversionX{0.3, 0.7, 1.0, 2.7};
constexpr std::array<double, 6> kForwardX{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
constexpr std::array<double, 3> kProbeX{0.5, 1.0, 2.0};

// Lower bounds on eigen residuals at lambda = 1, pinned from measured runs
// (exp: 0.216 sup / 1.09 L2; gaussian candidate: 0.358 / 0.849) with margin.
// They guard against regressions; they are not derived bounds.
constexpr double kEigenFloorSup = 0.05;
constexpr double kEigenFloorL2 = 0.5;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// int_0^inf f(t) dt for smooth non-oscillating f.
double integrate_half_line(const quad::RealFn& f, double end, const QuadratureConfig& cfg,
                           quad::Singularity sing = quad::Singularity::none) {
  const double A = std::isfinite(end) ? end : 1.0;
  double v = quad::integrate_adaptive(f, 0.0, A, cfg, sing).value;
  if (!std::isfinite(end)) v += quad::integrate_semi_infinite(f, A, cfg).value;
  return v;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

VerificationReport inversion_suite(const SuiteOptions& o) {
  const auto& cfg = o.cfg;
  const double k = o.tol_scale;
  VerificationReport rep("inversion");
  // Forward routes against the closed form of H e^{-t}.
  const auto& e = catalog_entry("exp");
  const auto F = e.mellin_line();
  std::array<double, 3> worst{};
  for (double x : kForwardX) {
    const double want = e.hartley(x);
    worst[0] = std::max(worst[0], std::abs(hartley_forward_direct(e.f, x, cfg) - want));
    worst[1] = std::max(worst[1], std::abs(hartley_forward_regularized(e.f, x, cfg) - want));
    worst[2] = std::max(worst[2], std::abs(hartley_forward_mellin(F, x, cfg) - want));
  }
  rep.at_most("forward_direct/exp", worst[0], 0.0, 1e-7 * k);
  rep.at_most("forward_regularized/exp", worst[1], 0.0, 1e-7 * k);
  rep.at_most("forward_mellin/exp", worst[2], 0.0, 1e-7 * k);

  for (const char* name : {"exp", "texp", "gauss", "lorentz"}) {
    const auto& c = catalog_entry(name);
    const auto h = hartley_image(c, cfg, o.ex);
    const auto got = hartley_inverse_grid(h, kInversionX, cfg, o.ex);
    for (std::size_t i = 0; i < kInversionX.size(); ++i) {
      const double x = kInversionX[i];
      rep.at_most(std::string("round_trip/") + name + "/x=" + fmt(x), rel_err(got[i], c.f(x)), 0.0, 1e-3 * k);
    }
  }
  return rep;
}

VerificationReport norms_suite(const SuiteOptions& o) {
  VerificationReport rep("norms");
  for (const auto& e : catalog()) {
    auto r = norm_bounds_check(e, o.cfg);
    VerificationReport scaled(e.name);
    for (const auto& c : r.cases()) scaled.add(c.name, c.measured, c.bound, c.tolerance * o.tol_scale, c.kind, c.note);
    rep.merge(scaled);
  }
  const auto F = catalog_entry("exp").mellin_line();
  auto g = [&](double tau) {
    const double m = special::theta_modulus(tau);
    return cplx(m * m * std::norm(F.at(-tau)), 0.0);
  };
  const double hf_sq = integrate_on_line(g, F, 0, 0.0, o.cfg).value.real();
  rep.near("exp/hf_norm_sq", hf_sq, 1.0 + 2.0 / pi, 1e-6 * o.tol_scale);
  return rep;
}

VerificationReport multiplier_suite(const SuiteOptions& o) {
  VerificationReport rep("multiplier");
  const auto tau = linear_grid(-20.0, 20.0, 1001);
  double lo = INFINITY, hi = 0.0, refl = 0.0;
  for (double t : tau) {
    const CriticalPoint p(t);
    const cplx th = special::theta_multiplier(p);
    const double m = std::abs(th);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
    const cplx prod = th * special::theta_multiplier(p.reflected());
    refl = std::max(refl, std::abs(prod - (2.0 + 2.0 / std::cosh(pi * t))));
  }
  rep.at_least("band_lower", lo, std::numbers::sqrt2, 1e-10 * o.tol_scale);
  rep.at_most("band_upper", hi, 2.0, 1e-10 * o.tol_scale);
  rep.at_most("reflection", refl, 0.0, 1e-9 * o.tol_scale);
  return rep;
}

VerificationReport parseval_suite(const SuiteOptions& o) {
  const auto& cfg = o.cfg;
  VerificationReport rep("parseval");
  for (const auto& e : catalog()) {
    if (!e.l2_norm_sq || e.f.identically_zero) continue;
    const double direct = integrate_half_line([&](double t) { return e.f(t) * e.f(t); }, e.f.effective_end(), cfg);
    const double line = parseval_sq_norm(e.mellin_line(), cfg).value;
    rep.near(e.name + "/direct", direct, *e.l2_norm_sq, 1e-8 * o.tol_scale);
    rep.near(e.name + "/line", line, *e.l2_norm_sq, 1e-8 * o.tol_scale);
  }
  const std::array<std::pair<const char*, const char*>, 4> pairs{
      {{"exp", "texp"}, {"exp", "gauss"}, {"texp", "lorentz"}, {"gauss", "exp"}}};
  for (auto [a, b] : pairs) {
    const auto& f1 = catalog_entry(a);
    const auto& f2 = catalog_entry(b);
    const auto F1 = f1.mellin_line(), F2 = f2.mellin_line();
    for (double x : kProbeX) {
      const double end = std::min(f1.f.effective_end() / x, f2.f.effective_end());
      const double left = integrate_half_line([&](double t) { return f1.f(x * t) * f2.f(t); }, end, cfg);
      const double right = generalized_parseval(F1, F2, x, cfg);
      rep.at_most(std::string("generalized/") + a + "," + b + "/x=" + fmt(x), std::abs(left - right), 0.0,
                  1e-6 * o.tol_scale);
    }
  }
  return rep;
}

VerificationReport factorization_suite(const SuiteOptions& o) {
  const auto& cfg = o.cfg;
  const double k = o.tol_scale;
  VerificationReport rep("factorization");
  const std::array<std::pair<const char*, const char*>, 2> pairs{{{"exp", "exp"}, {"exp", "texp"}}};
  for (auto [a, b] : pairs) {
    const auto& f = catalog_entry(a);
    const auto& g = catalog_entry(b);
    const std::string tag = std::string(a) + "*" + b;
    const auto p = convolve(f, g, kProbeX, ConvolutionRoute::parseval, cfg, o.ex).values;
    const auto m = convolve(f, g, kProbeX, ConvolutionRoute::mellin_line, cfg, o.ex).values;
    const auto d = convolve(f, g, kProbeX, ConvolutionRoute::double_mb, cfg, o.ex).values;
    for (std::size_t i = 0; i < kProbeX.size(); ++i) {
      const double spread = std::max({std::abs(p[i] - m[i]), std::abs(p[i] - d[i]), std::abs(m[i] - d[i])});
      rep.at_most("routes/" + tag + "/x=" + fmt(kProbeX[i]), spread, 0.0, 2e-3 * k);
    }

    const std::array<double, 4> xs{0.5, 1.0, 2.0, 5.0};
    auto fr = factorization_residual(f, g, xs, cfg, o.ex);
    VerificationReport scaled(tag);
    for (const auto& c : fr.cases()) scaled.add(c.name, c.measured, c.bound, c.tolerance * k, c.kind, c.note);
    rep.merge(scaled);

    // Mellin transform of the sampled Parseval output against the line
    // integral at s = 1/2. Sampled over ten decades so the tail models
    // contribute below the tolerance.
    const auto hf = hartley_image(f, cfg, o.ex), hg = hartley_image(g, cfg, o.ex);
    const auto P = sample_convolution(hf, hg, cfg, o.ex, 1e-6, 1e4).as_function();
    const cplx lhs = mellin_forward_at(P, 0.0, cfg);
    const cplx rhs = convolve_mellin_line(f.mellin_line(), g.mellin_line(), CriticalPoint(0.0), cfg);
    rep.at_most("mellin_consistency/" + tag, std::abs(lhs - rhs), 0.0, 1e-4 * k);

    auto nb = norm_bound_check(f, g, cfg, o.ex);
    VerificationReport nbs(tag);
    for (const auto& c : nb.cases()) nbs.add(c.name, c.measured, c.bound, c.tolerance * k, c.kind, c.note);
    rep.merge(nbs);
  }
  double kmax = 0.0;
  for (double t : linear_grid(-5.0, 5.0, 41)) {
    for (double th : linear_grid(-5.0, 5.0, 41)) kmax = std::max(kmax, std::abs(double_mb_kernel(t, th)));
  }
  rep.at_most("kernel_bound", kmax, 4.0 * std::sqrt(2.0 * pi), 1e-8 * k);
  return rep;
}

VerificationReport operator_identity_suite(const SuiteOptions& o) {
  VerificationReport rep("operator-identity");
  for (const char* name : {"exp", "texp"}) {
    for (double x : kProbeX) {
      rep.at_most(std::string(name) + "/x=" + fmt(x),
                  std::abs(operator_identity_residual(catalog_entry(name), x, o.cfg)), 0.0, 1e-4 * o.tol_scale);
    }
  }
  return rep;
}

VerificationReport homogeneous_suite(const SuiteOptions& o) {
  const auto& cfg = o.cfg;
  const double k = o.tol_scale;
  VerificationReport rep("homogeneous");
  const auto tau = linear_grid(-30.0, 30.0, 1001);
  for (double l : {0.0, 0.5, -0.5, 1.0, -1.0, 1.41, -1.41}) {
    VerificationReport r = corollary1_check(l, tau);
    VerificationReport named("lambda=" + fmt(l));
    for (const auto& c : r.cases()) named.add(c.name, c.measured, c.bound, c.tolerance, c.kind, c.note);
    rep.merge(named);
  }
  double band_err = 0.0;
  for (double t : tau) {
    const double b = std::abs(homogeneous_bracket(CriticalPoint(t)));
    band_err = std::max({band_err, std::numbers::sqrt2 - b, b - 2.0, 0.0});
  }
  rep.at_most("bracket_band", band_err, 0.0, 1e-10 * k);

  const auto xs = decade_grid(1e-2, 1e2, 8);
  for (const char* phi_name : {"gaussian", "sech"}) {
    const auto phi = test_phi(phi_name);
    for (double l : {0.0, 0.5, 1.0}) {
      const SpectralParameter lp(l);
      const auto c = solution_candidate(phi, lp, xs, cfg, o.ex);
      VerificationReport sw = sandwich_check(c, lp, 1e-8 * k);
      VerificationReport named(std::string(phi_name) + "/lambda=" + fmt(l));
      for (const auto& cs : sw.cases()) named.add(cs.name, cs.measured, cs.bound, cs.tolerance, cs.kind, cs.note);
      named.at_most("imag_residue", c.imag_residue, 0.0, 1e-8 * k);
      if (l == 1.0) {
        const auto er = eigen_residual(c, 1.0, cfg, o.ex);
        named.at_least("eigen_residual_sup", er.sup, kEigenFloorSup, 0.0, "regression floor");
        named.at_least("eigen_residual_l2", er.l2, kEigenFloorL2, 0.0, "regression floor");
      }
      rep.merge(named);
    }
  }
  for (const auto& e : catalog()) {
    if (e.f.identically_zero) continue;
    const auto er = eigen_residual(e, 1.0, xs, cfg, o.ex);
    rep.at_least("eigen_residual_sup/" + e.name, er.sup, kEigenFloorSup, 0.0, "regression floor");
    rep.at_least("eigen_residual_l2/" + e.name, er.l2, kEigenFloorL2, 0.0, "regression floor");
  }

  const auto& ex = catalog_entry("exp");
  rep.near("stieltjes/exp/x=1", stieltjes_apply(ex.f, 1.0, cfg), 2.0 / pi * std::exp(1.0) * -std::expint(-1.0),
           1e-10 * k);
  const cplx ms = mellin_forward_at(stieltjes_image(ex.f, cfg), 0.0, cfg);
  rep.at_most("stieltjes_symbol/exp", std::abs(ms - 2.0 * std::sqrt(pi)), 0.0, 1e-6 * k);

  // Complex lambda: informational only.
  auto scan = multiplier_scan(SpectralParameter(cplx(0.5, 0.5)), tau);
  rep.merge(scan);
  return rep;
}

VerificationReport special_kernels_suite(const SuiteOptions& o) {
  const auto& cfg = o.cfg;
  const double k = o.tol_scale;
  VerificationReport rep("special-kernels");
  for (double u : {0.5, 2.0, 10.0}) {
    // t = u - v^2 removes the (u - t)^{-1/2} singularity.
    auto g = [u](double v) { return 2.0 * std::cos(u - v * v); };
    const double rhs = quad::integrate_adaptive(g, 0.0, std::sqrt(u), cfg).value;
    rep.near("phi_integral/u=" + fmt(u), special::inverse_kernel_phi(u), rhs / pi, 1e-8 * k);
  }
  for (double x : {0.5, 1.0, 5.0}) {
    auto g = [x](double t) { return 2.0 * std::exp(-x * t) * std::sqrt(t) / (1.0 + t * t); };
    const double lap = quad::integrate_adaptive(g, 0.0, 1.0, cfg, quad::Singularity::left).value +
                       quad::integrate_semi_infinite(g, 1.0, cfg).value;
    rep.near("k_laplace/x=" + fmt(x), special::kernel_k(x), lap, 1e-8 * k);
  }
  const auto far = special::fresnel(1e8);
  rep.near("fresnel_limit/C", far.c, 0.5, 1e-4 * k);
  rep.near("fresnel_limit/S", far.s, 0.5, 1e-4 * k);
  rep.at_most("k_decay/x=100", std::abs(special::kernel_k(100.0)), 0.05, 0.0);
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"inversion", "norms", "multiplier", "parseval", "factorization", "operator-identity", "homogeneous",
          "special-kernels"};
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& opt) {
  opt.cfg.validate();
  if (!(opt.tol_scale > 0.0) || !std::isfinite(opt.tol_scale)) throw DomainError("tol_scale must be > 0");
  if (name == "all") {
    VerificationReport all("all");
    for (const auto& n : suite_names()) all.merge(run_suite(n, opt));
    return all;
  }
  if (name == "inversion") return inversion_suite(opt);
  if (name == "norms") return norms_suite(opt);
  if (name == "multiplier") return multiplier_suite(opt);
  if (name == "parseval") return parseval_suite(opt);
  if (name == "factorization") return factorization_suite(opt);
  if (name == "operator-identity") return operator_identity_suite(opt);
  if (name == "homogeneous") return homogeneous_suite(opt);
  if (name == "special-kernels") return special_kernels_suite(opt);
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

MellinLineFunction test_phi(std::string_view name) {
  if (name == "gaussian") {
    return MellinLineFunction::from_evaluator([](double t) { return cplx(std::exp(-t * t)); }, 40.0, 0, true);
  }
  if (name == "sech") {
    return MellinLineFunction::from_evaluator([](double t) { return cplx(1.0 / std::cosh(t)); }, 40.0, 0, true);
  }
  throw DomainError("unknown test phi '" + std::string(name) + "'");
}

nlohmann::json to_json(const QuadratureConfig& cfg) {
  return {{"abs_tol", cfg.abs_tol},
          {"rel_tol", cfg.rel_tol},
          {"max_subdivisions", cfg.max_subdivisions},
          {"tail_periods_min", cfg.tail_periods_min},
          {"acceleration_order", cfg.acceleration_order},
          {"contour_truncation_T", cfg.contour_truncation_T},
          {"max_tail_periods", cfg.max_tail_periods}};
}

}  // namespace hht
