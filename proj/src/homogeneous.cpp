#include "hht/homogeneous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hht/errors.hpp"
#include "hht/hartley.hpp"

namespace hht {

using quad::QuadratureConfig;
using std::numbers::pi;

SpectralParameter::SpectralParameter(cplx lambda) : lambda_(lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) || !(std::abs(lambda) < std::numbers::sqrt2)) {
    throw DomainError("spectral parameter: |lambda| must be < sqrt2");
  }
}

cplx multiplier_m(const SpectralParameter& lambda, CriticalPoint p) {
  const cplx l = lambda.value();
  // 2/cosh underflows gracefully to 0 for large |tau|.
  return l * l - 2.0 - 2.0 / std::cosh(pi * p.tau());
}

VerificationReport corollary1_check(double lambda, std::span<const double> tau_grid) {
  const SpectralParameter lp(lambda);
  VerificationReport rep("corollary1");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double tau : tau_grid) {
    const double m = multiplier_m(lp, CriticalPoint(tau)).real();
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  rep.at_most("max_m", hi, lambda * lambda - 2.0, 0.0, "m <= lambda^2 - 2 < 0 everywhere");
  rep.add("min_m", lo, -4.0, 0.0, CaseKind::at_least);
  rep.at_most("max_m_negative", hi, 0.0, 0.0);
  return rep;
}

VerificationReport multiplier_scan(const SpectralParameter& lambda, std::span<const double> tau_grid) {
  VerificationReport rep("multiplier_scan");
  double lo = std::numeric_limits<double>::infinity();
  for (double tau : tau_grid) lo = std::min(lo, std::abs(multiplier_m(lambda, CriticalPoint(tau))));
  const char* note = lambda.is_real() ? "" : "complex lambda: informational, no triviality claim";
  rep.at_least("min_abs_m", lo, 0.0, 0.0, note);
  return rep;
}

cplx homogeneous_bracket(CriticalPoint p) {
  const cplx s = p.s();
  const cplx a = pi * s / 2.0;
  const cplx inv_gamma = std::exp(-special::log_gamma(1.0 - s));
  return std::sqrt(pi / 2.0) * inv_gamma * (1.0 / std::cos(a) + 1.0 / std::sin(a));
}

double stieltjes_apply(const HalfLineFunction& psi, double x, const QuadratureConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("stieltjes_apply: x must be > 0 and finite");
  cfg.validate();
  if (psi.identically_zero) return 0.0;
  const double end = psi.effective_end();
  if (!std::isfinite(end) && psi.decay == DecayClass::polynomial && !(psi.decay_order > 0.0)) {
    throw DomainError("stieltjes_apply: psi must decay for the integral to converge");
  }
  auto g = [&](double t) {
    const double v = psi(t);
    return v == 0.0 ? 0.0 : v / (x + t);
  };
  std::vector<double> pts{0.0, std::min(x, 1.0), x, 1.0};
  for (double b : psi.breakpoints) pts.push_back(b);
  const double A = std::isfinite(end) ? end : std::max({4.0 * x, 4.0, psi.breakpoints.empty() ? 0.0 : psi.breakpoints.back()});
  std::erase_if(pts, [&](double p) { return p < 0.0 || p > A; });
  pts.push_back(A);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto sing = psi.rough_at_zero ? quad::Singularity::left : quad::Singularity::none;
  auto near = quad::integrate_points(g, pts, cfg, sing);
  if (!near.converged) throw NumericalError("stieltjes_apply: no convergence");
  double sum = near.value;
  if (!std::isfinite(end)) sum += quad::integrate_semi_infinite(g, A, cfg).value;
  return 2.0 / pi * sum;
}

HalfLineFunction stieltjes_image(const HalfLineFunction& psi, const QuadratureConfig& cfg) {
  if (psi.identically_zero) return zero_function();
  HalfLineFunction s;
  s.eval = [psi, cfg](double x) { return stieltjes_apply(psi, x, cfg); };
  // Logarithmic at 0 when psi(0) != 0; ~ (2/pi) int psi / x at infinity
  // unless psi itself decays more slowly.
  s.decay = DecayClass::polynomial;
  s.decay_order = psi.decay == DecayClass::polynomial ? std::min(1.0, psi.decay_order) : 1.0;
  s.rough_at_zero = true;
  return s;
}

SampledFunction SolutionCandidate::sampled() const { return SampledFunction(x_grid, values, DecayClass::polynomial); }

SolutionCandidate solution_candidate(const MellinLineFunction& phi, const SpectralParameter& lambda,
                                     std::span<const double> x_grid, const QuadratureConfig& cfg, Execution ex) {
  double peak = 0.0, asym = 0.0;
  const auto& tau = phi.tau_grid();
  for (std::size_t i = 0; i < tau.size(); ++i) {
    peak = std::max(peak, std::abs(phi.values()[i]));
    asym = std::max(asym, std::abs(phi.at(tau[i]) - phi.at(-tau[i])));
  }
  if (asym > 1e-9 * peak) throw DomainError("solution_candidate: phi(s) must equal phi(1 - s)");

  const cplx l = lambda.value();
  MellinLineFunction f_star = MellinLineFunction::zero(phi.truncation_T(), tau.size());
  if (!phi.identically_zero()) {
    if (phi.has_evaluator()) {
      auto fn = [phi, l](double t) { return (l + special::theta_multiplier(CriticalPoint(t))) * phi.at(t); };
      f_star = MellinLineFunction::from_evaluator(fn, phi.truncation_T(), phi.algebraic_order(), false, tau.size());
    } else {
      std::vector<cplx> v(tau.size());
      for (std::size_t i = 0; i < tau.size(); ++i) {
        v[i] = (l + special::theta_multiplier(CriticalPoint(tau[i]))) * phi.values()[i];
      }
      f_star = MellinLineFunction(tau, std::move(v));
    }
  }

  SolutionCandidate c{std::vector<double>(x_grid.begin(), x_grid.end()), {}, 0.0, f_star, 0.0, 0.0};
  c.f_star_norm = std::sqrt(parseval_sq_norm(f_star, cfg).value);
  c.phi_norm = phi.identically_zero() ? 0.0 : std::sqrt(parseval_sq_norm(phi, cfg).value);
  const auto vals =
      map_grid<cplx>(x_grid, [&](double x) { return mellin_inverse_complex(f_star, x, cfg).value; }, ex);
  c.values.resize(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    c.values[i] = vals[i].real();
    c.imag_residue = std::max(c.imag_residue, std::abs(vals[i].imag()));
  }
  return c;
}

VerificationReport sandwich_check(const SolutionCandidate& c, const SpectralParameter& lambda, double slack) {
  VerificationReport rep("sandwich");
  const double l = std::abs(lambda.value());
  rep.at_least("phi_norm_lower", c.phi_norm, c.f_star_norm / (2.0 + l), slack);
  rep.at_most("phi_norm_upper", c.phi_norm, c.f_star_norm / (std::numbers::sqrt2 - l), slack);
  return rep;
}

namespace {

// ||theta(s) F(1-s) - lambda F(s)|| / ||F||.
double l2_residual(const MellinLineFunction& F, double lambda, const QuadratureConfig& cfg) {
  if (F.identically_zero()) return 0.0;
  auto g = [&](double tau) {
    // Past the gamma range the cross term rotates like tau ln tau and
    // averages out against the algebraic tail; keep the two squares.
    if (std::abs(tau) > special::kMaxImag) {
      const double m = special::theta_modulus(tau);
      return cplx(m * m * std::norm(F.at(-tau)) + lambda * lambda * std::norm(F.at(tau)), 0.0);
    }
    const cplx r =special::theta_multiplier(CriticalPoint(tau)) * F.at(-tau) - lambda * F.at(tau);
    return cplx(std::norm(r), 0.0);
  };
  const double num = integrate_on_line(g, F, 2 * F.algebraic_order(), 0.0, cfg).value.real();
  return std::sqrt(num / parseval_sq_norm(F, cfg).value);
}

double sup_residual(std::span<const double> hf, std::span<const double> f, double lambda) {
  double r = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    r = std::max(r, std::abs(hf[i] - lambda * f[i]));
    peak = std::max(peak, std::abs(f[i]));
  }
  return r / (1.0 + peak);
}

}  // namespace

EigenResidual eigen_residual(const CatalogEntry& f, double lambda, std::span<const double> x_grid,
                             const QuadratureConfig& cfg, Execution ex) {
  if (f.f.identically_zero) return {};
  const auto h = hartley_image(f, cfg, ex);
  const auto hf = map_grid<double>(x_grid, [&](double x) { return h(x); }, ex);
  const auto fv = map_grid<double>(x_grid, [&](double x) { return f.f(x); }, ex);
  return {sup_residual(hf, fv, lambda), l2_residual(f.mellin_line(), lambda, cfg)};
}

EigenResidual eigen_residual(const SolutionCandidate& c, double lambda, const QuadratureConfig& cfg, Execution ex) {
  if (c.f_star.identically_zero()) return {};
  const auto hf = map_grid<double>(c.x_grid, [&](double x) { return hartley_forward_mellin(c.f_star, x, cfg); }, ex);
  return {sup_residual(hf, c.values, lambda), l2_residual(c.f_star, lambda, cfg)};
}

double operator_identity_residual(const CatalogEntry& f, double x, const QuadratureConfig& cfg) {
  const auto h = hartley_image(f, cfg, Execution::serial);
  const double hh = hartley_forward_direct(h, x, cfg);
  return hh - 2.0 * f.f(x) - stieltjes_apply(f.f, x, cfg);
}

}  // namespace hht
