#include "hht/hartley.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hht/errors.hpp"

namespace hht {

using quad::QuadratureConfig;

namespace {

using std::numbers::pi;
const double kSqrt2OverPi = std::sqrt(2.0 / pi);

void require_x(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(who) + ": x must be > 0 and finite");
}

using TailFn = std::function<double(double A)>;

// int_0^inf g over the support of f, where g oscillates at angular frequency
// omega with an envelope that is monotone beyond f's last breakpoint.
double integrate_half_line(const quad::RealFn& g, const HalfLineFunction& f, double omega,
                           const QuadratureConfig& cfg, const TailFn& tail = {}) {
  const double end = f.effective_end();
  std::vector<double> breaks;
  for (double b : f.breakpoints) {
    if (b > 0.0 && b < end) breaks.push_back(b);
  }
  double start = 0.0, sum = 0.0;
  if (f.rough_at_zero) {
    double b0 = std::min({pi / omega, 1.0, end});
    if (!breaks.empty()) b0 = std::min(b0, breaks.front());
    sum += quad::integrate_adaptive(g, 0.0, b0, cfg, quad::Singularity::left).value;
    start = b0;
  }
  if (std::isfinite(end)) return sum + quad::integrate_oscillatory_span(g, start, end, omega, cfg, breaks).value;
  const double A = std::max({breaks.empty() ? 0.0 : breaks.back(), 4.0 * pi / omega, 1.0, start});
  sum += quad::integrate_oscillatory_span(g, start, A, omega, cfg, breaks).value;
  sum += tail ? tail(A) : quad::integrate_oscillatory_tail(g, A, omega, cfg).value;
  return sum;
}

// 1 + sin y - cos y, written to avoid cancellation at small y.
double primitive_kernel(double y) {
  const double h = std::sin(y / 2.0);
  return std::sin(y) + 2.0 * h * h;
}

cplx theta_at(double tau) { return special::theta_multiplier(CriticalPoint(tau)); }

}  // namespace

HartleyMethod parse_hartley_method(std::string_view name) {
  if (name == "direct") return HartleyMethod::direct;
  if (name == "regularized") return HartleyMethod::regularized;
  if (name == "mellin") return HartleyMethod::mellin;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

std::string to_string(HartleyMethod m) {
  switch (m) {
    case HartleyMethod::direct: return "direct";
    case HartleyMethod::regularized: return "regularized";
    case HartleyMethod::mellin: return "mellin";
  }
  return "unknown";
}

double hartley_forward_direct(const HalfLineFunction& f, double x, const QuadratureConfig& cfg) {
  require_x(x, "hartley_forward_direct");
  cfg.validate();
  if (f.identically_zero) return 0.0;
  auto g = [&](double t) {
    const double v = f(t);
    return v == 0.0 ? 0.0 : (std::cos(x * t) + std::sin(x * t)) * v;
  };
  return kSqrt2OverPi * integrate_half_line(g, f, x, cfg);
}

double hartley_primitive(const HalfLineFunction& f, double x, const QuadratureConfig& cfg) {
  require_x(x, "hartley_primitive");
  cfg.validate();
  if (f.identically_zero) return 0.0;
  auto g = [&](double t) {
    const double v = f(t);
    return v == 0.0 ? 0.0 : primitive_kernel(x * t) / t * v;
  };
  return kSqrt2OverPi * integrate_half_line(g, f, x, cfg);
}

double hartley_forward_regularized(const HalfLineFunction& f, double x, const QuadratureConfig& cfg) {
  require_x(x, "hartley_forward_regularized");
  cfg.validate();
  if (f.identically_zero) return 0.0;
  const double h = 1e-3 * std::max(1.0, x);
  if (x <= 2.0 * h) throw DomainError("hartley_forward_regularized: x too close to 0 for the difference stencil");
  const std::array<double, 4> xs{x - 2 * h, x - h, x + h, x + 2 * h};
  const std::array<double, 4> cs{1.0 / (12 * h), -8.0 / (12 * h), 8.0 / (12 * h), -1.0 / (12 * h)};
  auto g = [&](double t) {
    const double v = f(t);
    if (v == 0.0) return 0.0;
    double k = 0.0;
    for (int j = 0; j < 4; ++j) k += cs[j] * primitive_kernel(xs[j] * t);
    return k / t * v;
  };
  // Beyond A the four shifted kernels beat against each other, so each
  // frequency gets its own tail; the constant term cancels in the stencil.
  auto tail = [&](double A) {
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double xj = xs[j];
      auto gj = [&](double t) { return (std::sin(xj * t) - std::cos(xj * t)) / t * f(t); };
      sum += cs[j] * quad::integrate_oscillatory_tail(gj, A, xj, cfg.tightened(1e-2)).value;
    }
    return sum;
  };
  return kSqrt2OverPi * integrate_half_line(g, f, xs[3], cfg, tail);
}

double hartley_forward_mellin(const MellinLineFunction& F, double x, const QuadratureConfig& cfg) {
  require_x(x, "hartley_forward_mellin");
  if (F.identically_zero()) return 0.0;
  if (F.algebraic_order() == 1) {
    throw DomainError("hartley_forward_mellin: transform decays only like 1/|tau|; the contour integral diverges");
  }
  if (F.has_evaluator() && F.algebraic_order() > 1) {
    throw DomainError("hartley_forward_mellin: algebraically decaying closed forms need the multiplier beyond "
                      "its supported range");
  }
  const double lx = std::log(x);
  const double scale = 1.0 / std::sqrt(x);
  auto g = [&](double tau) {
    return theta_at(tau) * F.at(-tau) * scale * cplx(std::cos(tau * lx), -std::sin(tau * lx));
  };
  return integrate_on_line(g, F, F.algebraic_order(), std::abs(lx), cfg).value.real();
}

MellinLineFunction hartley_mellin_image(const MellinLineFunction& F) {
  if (F.has_evaluator()) {
    auto fn = [F](double tau) { return theta_at(tau) * F.at(-tau); };
    return MellinLineFunction::from_evaluator(fn, F.truncation_T(), F.algebraic_order(), false,
                                              F.tau_grid().size());
  }
  const auto& tau = F.tau_grid();
  std::vector<cplx> v(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) v[i] = theta_at(tau[i]) * F.values()[tau.size() - 1 - i];
  return MellinLineFunction(tau, std::move(v));
}

double hartley_inverse(const HalfLineFunction& h, double x, const QuadratureConfig& cfg) {
  require_x(x, "hartley_inverse");
  cfg.validate();
  if (h.identically_zero) return 0.0;
  const double oscillating = 0.5 * hartley_forward_direct(h, x, cfg);

  auto g = [&](double t) {
    const double v = h(t);
    return v == 0.0 ? 0.0 : special::inverse_kernel_phi_smooth(x * t) * v;
  };
  const double end = h.effective_end();
  std::vector<double> pts{0.0, 0.1 / x, 1.0 / x, 1.0, 10.0 / x, 10.0};
  for (double b : h.breakpoints) pts.push_back(b);
  const double A = std::isfinite(end) ? end : std::max({10.0 / x, 10.0, h.breakpoints.empty() ? 0.0 : h.breakpoints.back()});
  std::erase_if(pts, [&](double p) { return p < 0.0 || p > A; });
  pts.push_back(A);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto near = quad::integrate_points(g, pts, cfg, quad::Singularity::left);
  if (!near.converged) throw NumericalError("hartley_inverse: no convergence of the smooth kernel part");
  double smooth = near.value;
  if (!std::isfinite(end)) smooth += quad::integrate_semi_infinite(g, A, cfg).value;
  return oscillating + smooth;
}

TransformResult hartley_transform(const HalfLineFunction& f, std::span<const double> xs, HartleyMethod method,
                                  const QuadratureConfig& cfg, Execution ex) {
  if (method == HartleyMethod::mellin) {
    return hartley_transform(mellin_forward(f, cfg, ex), xs, cfg, ex);
  }
  TransformResult r;
  r.x_grid.assign(xs.begin(), xs.end());
  r.method = method;
  if (method == HartleyMethod::direct) {
    r.values = map_grid<double>(xs, [&](double x) { return hartley_forward_direct(f, x, cfg); }, ex);
  } else {
    r.values = map_grid<double>(xs, [&](double x) { return hartley_forward_regularized(f, x, cfg); }, ex);
  }
  r.residual_estimates.assign(xs.size(), 0.0);
  return r;
}

TransformResult hartley_transform(const MellinLineFunction& F, std::span<const double> xs,
                                  const QuadratureConfig& cfg, Execution ex) {
  TransformResult r;
  r.x_grid.assign(xs.begin(), xs.end());
  r.method = HartleyMethod::mellin;
  r.values = map_grid<double>(xs, [&](double x) { return hartley_forward_mellin(F, x, cfg); }, ex);
  r.residual_estimates.assign(xs.size(), 0.0);
  return r;
}

std::vector<double> hartley_inverse_grid(const HalfLineFunction& h, std::span<const double> xs,
                                         const QuadratureConfig& cfg, Execution ex) {
  return map_grid<double>(xs, [&](double x) { return hartley_inverse(h, x, cfg); }, ex);
}

HalfLineFunction hartley_image(const CatalogEntry& e, const QuadratureConfig& cfg, Execution ex) {
  if (e.f.identically_zero) return zero_function();
  if (e.hartley) {
    HalfLineFunction h;
    h.eval = e.hartley;
    h.decay = DecayClass::polynomial;
    h.decay_order = 1.0;
    return h;
  }
  const auto xs = decade_grid(1e-3, 1e3, 64);
  auto vals = map_grid<double>(xs, [&](double x) { return hartley_forward_direct(e.f, x, cfg); }, ex);
  return SampledFunction(xs, std::move(vals), DecayClass::polynomial).as_function();
}

VerificationReport norm_bounds_check(const CatalogEntry& e, const QuadratureConfig& cfg) {
  VerificationReport rep("norm_bounds/" + e.name);
  const auto F = e.mellin_line();
  const double f_sq = e.l2_norm_sq ? *e.l2_norm_sq : parseval_sq_norm(F, cfg).value;
  double hf_sq = 0.0;
  if (!F.identically_zero()) {
    auto g = [&](double tau) {
      const double m = special::theta_modulus(tau);
      return cplx(m * m * std::norm(F.at(-tau)), 0.0);
    };
    hf_sq = integrate_on_line(g, F, 2 * F.algebraic_order(), 0.0, cfg).value.real();
  }
  constexpr double kSlack = 1e-6;
  if (f_sq == 0.0) {
    rep.at_most("hf_norm_sq_zero", hf_sq, 0.0, kSlack);
    return rep;
  }
  const double ratio = std::sqrt(hf_sq / f_sq);
  rep.at_least("ratio_lower", ratio, std::numbers::sqrt2, kSlack);
  rep.at_most("ratio_upper", ratio, 2.0, kSlack);
  return rep;
}

}  // namespace hht
