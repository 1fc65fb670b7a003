#include "hht/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hht/csv.hpp"
#include "hht/errors.hpp"
#include "hht/hartley.hpp"

namespace hht {

using quad::QuadratureConfig;

namespace {

using std::numbers::pi;

cplx log_gamma_half(double tau) { return special::log_gamma(cplx(0.5, tau)); }

}  // namespace

ConvolutionRoute parse_convolution_route(std::string_view name) {
  if (name == "parseval") return ConvolutionRoute::parseval;
  if (name == "mellin_line" || name == "mellin-line") return ConvolutionRoute::mellin_line;
  if (name == "double_mb" || name == "double-mb") return ConvolutionRoute::double_mb;
  throw DomainError("unknown convolution route '" + std::string(name) + "'");
}

std::string to_string(ConvolutionRoute r) {
  switch (r) {
    case ConvolutionRoute::parseval: return "parseval";
    case ConvolutionRoute::mellin_line: return "mellin_line";
    case ConvolutionRoute::double_mb: return "double_mb";
  }
  return "unknown";
}

HalfLineFunction convolution_weight(const HalfLineFunction& hf, const HalfLineFunction& hg) {
  if (hf.identically_zero || hg.identically_zero) return zero_function();
  HalfLineFunction w;
  w.eval = [hf, hg](double t) { return std::sqrt(pi * t / 2.0) * hf(t) * hg(t); };
  w.decay = DecayClass::polynomial;
  const double order_f = hf.decay == DecayClass::polynomial ? hf.decay_order : 0.0;
  const double order_g = hg.decay == DecayClass::polynomial ? hg.decay_order : 0.0;
  w.decay_order = order_f + order_g - 0.5;
  w.support_end = std::min(hf.support_end, hg.support_end);
  w.negligible_beyond = std::min(hf.negligible_beyond, hg.negligible_beyond);
  w.breakpoints = hf.breakpoints;
  w.breakpoints.insert(w.breakpoints.end(), hg.breakpoints.begin(), hg.breakpoints.end());
  std::sort(w.breakpoints.begin(), w.breakpoints.end());
  w.breakpoints.erase(std::unique(w.breakpoints.begin(), w.breakpoints.end()), w.breakpoints.end());
  w.rough_at_zero = true;
  return w;
}

double convolve_parseval(const HalfLineFunction& hf, const HalfLineFunction& hg, double x,
                         const QuadratureConfig& cfg) {
  return hartley_inverse(convolution_weight(hf, hg), x, cfg);
}

cplx convolve_mellin_line(const MellinLineFunction& F, const MellinLineFunction& G, CriticalPoint s,
                          const QuadratureConfig& cfg) {
  if (F.identically_zero() || G.identically_zero()) return {};
  if (F.algebraic_order() == 1 || G.algebraic_order() == 1) {
    throw DomainError("convolve_mellin_line: s f*(s) must be square integrable on the line");
  }
  const double tau = s.tau();
  if (std::abs(tau) > special::kMaxImag) throw DomainError("convolve_mellin_line: |tau| beyond supported range");
  // w = 1/2 + i theta:
  //   Gamma(s - w + 1/2) cos(pi(s - w)/2) -> Gamma(1/2 + i(tau - theta)) cosh(pi(tau - theta)/2)
  //   Gamma(w) sin(pi(w + 1/2)/2)          -> Gamma(1/2 + i theta) cosh(pi theta/2)
  //   f*(1/2 - s + w) = F(theta - tau),  g*(1 - w) = G(-theta)
  const cplx log_pref = std::log(std::numbers::sqrt2) - special::log_gamma(s.s()) -
                        special::log_cosh(pi * tau / 2.0);
  auto g = [&](double theta) -> cplx {
    const double d = tau - theta;
    if (std::abs(d) > special::kMaxImag || std::abs(theta) > special::kMaxImag) return {};
    const cplx fv = F.at(theta - tau);
    const cplx gv = G.at(-theta);
    if (fv == cplx{} || gv == cplx{}) return {};
    const cplx l = log_pref + log_gamma_half(d) + special::log_cosh(pi * d / 2.0) + log_gamma_half(theta) +
                   special::log_cosh(pi * theta / 2.0);
    return std::exp(l) * fv * gv;
  };
  const double lo = std::max(-G.truncation_T(), tau - F.truncation_T());
  const double hi = std::min(G.truncation_T(), tau + F.truncation_T());
  if (!(hi > lo)) return {};
  const int pieces = std::max(2, static_cast<int>(std::ceil(hi - lo)));
  std::vector<double> pts;
  for (int i = 0; i <= pieces; ++i) pts.push_back(lo + (hi - lo) * i / pieces);
  const auto r = quad::integrate_points_complex(g, pts, cfg);
  if (!r.converged) throw NumericalError("convolve_mellin_line: no convergence");
  return r.value / (2.0 * pi);
}

MellinLineFunction convolution_mellin(const MellinLineFunction& F, const MellinLineFunction& G,
                                      const QuadratureConfig& cfg, Execution ex, std::size_t n) {
  const double T = std::min(std::max(F.truncation_T(), G.truncation_T()), special::kMaxImag);
  auto grid = MellinLineFunction::symmetric_grid(T, n);
  // M(f*g)(1/2 + i tau) is the single contour form at s = 1/2 - i tau; it is
  // Hermitian, so only tau >= 0 is computed.
  const std::size_t half = n / 2;
  std::vector<double> upper(grid.begin() + static_cast<std::ptrdiff_t>(half), grid.end());
  auto up = map_grid<cplx>(upper, [&](double t) { return convolve_mellin_line(F, G, CriticalPoint(-t), cfg); }, ex);
  std::vector<cplx> values(n);
  for (std::size_t k = 0; k < up.size(); ++k) {
    values[half + k] = up[k];
    values[n - 1 - half - k] = std::conj(up[k]);
  }
  if (n % 2 == 1) values[half] = cplx(up[0].real(), 0.0);
  return MellinLineFunction(std::move(grid), std::move(values));
}

cplx double_mb_kernel(double tau, double theta) {
  const cplx gammas = std::exp(log_gamma_half(tau) + log_gamma_half(theta) - log_gamma_half(tau + theta));
  const double ratio = std::exp(special::log_cosh(pi * (tau - theta) / 2.0) - special::log_cosh(pi * (tau + theta) / 2.0));
  return gammas * (1.0 + ratio);
}

double convolve_double_mb_raw(const MellinLineFunction& F, const MellinLineFunction& G, double x,
                              const DoubleMBGrid& grid, Execution ex) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("convolve_double_mb: x must be > 0");
  if (grid.n < 3) throw DomainError("convolve_double_mb: grid needs at least 3 points");
  if (static_cast<double>(grid.n) * static_cast<double>(grid.n) > 4e6) {
    throw DomainError("convolve_double_mb: grid exceeds 4e6 kernel evaluations");
  }
  if (F.identically_zero() || G.identically_zero()) return 0.0;
  const std::size_t n = grid.n;
  const auto tau = MellinLineFunction::symmetric_grid(grid.T, n);
  const double step = 2.0 * grid.T / static_cast<double>(n - 1);
  const double lx = std::log(x);

  // Separable factors per axis, and factors depending on i + j or i - j.
  std::vector<cplx> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? step / 2.0 : step;
    const cplx phase(std::cos(tau[i] * lx), std::sin(tau[i] * lx));
    const cplx lg = log_gamma_half(tau[i]);
    a[i] = w * std::exp(lg) * F.at(-tau[i]) * phase;
    b[i] = w * std::exp(lg) * G.at(-tau[i]) * phase;
  }
  std::vector<cplx> inv_gamma_sum(2 * n - 1);
  std::vector<double> log_cosh_sum(2 * n - 1), log_cosh_diff(2 * n - 1);
  for (std::size_t k = 0; k < 2 * n - 1; ++k) {
    const double sum = -2.0 * grid.T + step * static_cast<double>(k);
    const double diff = step * (static_cast<double>(k) - static_cast<double>(n - 1));
    inv_gamma_sum[k] = std::exp(-log_gamma_half(sum));
    log_cosh_sum[k] = special::log_cosh(pi * sum / 2.0);
    log_cosh_diff[k] = special::log_cosh(pi * diff / 2.0);
  }
  std::vector<double> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<double>(i);
  const auto rows = map_grid<double>(
      idx,
      [&](double di) {
        const auto i = static_cast<std::size_t>(di);
        if (a[i] == cplx{}) return 0.0;
        cplx row{};
        for (std::size_t j = 0; j < n; ++j) {
          if (b[j] == cplx{}) continue;
          const std::size_t k = i + j;
          const std::size_t m = i + n - 1 - j;
          const double ratio = std::exp(log_cosh_diff[m] - log_cosh_sum[k]);
          row += b[j] * inv_gamma_sum[k] * (1.0 + ratio);
        }
        // Only the real part survives for real f and g.
        return (a[i] * row).real();
      },
      ex);
  double total = 0.0;
  for (double r : rows) total += r;
  return total / (4.0 * pi * pi * std::sqrt(x));
}

double convolve_double_mb(const MellinLineFunction& F, const MellinLineFunction& G, double x,
                          const DoubleMBGrid& grid, Execution ex) {
  return convolve_double_mb_raw(F, G, x, grid, ex) / std::numbers::sqrt2;
}

SampledFunction sample_convolution(const HalfLineFunction& hf, const HalfLineFunction& hg,
                                   const QuadratureConfig& cfg, Execution ex, double lo, double hi) {
  const auto grid = decade_grid(lo, hi, 64);
  const auto w = convolution_weight(hf, hg);
  auto values = map_grid<double>(grid, [&](double t) { return hartley_inverse(w, t, cfg); }, ex);
  return SampledFunction(grid, std::move(values), DecayClass::polynomial);
}

void require_convolvable(const CatalogEntry& e) {
  if (e.line_order == 1) {
    throw DomainError("catalog function '" + e.name + "' violates s f*(s) in L2 and cannot be convolved");
  }
}

VerificationReport factorization_residual(const CatalogEntry& f, const CatalogEntry& g, std::span<const double> xs,
                                          const QuadratureConfig& cfg, Execution ex) {
  require_convolvable(f);
  require_convolvable(g);
  VerificationReport rep("factorization/" + f.name + "*" + g.name);
  constexpr double kBound = 1e-3;
  const auto hf = hartley_image(f, cfg, ex);
  const auto hg = hartley_image(g, cfg, ex);
  double worst = 0.0;
  if (hf.identically_zero || hg.identically_zero) {
    for (double x : xs) {
      rep.at_most("residual_x=" + csv::format_double(x), 0.0, kBound);
    }
    rep.at_most("max_residual", 0.0, kBound);
    return rep;
  }
  const auto P = sample_convolution(hf, hg, cfg, ex).as_function();
  const auto lhs = map_grid<double>(xs, [&](double x) { return hartley_forward_direct(P, x, cfg); }, ex);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const double rhs = std::sqrt(x * pi / 2.0) * hf(x) * hg(x);
    const double res = std::abs(lhs[i] - rhs) / std::max(std::abs(rhs), 1e-300);
    worst = std::max(worst, res);
    rep.at_most("residual_x=" + csv::format_double(x), res, kBound);
  }
  rep.at_most("max_residual", worst, kBound);
  return rep;
}

VerificationReport norm_bound_check(const CatalogEntry& f, const CatalogEntry& g, const QuadratureConfig& cfg,
                                    Execution ex) {
  require_convolvable(f);
  require_convolvable(g);
  VerificationReport rep("norm_bound/" + f.name + "*" + g.name);
  const auto F = f.mellin_line();
  const auto G = g.mellin_line();
  auto weighted = [&](const MellinLineFunction& L) {
    if (L.identically_zero()) return 0.0;
    auto w = [&](double t) { return cplx(std::norm(cplx(0.5, t) * L.at(t)), 0.0); };
    return 2.0 * pi * integrate_on_line(w, L, std::max(0, 2 * L.algebraic_order() - 2), 0.0, cfg).value.real();
  };
  double lhs = 0.0;
  if (!F.identically_zero() && !G.identically_zero()) {
    lhs = std::sqrt(parseval_sq_norm(convolution_mellin(F, G, cfg, ex), cfg).value);
  }
  const double rhs = 4.0 * std::sqrt(2.0 / pi) * std::sqrt(weighted(F)) * std::sqrt(weighted(G));
  rep.at_most("norm_conv_vs_bound", lhs, rhs, 1e-6);
  return rep;
}

ConvolutionResult convolve(const CatalogEntry& f, const CatalogEntry& g, std::span<const double> xs,
                           ConvolutionRoute route, const QuadratureConfig& cfg, Execution ex) {
  require_convolvable(f);
  require_convolvable(g);
  ConvolutionResult r;
  r.x_grid.assign(xs.begin(), xs.end());
  r.route = route;
  switch (route) {
    case ConvolutionRoute::parseval: {
      const auto hf = hartley_image(f, cfg, ex);
      const auto hg = hartley_image(g, cfg, ex);
      r.values = map_grid<double>(xs, [&](double x) { return convolve_parseval(hf, hg, x, cfg); }, ex);
      break;
    }
    case ConvolutionRoute::mellin_line: {
      const auto M = convolution_mellin(f.mellin_line(), g.mellin_line(), cfg, ex);
      r.values = map_grid<double>(xs, [&](double x) { return mellin_inverse(M, x, cfg); }, ex);
      break;
    }
    case ConvolutionRoute::double_mb: {
      const auto F = f.mellin_line();
      const auto G = g.mellin_line();
      r.values.reserve(xs.size());
      for (double x : xs) r.values.push_back(convolve_double_mb(F, G, x, {}, ex));
      break;
    }
  }
  r.factorization_residual.assign(xs.size(), 0.0);
  return r;
}

}  // namespace hht
