#include "hht/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hht/errors.hpp"

namespace hht {

using quad::QuadratureConfig;

MellinLineFunction::MellinLineFunction(std::vector<double> tau_grid, std::vector<cplx> values, bool symmetric)
    : tau_(std::move(tau_grid)), values_(std::move(values)), symmetric_(symmetric) {
  check_grid();
  zero_ = std::all_of(values_.begin(), values_.end(), [](cplx v) { return v == cplx{}; });
}

void MellinLineFunction::check_grid() {
  const std::size_t n = tau_.size();
  if (n < 4) throw DomainError("MellinLineFunction: need at least 4 grid points");
  if (values_.size() != n) throw DomainError("MellinLineFunction: grid and values differ in length");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(tau_[i]) || !std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag())) {
      throw DomainError("MellinLineFunction: non-finite entry");
    }
    if (i > 0 && !(tau_[i] > tau_[i - 1])) throw DomainError("MellinLineFunction: grid must be strictly increasing");
  }
  T_ = std::max(std::abs(tau_.front()), std::abs(tau_.back()));
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(tau_[i] + tau_[n - 1 - i]) > 1e-12 * T_) {
      throw DomainError("MellinLineFunction: grid must be symmetric about 0");
    }
  }
  const double h = (tau_.back() - tau_.front()) / static_cast<double>(n - 1);
  uniform_ = true;
  for (std::size_t i = 1; i < n && uniform_; ++i) {
    if (std::abs(tau_[i] - tau_[i - 1] - h) > 1e-9 * h) uniform_ = false;
  }
  if (symmetric_) {
    double vmax = 0.0, asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      vmax = std::max(vmax, std::abs(values_[i]));
      asym = std::max(asym, std::abs(values_[i] - values_[n - 1 - i]));
    }
    if (asym > 1e-9 * vmax) {
      throw DomainError("MellinLineFunction: values are not symmetric under tau -> -tau");
    }
  }
}

std::vector<double> MellinLineFunction::symmetric_grid(double T, std::size_t n) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("symmetric_grid: T must be positive");
  if (n < 4) throw DomainError("symmetric_grid: need at least 4 points");
  std::vector<double> g(n);
  const double step = 2.0 * T / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    g[i] = -T + step * static_cast<double>(i);
    g[n - 1 - i] = -g[i];
  }
  if (n % 2 == 1) g[n / 2] = 0.0;
  return g;
}

MellinLineFunction MellinLineFunction::from_evaluator(Evaluator fn, double T, int algebraic_order, bool symmetric,
                                                      std::size_t n) {
  if (algebraic_order < 0) throw DomainError("MellinLineFunction: algebraic order must be >= 0");
  MellinLineFunction F;
  F.tau_ = symmetric_grid(T, n);
  F.values_.resize(n);
  for (std::size_t i = 0; i < n; ++i) F.values_[i] = fn(F.tau_[i]);
  F.symmetric_ = symmetric;
  F.check_grid();
  F.eval_ = std::move(fn);
  F.order_ = algebraic_order;
  F.zero_ = std::all_of(F.values_.begin(), F.values_.end(), [](cplx v) { return v == cplx{}; });
  return F;
}

MellinLineFunction MellinLineFunction::zero(double T, std::size_t n) {
  return from_evaluator([](double) { return cplx{}; }, T, 0, true, n);
}

cplx MellinLineFunction::at(double tau) const {
  if (eval_) return eval_(tau);
  return interpolate(tau);
}

cplx MellinLineFunction::interpolate(double tau) const {
  const std::size_t n = tau_.size();
  if (tau < tau_.front() || tau > tau_.back()) return {};
  std::size_t j;
  if (uniform_) {
    const double h = (tau_.back() - tau_.front()) / static_cast<double>(n - 1);
    const double pos = (tau - tau_.front()) / h;
    const auto k = static_cast<std::size_t>(std::llround(pos));
    if (k < n && tau_[k] == tau) return values_[k];
    j = std::min(static_cast<std::size_t>(pos), n - 2);
  } else {
    auto it = std::lower_bound(tau_.begin(), tau_.end(), tau);
    if (it != tau_.end() && *it == tau) return values_[static_cast<std::size_t>(it - tau_.begin())];
    j = static_cast<std::size_t>(it - tau_.begin()) - 1;
  }
  // Four-point Lagrange interpolation on tau_[j-1..j+2], shifted at the ends.
  std::size_t lo = j == 0 ? 0 : j - 1;
  if (lo + 3 >= n) lo = n - 4;
  cplx sum{};
  for (std::size_t a = lo; a < lo + 4; ++a) {
    double w = 1.0;
    for (std::size_t b = lo; b < lo + 4; ++b) {
      if (b != a) w *= (tau - tau_[b]) / (tau_[a] - tau_[b]);
    }
    sum += w * values_[a];
  }
  return sum;
}

bool MellinLineFunction::hermitian() const {
  const std::size_t n = tau_.size();
  double vmax = 0.0, dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    vmax = std::max(vmax, std::abs(values_[i]));
    dev = std::max(dev, std::abs(values_[n - 1 - i] - std::conj(values_[i])));
  }
  return dev <= 1e-9 * vmax;
}

double default_truncation(DecayClass decay) {
  switch (decay) {
    case DecayClass::exponential: return 40.0;
    // Gamma(s/2)-type transforms decay at half the rate of Gamma(s).
    case DecayClass::gaussian: return 80.0;
    case DecayClass::compact:
    case DecayClass::polynomial: return 200.0;
  }
  return 200.0;
}

const MellinLineFunction& line_basis(const MellinLineFunction& a, const MellinLineFunction& b) {
  if (!a.has_evaluator()) return a;
  if (!b.has_evaluator()) return b;
  return a.truncation_T() >= b.truncation_T() ? a : b;
}

quad::Estimate<cplx> integrate_on_line(const quad::ComplexFn& g, const MellinLineFunction& basis, int order,
                                       double omega, const QuadratureConfig& cfg) {
  if (basis.has_evaluator()) return quad::integrate_line(g, basis.truncation_T(), order, omega, cfg);

  const auto& tau = basis.tau_grid();
  const std::size_t n = tau.size();
  std::vector<cplx> gv(n);
  for (std::size_t i = 0; i < n; ++i) {
    gv[i] = g(tau[i]);
    if (!std::isfinite(gv[i].real()) || !std::isfinite(gv[i].imag())) {
      throw NumericalError("line integral: integrand returned a non-finite value");
    }
  }
  auto trapezoid = [&](std::size_t stride) {
    cplx s{};
    std::size_t last = 0;
    for (std::size_t i = 0; i + stride < n; i += stride) {
      s += 0.5 * (tau[i + stride] - tau[i]) * (gv[i] + gv[i + stride]);
      last = i + stride;
    }
    if (last != n - 1) s += 0.5 * (tau[n - 1] - tau[last]) * (gv[last] + gv[n - 1]);
    return s;
  };
  const double two_pi = 2.0 * std::numbers::pi;
  const cplx fine = trapezoid(1);
  const cplx coarse = trapezoid(2);
  const double T = basis.truncation_T();
  const double trunc = (std::abs(gv.front()) + std::abs(gv.back())) * std::max(1.0, T);
  return {fine / two_pi, (std::abs(fine - coarse) + trunc) / two_pi, static_cast<long>(n), true};
}

cplx mellin_forward_at(const HalfLineFunction& f, double tau, const QuadratureConfig& cfg) {
  if (f.identically_zero) return {};
  if (!std::isfinite(tau)) throw DomainError("mellin_forward: tau must be finite");
  constexpr double kUlo = -40.0;
  constexpr double kThi = 1e12;
  const bool infinite = !std::isfinite(f.effective_end());
  if (infinite && f.decay == DecayClass::polynomial && f.decay_order != 0.0 && f.decay_order <= 0.5) {
    throw DomainError("mellin_forward: polynomial decay t^-" + std::to_string(f.decay_order) +
                      " is too slow for the critical line");
  }
  const double t_hi = infinite ? kThi : f.effective_end();
  if (!(t_hi > 0.0)) return {};
  const double u_hi = std::log(t_hi);
  if (u_hi <= kUlo) return {};

  std::vector<double> breaks;
  for (double u = kUlo + 2.0; u < u_hi; u += 2.0) breaks.push_back(u);
  for (double b : f.breakpoints) {
    if (b > 0.0) breaks.push_back(std::log(b));
  }
  std::sort(breaks.begin(), breaks.end());

  auto integrand = [&](double u) -> cplx {
    const double t = std::exp(u);
    const double v = f(t);
    if (v == 0.0) return {};
    return v * std::exp(u / 2.0) * cplx(std::cos(tau * u), std::sin(tau * u));
  };
  cplx value = quad::integrate_oscillatory_span_complex(integrand, kUlo, u_hi, std::abs(tau), cfg, breaks).value;

  const cplx s(0.5, tau);
  // Power-law model f ~ c t^q below e^{-40}.
  const double t1 = std::exp(kUlo);
  const double f1 = f(t1);
  if (f1 != 0.0) {
    const double f2 = f(t1 * std::numbers::e);
    const double q = (f2 != 0.0 && (f2 > 0) == (f1 > 0)) ? std::log(f2 / f1) : 0.0;
    if (!(q > -0.5)) throw DomainError("mellin_forward: f grows too fast at 0 for the critical line");
    value += f1 * std::exp(s * kUlo) / (q + s);
  }
  if (infinite && f.decay == DecayClass::polynomial) {
    const double fT = f(t_hi);
    if (fT != 0.0) {
      double p = f.decay_order;
      if (p == 0.0) {
        const double fm = f(t_hi / std::numbers::e);
        p = (fm != 0.0 && (fm > 0) == (fT > 0)) ? -std::log(fT / fm) : 0.0;
      }
      if (!(p > 0.5)) throw DomainError("mellin_forward: tail decays too slowly for the critical line");
      value += fT * std::exp(s * u_hi) / (p - s);
    }
  }
  return value;
}

MellinLineFunction mellin_forward(const HalfLineFunction& f, std::span<const double> tau_grid,
                                  const QuadratureConfig& cfg, Execution ex) {
  cfg.validate();
  std::vector<double> grid(tau_grid.begin(), tau_grid.end());
  const std::size_t n = grid.size();
  if (n < 4) throw DomainError("mellin_forward: need at least 4 grid points");
  // f is real, so f*(1/2 - i tau) = conj f*(1/2 + i tau): only the upper half is computed.
  bool mirrored = true;
  for (std::size_t i = 0; i < n && mirrored; ++i) mirrored = grid[i] == -grid[n - 1 - i];
  std::vector<cplx> values(n);
  if (mirrored) {
    const std::size_t half = n / 2;
    std::vector<double> upper(grid.begin() + static_cast<std::ptrdiff_t>(half), grid.end());
    auto up = map_grid<cplx>(upper, [&](double t) { return mellin_forward_at(f, t, cfg); }, ex);
    for (std::size_t k = 0; k < up.size(); ++k) {
      values[half + k] = up[k];
      values[n - 1 - half - k] = std::conj(up[k]);
    }
    if (n % 2 == 1) values[half] = cplx(up[0].real(), 0.0);
  } else {
    values = map_grid<cplx>(grid, [&](double t) { return mellin_forward_at(f, t, cfg); }, ex);
  }
  return MellinLineFunction(std::move(grid), std::move(values));
}

MellinLineFunction mellin_forward(const HalfLineFunction& f, const QuadratureConfig& cfg, Execution ex) {
  const auto grid = MellinLineFunction::symmetric_grid(default_truncation(f.decay));
  return mellin_forward(f, grid, cfg, ex);
}

quad::Estimate<cplx> mellin_inverse_complex(const MellinLineFunction& F, double x, const QuadratureConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("mellin_inverse: x must be > 0");
  if (F.identically_zero()) return {};
  const double lx = std::log(x);
  const double scale = 1.0 / std::sqrt(x);
  auto g = [&](double tau) { return F.at(tau) * scale * cplx(std::cos(tau * lx), -std::sin(tau * lx)); };
  return integrate_on_line(g, F, F.algebraic_order(), std::abs(lx), cfg);
}

double mellin_inverse(const MellinLineFunction& F, double x, const QuadratureConfig& cfg) {
  const auto r = mellin_inverse_complex(F, x, cfg);
  if (F.hermitian() && std::abs(r.value.imag()) > 1e-8 * std::abs(r.value.real()) + cfg.abs_tol) {
    throw NumericalError("mellin_inverse: imaginary residue " + std::to_string(r.value.imag()) +
                         " for a Hermitian transform");
  }
  return r.value.real();
}

quad::Estimate<double> parseval_sq_norm(const MellinLineFunction& F, const QuadratureConfig& cfg) {
  if (F.identically_zero()) return {};
  auto g = [&](double tau) { return cplx(std::norm(F.at(tau)), 0.0); };
  const auto r = integrate_on_line(g, F, 2 * F.algebraic_order(), 0.0, cfg);
  return {r.value.real(), r.err_est, r.evaluations, r.converged};
}

double generalized_parseval(const MellinLineFunction& F1, const MellinLineFunction& F2, double x,
                            const QuadratureConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("generalized_parseval: x must be > 0");
  if (F1.identically_zero() || F2.identically_zero()) return 0.0;
  const double lx = std::log(x);
  const double scale = 1.0 / std::sqrt(x);
  auto g = [&](double tau) {
    return F1.at(tau) * F2.at(-tau) * scale * cplx(std::cos(tau * lx), -std::sin(tau * lx));
  };
  const auto& basis = line_basis(F1, F2);
  return integrate_on_line(g, basis, F1.algebraic_order() + F2.algebraic_order(), std::abs(lx), cfg).value.real();
}

}  // namespace hht
