#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace hht::quad {

using cplx = std::complex<double>;
using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
  // Minimum number of half periods summed before the tail engine may stop.
  int tail_periods_min = 6;
  // Order k of the Levin u-transform applied to half-period partial sums.
  int acceleration_order = 10;
  double contour_truncation_T = 40.0;
  // Hard cap on half periods consumed by the tail engine.
  int max_tail_periods = 4000;

  void validate() const;
  QuadratureConfig tightened(double factor) const;
};

template <class T>
struct Estimate {
  T value{};
  double err_est = 0.0;
  long evaluations = 0;
  bool converged = true;
};

enum class Singularity { none, left, right, both };

// Global adaptive Gauss-Kronrod 7/15 over [a, b]. Integrable endpoint
// singularities (e.g. (t - a)^{-1/2}) are handled by an initial geometric
// grading with ratio 1/4 toward the flagged endpoint(s). At a nonzero
// singular endpoint the grading stops near double resolution, so the
// attainable accuracy is about 1e-7 relative; err_est reports it.
// Throws NumericalError on non-convergence or a NaN integrand.
Estimate<double> integrate_adaptive(const RealFn& f, double a, double b, const QuadratureConfig& cfg,
                                    Singularity sing = Singularity::none);
Estimate<cplx> integrate_adaptive_complex(const ComplexFn& f, double a, double b, const QuadratureConfig& cfg,
                                          Singularity sing = Singularity::none);

// Same engine with a caller-supplied initial partition (sorted, >= 2 points).
// Never throws on non-convergence; check Estimate::converged.
Estimate<double> integrate_points(const RealFn& f, std::span<const double> points, const QuadratureConfig& cfg,
                                  Singularity sing = Singularity::none);
Estimate<cplx> integrate_points_complex(const ComplexFn& f, std::span<const double> points,
                                        const QuadratureConfig& cfg, Singularity sing = Singularity::none);

// int_a^inf f(t) dt for non-oscillating integrands, via t = a + (1 - v)/v.
Estimate<double> integrate_semi_infinite(const RealFn& f, double a, const QuadratureConfig& cfg);
Estimate<cplx> integrate_semi_infinite_complex(const ComplexFn& f, double a, const QuadratureConfig& cfg);

// int_a^b f for f oscillating at angular frequency omega: the interval is cut
// at every half period pi/omega (and at `breaks`) before adaptive refinement.
Estimate<double> integrate_oscillatory_span(const RealFn& f, double a, double b, double omega,
                                            const QuadratureConfig& cfg, std::span<const double> breaks = {});
Estimate<cplx> integrate_oscillatory_span_complex(const ComplexFn& f, double a, double b, double omega,
                                                  const QuadratureConfig& cfg, std::span<const double> breaks = {});

// int_a^inf f(t) dt for f = trig(omega t) x eventually monotone envelope.
// Partial integrals over [a + k pi/omega, a + (k+1) pi/omega] are summed and
// the partial-sum sequence is accelerated by the Levin u-transform.
Estimate<double> integrate_oscillatory_tail(const RealFn& f, double a, double omega, const QuadratureConfig& cfg);

// (1/2pi) int_{-T}^{T} g(tau) dtau with T = cfg.contour_truncation_T. This
// realizes (1/2pi i) int_sigma ... ds. The truncation estimate
// (|g(T)| + |g(-T)|) max(1, T) / 2pi is added to err_est; throws if it
// exceeds the tolerance.
Estimate<cplx> integrate_critical_line(const ComplexFn& g, const QuadratureConfig& cfg);

// (1/2pi) int_{-inf}^{inf} g(tau) dtau where g is known on all of R and
// decays like |tau|^{-algebraic_order} (0: faster than any power, the line
// is truncated at T). Tails beyond T use the semi-infinite engine when
// omega == 0 and the oscillatory tail engine at frequency omega otherwise.
Estimate<cplx> integrate_line(const ComplexFn& g, double T, int algebraic_order, double omega,
                              const QuadratureConfig& cfg);

// Levin u-transform L_k^{(n)} of the partial sums s_n..s_{n+k} with terms
// a_n..a_{n+k}; `first_index` is n (remainder estimates (n + 1) a_n).
// Returns NaN when a remainder estimate vanishes.
double levin_u(std::span<const double> partial_sums, std::span<const double> terms, long first_index);

}  // namespace hht::quad
