#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hht/functions.hpp"
#include "hht/grid_kernels.hpp"
#include "hht/quadrature.hpp"
#include "hht/special.hpp"

namespace hht {

// Values f*(1/2 + i tau) on a symmetric tau grid. When built from a closed
// form the evaluator is kept, and integrals along the line use adaptive
// quadrature on it; otherwise they use the trapezoid rule on the grid, which
// is spectrally accurate for the analytic, decaying integrands that occur.
class MellinLineFunction {
 public:
  using Evaluator = std::function<cplx(double tau)>;
  static constexpr std::size_t kDefaultPoints = 2048;

  MellinLineFunction(std::vector<double> tau_grid, std::vector<cplx> values, bool symmetric = false);

  // algebraic_order: |f*| ~ |tau|^{-order} beyond the grid; 0 means faster
  // than any power (the line is truncated at T).
  static MellinLineFunction from_evaluator(Evaluator fn, double T, int algebraic_order, bool symmetric = false,
                                           std::size_t n = kDefaultPoints);
  static MellinLineFunction zero(double T = 40.0, std::size_t n = kDefaultPoints);
  static std::vector<double> symmetric_grid(double T, std::size_t n = kDefaultPoints);

  // Evaluator if present, else grid value or cubic interpolation; 0 off the grid.
  cplx at(double tau) const;

  const std::vector<double>& tau_grid() const { return tau_; }
  const std::vector<cplx>& values() const { return values_; }
  double truncation_T() const { return T_; }
  bool symmetric() const { return symmetric_; }
  bool has_evaluator() const { return static_cast<bool>(eval_); }
  int algebraic_order() const { return order_; }
  bool identically_zero() const { return zero_; }
  // f*(conj s) = conj f*(s) on the grid, i.e. f is real.
  bool hermitian() const;

 private:
  MellinLineFunction() = default;
  void check_grid();
  cplx interpolate(double tau) const;

  std::vector<double> tau_;
  std::vector<cplx> values_;
  double T_ = 0.0;
  bool symmetric_ = false;
  Evaluator eval_;
  int order_ = 0;
  bool zero_ = false;
  bool uniform_ = false;
};

// Default truncation of the tau-line for the Mellin transform of a function
// with the given decay on (0, inf).
double default_truncation(DecayClass decay);

// The line to integrate over when two transforms are combined: a sampled
// one fixes the grid; otherwise the longer truncation wins.
const MellinLineFunction& line_basis(const MellinLineFunction& a, const MellinLineFunction& b);

// (1/2pi) int g(tau) dtau over the line carried by `basis`: adaptive on the
// evaluator with tails of the given order, or trapezoid on the basis grid.
quad::Estimate<cplx> integrate_on_line(const quad::ComplexFn& g, const MellinLineFunction& basis, int order,
                                       double omega, const quad::QuadratureConfig& cfg);

// f*(1/2 + i tau) = int_0^inf f(t) t^{s-1} dt via u = ln t.
cplx mellin_forward_at(const HalfLineFunction& f, double tau, const quad::QuadratureConfig& cfg);
MellinLineFunction mellin_forward(const HalfLineFunction& f, std::span<const double> tau_grid,
                                  const quad::QuadratureConfig& cfg, Execution ex = Execution::parallel);
MellinLineFunction mellin_forward(const HalfLineFunction& f, const quad::QuadratureConfig& cfg,
                                  Execution ex = Execution::parallel);

// f(x) = (1/2 pi i) int_sigma F(s) x^{-s} ds.
quad::Estimate<cplx> mellin_inverse_complex(const MellinLineFunction& F, double x, const quad::QuadratureConfig& cfg);
// Real part; throws NumericalError if F is Hermitian but the imaginary
// residue exceeds 1e-8 |Re| (plus abs_tol).
double mellin_inverse(const MellinLineFunction& F, double x, const quad::QuadratureConfig& cfg);

// (1/2pi) int |F|^2 dtau, i.e. ||f||^2 by Parseval.
quad::Estimate<double> parseval_sq_norm(const MellinLineFunction& F, const quad::QuadratureConfig& cfg);

// (1/2 pi i) int_sigma F1(s) F2(1-s) x^{-s} ds = int_0^inf f1(xt) f2(t) dt.
double generalized_parseval(const MellinLineFunction& F1, const MellinLineFunction& F2, double x,
                            const quad::QuadratureConfig& cfg);

}  // namespace hht
