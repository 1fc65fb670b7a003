#pragma once

#include <span>
#include <vector>

#include "hht/catalog.hpp"
#include "hht/functions.hpp"
#include "hht/mellin.hpp"
#include "hht/report.hpp"

namespace hht {

// lambda in H f = lambda f. Construction enforces |lambda| < sqrt2, the
// regime where the equation has only the trivial solution for real lambda.
class SpectralParameter {
 public:
  explicit SpectralParameter(cplx lambda);
  explicit SpectralParameter(double lambda) : SpectralParameter(cplx(lambda, 0.0)) {}

  cplx value() const { return lambda_; }
  bool is_real() const { return lambda_.imag() == 0.0; }

 private:
  cplx lambda_;
};

// m(s) = (lambda^2 - 2) - 2/sin(pi s); sin(pi s) = cosh(pi tau) on the line.
cplx multiplier_m(const SpectralParameter& lambda, CriticalPoint p);

// Real lambda: min/max of m over the grid, passing iff max m < 0.
VerificationReport corollary1_check(double lambda, std::span<const double> tau_grid);

// Complex lambda: min |m| over the grid. Records whether m vanishes there,
// with no claim about the solution set.
VerificationReport multiplier_scan(const SpectralParameter& lambda, std::span<const double> tau_grid);

// sqrt(pi/2) (1/Gamma(1-s)) [sec(pi s/2) + csc(pi s/2)], which equals theta(s).
cplx homogeneous_bracket(CriticalPoint p);

// (2/pi) int_0^inf psi(t) / (x + t) dt. Throws DomainError when psi does not
// decay (polynomial order <= 0), NumericalError when quadrature fails.
double stieltjes_apply(const HalfLineFunction& psi, double x, const quad::QuadratureConfig& cfg);

// The Stieltjes image of psi as a function on (0, inf), evaluated lazily.
HalfLineFunction stieltjes_image(const HalfLineFunction& psi, const quad::QuadratureConfig& cfg);

struct SolutionCandidate {
  std::vector<double> x_grid;
  std::vector<double> values;        // Re f on x_grid
  double imag_residue = 0.0;         // max |Im f| on x_grid
  MellinLineFunction f_star;         // (lambda + theta(s)) phi(s)
  double f_star_norm = 0.0;          // ||f*|| = ||f|| by Parseval
  double phi_norm = 0.0;

  SampledFunction sampled() const;
};

// f*(s) = [lambda + theta(s)] phi(s) and f = inverse Mellin of f* on x_grid.
// phi must be even in tau: max |phi(tau) - phi(-tau)| <= 1e-9 max |phi|.
SolutionCandidate solution_candidate(const MellinLineFunction& phi, const SpectralParameter& lambda,
                                     std::span<const double> x_grid, const quad::QuadratureConfig& cfg,
                                     Execution ex = Execution::parallel);

// (2 + |lambda|)^{-1} ||f*|| <= ||phi|| <= (sqrt2 - |lambda|)^{-1} ||f*||.
VerificationReport sandwich_check(const SolutionCandidate& c, const SpectralParameter& lambda, double slack = 1e-8);

struct EigenResidual {
  // max_x |(H f)(x) - lambda f(x)| / (1 + max_x |f(x)|) over the grid.
  double sup = 0.0;
  // ||H f - lambda f|| / ||f||, from the Mellin side.
  double l2 = 0.0;
};

EigenResidual eigen_residual(const CatalogEntry& f, double lambda, std::span<const double> x_grid,
                             const quad::QuadratureConfig& cfg, Execution ex = Execution::parallel);
EigenResidual eigen_residual(const SolutionCandidate& c, double lambda, const quad::QuadratureConfig& cfg,
                             Execution ex = Execution::parallel);

// (H (H f))(x) - 2 f(x) - (2/pi) int f(t)/(x+t) dt.
double operator_identity_residual(const CatalogEntry& f, double x, const quad::QuadratureConfig& cfg);

}  // namespace hht
