#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hht/catalog.hpp"
#include "hht/grid_kernels.hpp"
#include "hht/mellin.hpp"
#include "hht/report.hpp"

namespace hht {

enum class ConvolutionRoute { parseval, mellin_line, double_mb };
ConvolutionRoute parse_convolution_route(std::string_view name);
std::string to_string(ConvolutionRoute r);

struct ConvolutionResult {
  std::vector<double> x_grid;
  std::vector<double> values;
  ConvolutionRoute route = ConvolutionRoute::parseval;
  std::vector<double> factorization_residual;
};

// w(t) = sqrt(pi t / 2) (H f)(t) (H g)(t), the image that the inversion
// kernel maps to f * g.
HalfLineFunction convolution_weight(const HalfLineFunction& hf, const HalfLineFunction& hg);

// (f * g)(x) = int_0^inf [sin(xt) S(xt) + cos(xt) C(xt)] sqrt(t) (H f)(t) (H g)(t) dt,
// given the two transforms.
double convolve_parseval(const HalfLineFunction& hf, const HalfLineFunction& hg, double x,
                         const quad::QuadratureConfig& cfg);

// (M(f * g))(1 - s) by the single contour integral over w, with every gamma
// and trigonometric factor combined in log space.
cplx convolve_mellin_line(const MellinLineFunction& F, const MellinLineFunction& G, CriticalPoint s,
                          const quad::QuadratureConfig& cfg);

// M(f * g)(1/2 + i tau) on a symmetric grid, from convolve_mellin_line.
MellinLineFunction convolution_mellin(const MellinLineFunction& F, const MellinLineFunction& G,
                                      const quad::QuadratureConfig& cfg, Execution ex = Execution::parallel,
                                      std::size_t n = 1025);

struct DoubleMBGrid {
  double T = 30.0;
  std::size_t n = 1201;
};

// Kernel of the double Mellin-Barnes integral at s = 1/2 + i tau, w = 1/2 + i theta:
// Gamma(s) Gamma(w) / Gamma(s + w - 1/2) * [sin(pi(s+w)/2) + cos(pi(s-w)/2)] / sin(pi(s+w)/2).
cplx double_mb_kernel(double tau, double theta);

// The double integral as printed, by the tensor trapezoid rule on the grid.
// Rejects grids above 4e6 kernel evaluations.
double convolve_double_mb_raw(const MellinLineFunction& F, const MellinLineFunction& G, double x,
                              const DoubleMBGrid& grid = {}, Execution ex = Execution::parallel);
// The raw value divided by sqrt2, which puts it on the normalization shared by
// the single contour form, the factorization identity and the Parseval form.
double convolve_double_mb(const MellinLineFunction& F, const MellinLineFunction& G, double x,
                          const DoubleMBGrid& grid = {}, Execution ex = Execution::parallel);

// Samples f * g by the Parseval route on a geometric grid, 64 points per
// decade. f * g carries logarithmic factors at both ends (t^{-3/2} ln t at
// infinity for smooth f, g), so the power-law tails are only approximate;
// widen the grid when integrals over all of (0, inf) matter.
SampledFunction sample_convolution(const HalfLineFunction& hf, const HalfLineFunction& hg,
                                   const quad::QuadratureConfig& cfg, Execution ex = Execution::parallel,
                                   double lo = 1e-2, double hi = 1e2);

// Max relative residual of H(f * g)(x) = sqrt(x pi / 2) (H f)(x) (H g)(x) on xs.
VerificationReport factorization_residual(const CatalogEntry& f, const CatalogEntry& g, std::span<const double> xs,
                                          const quad::QuadratureConfig& cfg, Execution ex = Execution::parallel);

// ||f * g|| <= 4 sqrt(2/pi) ||s g*|| ||s f*|| with the weighted norms taken
// as plain integrals over tau.
VerificationReport norm_bound_check(const CatalogEntry& f, const CatalogEntry& g, const quad::QuadratureConfig& cfg,
                                    Execution ex = Execution::parallel);

// Catalog entries must satisfy s f*(s) in L2 on the line.
void require_convolvable(const CatalogEntry& e);

ConvolutionResult convolve(const CatalogEntry& f, const CatalogEntry& g, std::span<const double> xs,
                           ConvolutionRoute route, const quad::QuadratureConfig& cfg,
                           Execution ex = Execution::parallel);

}  // namespace hht
