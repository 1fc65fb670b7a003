#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hht/catalog.hpp"
#include "hht/functions.hpp"
#include "hht/mellin.hpp"
#include "hht/report.hpp"

namespace hht {

enum class HartleyMethod { direct, regularized, mellin };
HartleyMethod parse_hartley_method(std::string_view name);
std::string to_string(HartleyMethod m);

struct TransformResult {
  std::vector<double> x_grid;
  std::vector<double> values;
  HartleyMethod method = HartleyMethod::direct;
  // Per-point discrepancy to a second route when one was computed, else 0.
  std::vector<double> residual_estimates;
};

// (H f)(x) = sqrt(2/pi) int_0^inf [cos xt + sin xt] f(t) dt.
double hartley_forward_direct(const HalfLineFunction& f, double x, const quad::QuadratureConfig& cfg);

// d/dx of G(x) = sqrt(2/pi) int_0^inf [1 + sin xt - cos xt] f(t)/t dt by the
// five-point central difference with h = 1e-3 max(1, x). The four shifted
// kernels are combined under one integral, so quadrature noise does not get
// divided by h.
double hartley_forward_regularized(const HalfLineFunction& f, double x, const quad::QuadratureConfig& cfg);
// G(x) itself.
double hartley_primitive(const HalfLineFunction& f, double x, const quad::QuadratureConfig& cfg);

// (1/2pi) int theta(s) f*(1-s) x^{-s} dtau. Rejects F decaying only like 1/|tau|.
double hartley_forward_mellin(const MellinLineFunction& F, double x, const quad::QuadratureConfig& cfg);

// Mellin transform of H f on the line: theta(s) F(1-s).
MellinLineFunction hartley_mellin_image(const MellinLineFunction& F);

// f(x) = int_0^inf Phi(xt) h(t) dt, evaluated as
// (1/2)(H h)(x) + int_0^inf Phi_smooth(xt) h(t) dt.
double hartley_inverse(const HalfLineFunction& h, double x, const quad::QuadratureConfig& cfg);

TransformResult hartley_transform(const HalfLineFunction& f, std::span<const double> xs, HartleyMethod method,
                                  const quad::QuadratureConfig& cfg, Execution ex = Execution::parallel);
TransformResult hartley_transform(const MellinLineFunction& F, std::span<const double> xs,
                                  const quad::QuadratureConfig& cfg, Execution ex = Execution::parallel);
std::vector<double> hartley_inverse_grid(const HalfLineFunction& h, std::span<const double> xs,
                                         const quad::QuadratureConfig& cfg, Execution ex = Execution::parallel);

// H f of a catalog entry as a function on (0, inf): the closed form when the
// catalog has one, else a spline through the direct route on [1e-3, 1e3].
HalfLineFunction hartley_image(const CatalogEntry& e, const quad::QuadratureConfig& cfg,
                               Execution ex = Execution::parallel);

// sqrt2 ||f|| <= ||H f|| <= 2 ||f||, both norms by Parseval on the line.
VerificationReport norm_bounds_check(const CatalogEntry& e, const quad::QuadratureConfig& cfg);

}  // namespace hht
