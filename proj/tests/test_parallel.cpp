#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hht/catalog.hpp"
#include "hht/convolution.hpp"
#include "hht/grid_kernels.hpp"
#include "hht/hartley.hpp"
#include "hht/homogeneous.hpp"
#include "hht/mellin.hpp"

using namespace hht;

namespace {
const quad::QuadratureConfig cfg;
}

TEST_CASE("map_grid serial and parallel are bit-identical") {
  const auto xs = geometric_grid(1e-3, 1e3, 257);
  auto fn = [](double x) { return std::sin(x) * std::exp(-x / 7) + std::log1p(x); };
  CHECK(map_grid<double>(xs, fn, Execution::serial) == map_grid<double>(xs, fn, Execution::parallel));
}

TEST_CASE("map_grid propagates exceptions") {
  const auto xs = linear_grid(0.0, 1.0, 64);
  auto fn = [](double x) -> double {
    if (x > 0.5) throw std::runtime_error("bad point");
    return x;
  };
  CHECK_THROWS_AS(map_grid<double>(xs, fn, Execution::parallel), std::runtime_error);
  CHECK_THROWS_AS(map_grid<double>(xs, fn, Execution::serial), std::runtime_error);
  CHECK(map_grid<double>(std::vector<double>{}, fn).empty());
}

TEST_CASE("transforms agree across execution modes") {
  const auto xs = geometric_grid(0.1, 10.0, 17);
  for (const char* name : {"exp", "gauss", "box"}) {
    const auto& e = catalog_entry(name);
    for (auto m : {HartleyMethod::direct, HartleyMethod::regularized}) {
      CHECK(hartley_transform(e.f, xs, m, cfg, Execution::serial).values ==
            hartley_transform(e.f, xs, m, cfg, Execution::parallel).values);
    }
  }
  const auto F = catalog_entry("texp").mellin_line();
  CHECK(hartley_transform(F, xs, cfg, Execution::serial).values ==
        hartley_transform(F, xs, cfg, Execution::parallel).values);
  const auto& lz = catalog_entry("lorentz").f;
  CHECK(hartley_inverse_grid(lz, xs, cfg, Execution::serial) == hartley_inverse_grid(lz, xs, cfg, Execution::parallel));
}

TEST_CASE("convolution and candidates agree across execution modes") {
  const auto& e = catalog_entry("exp");
  const auto& t = catalog_entry("texp");
  const std::vector<double> xs{0.5, 1.0, 2.0};
  for (auto r : {ConvolutionRoute::parseval, ConvolutionRoute::mellin_line}) {
    CHECK(convolve(e, t, xs, r, cfg, Execution::serial).values == convolve(e, t, xs, r, cfg, Execution::parallel).values);
  }
  const auto phi = MellinLineFunction::from_evaluator([](double x) { return cplx(1.0 / std::cosh(x)); }, 40.0, 0, true);
  const auto a = solution_candidate(phi, SpectralParameter(0.5), xs, cfg, Execution::serial);
  const auto b = solution_candidate(phi, SpectralParameter(0.5), xs, cfg, Execution::parallel);
  CHECK(a.values == b.values);
  CHECK(a.f_star_norm == b.f_star_norm);
}
