#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "doctest.h"
#include "hht/catalog.hpp"
#include "hht/errors.hpp"
#include "hht/mellin.hpp"

using namespace hht;
using std::numbers::pi;

namespace {

const quad::QuadratureConfig cfg;

// f*(1/2 + i tau) of 1/(1+t^2), integrated over u = ln t on the real line.
cplx lorentz_oracle(double tau) {
  boost::math::quadrature::sinh_sinh<double> ss;
  auto re = [tau](double u) { return std::cos(tau * u) / (std::exp(-u / 2) + std::exp(1.5 * u)); };
  auto im = [tau](double u) { return std::sin(tau * u) / (std::exp(-u / 2) + std::exp(1.5 * u)); };
  return {ss.integrate(re, 1e-13), ss.integrate(im, 1e-13)};
}

}  // namespace

TEST_CASE("line function invariants") {
  const auto g = MellinLineFunction::symmetric_grid(10.0, 101);
  CHECK(g.front() == -10.0);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] == -g[g.size() - 1 - i]);

  std::vector<cplx> even(g.size()), odd(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    even[i] = std::exp(-g[i] * g[i]);
    odd[i] = g[i] * std::exp(-g[i] * g[i]);
  }
  CHECK_NOTHROW(MellinLineFunction(g, even, true));
  CHECK_THROWS_AS(MellinLineFunction(g, odd, true), DomainError);
  CHECK_NOTHROW(MellinLineFunction(g, odd, false));

  std::vector<double> lopsided{-1.0, 0.0, 1.0, 3.0};
  CHECK_THROWS_AS(MellinLineFunction(lopsided, std::vector<cplx>(4)), DomainError);
  CHECK(MellinLineFunction(g, std::vector<cplx>(g.size())).identically_zero());
  const MellinLineFunction F(g, even, true);
  CHECK(F.truncation_T() == 10.0);
  CHECK(std::abs(F.at(0.37) - std::exp(-0.37 * 0.37)) < 5e-4);
  CHECK(F.at(11.0) == cplx(0.0));
}

TEST_CASE("forward transform of the catalog pairs") {
  SUBCASE("box -> 1/s") {
    const auto& box = catalog_entry("box");
    for (double tau : {0.0, 0.5, 3.0}) {
      const cplx s(0.5, tau);
      CHECK(std::abs(mellin_forward_at(box.f, tau, cfg) - 1.0 / s) < 1e-9);
    }
  }
  SUBCASE("exp -> Gamma at s = 1/2 + i") {
    const cplx v = mellin_forward_at(catalog_entry("exp").f, 1.0, cfg);
    CHECK(std::abs(v - special::gamma(cplx(0.5, 1.0))) < 1e-8);
  }
  SUBCASE("lorentz -> (pi/2)/sin(pi s/2)") {
    for (double tau : {0.0, 1.0, 2.0}) {
      const cplx s(0.5, tau);
      const cplx closed = (pi / 2) / std::sin(pi * s / 2.0);
      CHECK(std::abs(lorentz_oracle(tau) - closed) < 1e-10);
      CHECK(std::abs(mellin_forward_at(catalog_entry("lorentz").f, tau, cfg) - closed) < 1e-8);
    }
  }
}

TEST_CASE("forward transform is Hermitian for real f") {
  for (const char* name : {"exp", "gauss", "lorentz"}) {
    const auto& f = catalog_entry(name).f;
    for (double tau : {0.4, 2.5, 9.0}) {
      CAPTURE(std::string(name));
      CHECK(std::abs(mellin_forward_at(f, -tau, cfg) - std::conj(mellin_forward_at(f, tau, cfg))) < 1e-10);
    }
  }
}

TEST_CASE("forward transform rejects slow decay") {
  HalfLineFunction f;
  f.eval = [](double t) { return std::pow(1 + t, -0.4); };
  f.decay = DecayClass::polynomial;
  f.decay_order = 0.4;
  CHECK_THROWS_AS(mellin_forward_at(f, 0.0, cfg), DomainError);
}

TEST_CASE("inverse transform") {
  const auto G = catalog_entry("exp").mellin_line();
  CHECK(std::abs(mellin_inverse(G, 1.0, cfg) - std::exp(-1.0)) < 1e-8);
  const auto B = catalog_entry("box").mellin_line();
  CHECK(std::abs(mellin_inverse(B, 0.5, cfg) - 1.0) < 1e-6);
  CHECK(std::abs(mellin_inverse(B, 2.0, cfg)) < 1e-6);
  CHECK(mellin_inverse(MellinLineFunction::zero(), 1.0, cfg) == 0.0);
}

TEST_CASE("Hermitian detection") {
  CHECK(catalog_entry("exp").mellin_line().hermitian());
  auto skew = MellinLineFunction::from_evaluator([](double t) { return cplx(0.0, std::exp(-t * t)); }, 40, 0);
  CHECK_FALSE(skew.hermitian());
  // Not Hermitian, so the complex inverse is returned without the real-part guard.
  CHECK(std::abs(mellin_inverse_complex(skew, 2.0, cfg).value.imag()) > 1e-3);
}

TEST_CASE("Parseval on the line") {
  CHECK(std::abs(parseval_sq_norm(catalog_entry("exp").mellin_line(), cfg).value - 0.5) < 1e-8);
  CHECK(std::abs(parseval_sq_norm(catalog_entry("box").mellin_line(), cfg).value - 1.0) < 1e-6);
  CHECK(parseval_sq_norm(MellinLineFunction::zero(), cfg).value == 0.0);
}

TEST_CASE("generalized Parseval") {
  const auto E = catalog_entry("exp").mellin_line();
  const auto B = catalog_entry("box").mellin_line();
  CHECK(std::abs(generalized_parseval(E, E, 1.0, cfg) - 0.5) < 1e-8);
  CHECK(std::abs(generalized_parseval(E, B, 2.0, cfg) - (1 - std::exp(-2.0)) / 2) < 1e-8);
  CHECK(std::abs(generalized_parseval(B, B, 1.0, cfg) - 1.0) < 1e-6);
}

TEST_CASE("generalized Parseval against direct quadrature") {
  boost::math::quadrature::exp_sinh<double> es;
  const std::vector<std::pair<const char*, const char*>> pairs{{"exp", "texp"}, {"gauss", "lorentz"}, {"texp", "gauss"}};
  for (auto [a, b] : pairs) {
    const auto& f1 = catalog_entry(a);
    const auto& f2 = catalog_entry(b);
    for (double x : {0.5, 1.0, 2.0}) {
      const double left = es.integrate([&](double t) { return f1.f(x * t) * f2.f(t); }, 0.0, INFINITY, 1e-13);
      CAPTURE(std::string(a));
      CAPTURE(std::string(b));
      CAPTURE(x);
      CHECK(std::abs(generalized_parseval(f1.mellin_line(), f2.mellin_line(), x, cfg) - left) < 1e-6);
    }
  }
}

TEST_CASE("round trip through a tabulated forward transform") {
  for (const char* name : {"exp", "gauss", "texp", "lorentz"}) {
    const auto& e = catalog_entry(name);
    const auto F = mellin_forward(e.f, cfg);
    CHECK_FALSE(F.has_evaluator());
    for (double x : {0.3, 1.0, 2.7}) {
      CAPTURE(std::string(name));
      CAPTURE(x);
      CHECK(std::abs(mellin_inverse(F, x, cfg) - e.f(x)) <= 1e-6 * (1 + std::abs(e.f(x))));
    }
    CHECK(std::abs(parseval_sq_norm(F, cfg).value - *e.l2_norm_sq) <= 1e-6);
  }
}

TEST_CASE("serial and parallel forward transforms are identical") {
  const auto tau = MellinLineFunction::symmetric_grid(20.0, 65);
  const auto& f = catalog_entry("texp").f;
  const auto a = mellin_forward(f, tau, cfg, Execution::serial);
  const auto b = mellin_forward(f, tau, cfg, Execution::parallel);
  CHECK(a.values() == b.values());
}

TEST_CASE("default truncation by decay class") {
  CHECK(default_truncation(DecayClass::exponential) == 40.0);
  CHECK(default_truncation(DecayClass::gaussian) == 80.0);
  CHECK(default_truncation(DecayClass::polynomial) == 200.0);
}
