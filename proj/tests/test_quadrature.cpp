#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hht/errors.hpp"
#include "hht/quadrature.hpp"
#include "hht/special.hpp"

using namespace hht;
using namespace hht::quad;
using std::numbers::pi;

TEST_CASE("config validation") {
  QuadratureConfig c;
  CHECK_NOTHROW(c.validate());
  c.abs_tol = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.max_subdivisions = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.contour_truncation_T = -1.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  const auto t = QuadratureConfig{}.tightened(1e-2);
  CHECK(t.abs_tol == doctest::Approx(1e-12));
}

TEST_CASE("adaptive on elementary integrals") {
  const QuadratureConfig cfg;
  CHECK(integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, cfg).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(integrate_adaptive([](double t) { return std::sin(t); }, 0.0, pi, cfg).value - 2.0) < 1e-12);
  const auto r = integrate_adaptive([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, cfg, Singularity::left);
  CHECK(std::abs(r.value - 2.0) < 1e-10);
  CHECK(r.converged);
  // Reversed limits change the sign.
  CHECK(integrate_adaptive([](double t) { return t; }, 1.0, 0.0, cfg).value == doctest::Approx(-0.5));
}

TEST_CASE("right-end singularity away from zero reaches the resolution floor") {
  const QuadratureConfig cfg;
  const auto r = integrate_adaptive([](double t) { return 1.0 / std::sqrt(1.0 - t); }, 0.0, 1.0, cfg,
                                    Singularity::right);
  CHECK(std::abs(r.value - 2.0) <= r.err_est);
  CHECK(std::abs(r.value - 2.0) < 1e-7);
  // Non-integrable singularity is not accepted.
  CHECK_THROWS_AS(integrate_adaptive([](double t) { return 1.0 / (1.0 - t); }, 0.0, 1.0, cfg, Singularity::right),
                  NumericalError);
}

TEST_CASE("adaptive reports NaN integrands") {
  const QuadratureConfig cfg;
  CHECK_THROWS_AS(integrate_adaptive([](double) { return NAN; }, 0.0, 1.0, cfg), NumericalError);
}

TEST_CASE("adaptive gives up after max_subdivisions") {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 3;
  cfg.abs_tol = cfg.rel_tol = 1e-14;
  CHECK_THROWS_AS(integrate_adaptive([](double t) { return std::sin(200.0 * t * t); }, 0.0, 10.0, cfg),
                  NumericalError);
  const std::vector<double> pts{0.0, 10.0};
  CHECK_FALSE(integrate_points([](double t) { return std::sin(200.0 * t * t); }, pts, cfg).converged);
}

TEST_CASE("linearity and interval additivity") {
  const QuadratureConfig cfg;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-2.0, 2.0), C(0.1, 2.9);
  auto f = [](double t) { return std::exp(-t) * std::cos(3 * t); };
  auto g = [](double t) { return t * t / (1 + t); };
  for (int i = 0; i < 10; ++i) {
    const double a = U(rng), b = U(rng), c = C(rng);
    const double lin = integrate_adaptive([&](double t) { return a * f(t) + b * g(t); }, 0.0, 3.0, cfg).value;
    const double sep = a * integrate_adaptive(f, 0.0, 3.0, cfg).value + b * integrate_adaptive(g, 0.0, 3.0, cfg).value;
    CHECK(std::abs(lin - sep) <= 2 * cfg.abs_tol + 2 * cfg.rel_tol * std::abs(lin));
    const double whole = integrate_adaptive(f, 0.0, 3.0, cfg).value;
    const double split = integrate_adaptive(f, 0.0, c, cfg).value + integrate_adaptive(f, c, 3.0, cfg).value;
    CHECK(std::abs(whole - split) <= 2 * cfg.abs_tol + 2 * cfg.rel_tol * std::abs(whole));
  }
}

TEST_CASE("oscillatory tail engine") {
  const QuadratureConfig cfg;
  SUBCASE("sinc") {
    auto f = [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; };
    const double v = integrate_adaptive(f, 0.0, pi, cfg).value + integrate_oscillatory_tail(f, pi, 1.0, cfg).value;
    CHECK(std::abs(v - pi / 2) <= 1e-10);
  }
  SUBCASE("damped cosine") {
    auto f = [](double t) { return std::exp(-t) * std::cos(t); };
    const double v = integrate_adaptive(f, 0.0, 1.0, cfg).value + integrate_oscillatory_tail(f, 1.0, 1.0, cfg).value;
    CHECK(std::abs(v - 0.5) <= 1e-10);
  }
  SUBCASE("cos over 1 + t^2") {
    auto f = [](double t) { return std::cos(t) / (1 + t * t); };
    const double v = integrate_adaptive(f, 0.0, 2.0, cfg).value + integrate_oscillatory_tail(f, 2.0, 1.0, cfg).value;
    CHECK(std::abs(v - pi / (2 * std::exp(1.0))) <= 1e-9);
  }
  SUBCASE("slow t^{-1/2} envelope") {
    // int_1^inf sin(t)/sqrt(t) dt = sqrt(pi/2) - int_0^1 sin(t)/sqrt(t) dt
    auto f = [](double t) { return std::sin(t) / std::sqrt(t); };
    const double head = integrate_adaptive(f, 0.0, 1.0, cfg, Singularity::left).value;
    const double v = integrate_oscillatory_tail(f, 1.0, 1.0, cfg).value;
    CHECK(std::abs(v - (std::sqrt(pi / 2) - head)) <= 1e-9);
  }
}

TEST_CASE("oscillatory tail agrees with the adaptive engine plus a tail bound") {
  const QuadratureConfig cfg;
  const double omega = 3.0, a = 0.5;
  auto f = [&](double t) { return std::exp(-t) * std::sin(omega * t); };
  const double b = a + 40 * pi / omega;
  const double trunc = integrate_oscillatory_span(f, a, b, omega, cfg).value;
  const double bound = std::exp(-b);  // |int_b^inf| <= int e^{-t}
  const double tail = integrate_oscillatory_tail(f, a, omega, cfg).value;
  CHECK(std::abs(tail - trunc) <= bound + 5 * cfg.abs_tol);
}

TEST_CASE("oscillatory tail rejects bad input and non-decaying envelopes") {
  QuadratureConfig cfg;
  CHECK_THROWS_AS(integrate_oscillatory_tail([](double t) { return std::sin(t); }, 1.0, 0.0, cfg), DomainError);
  cfg.max_tail_periods = 200;
  CHECK_THROWS_AS(integrate_oscillatory_tail([](double t) { return t * std::sin(t); }, 1.0, 1.0, cfg),
                  NumericalError);
}

TEST_CASE("semi-infinite non-oscillating") {
  const QuadratureConfig cfg;
  CHECK(std::abs(integrate_semi_infinite([](double t) { return 1 / (t * t); }, 1.0, cfg).value - 1.0) < 1e-12);
  CHECK(std::abs(integrate_semi_infinite([](double t) { return std::exp(-t); }, 0.0, cfg).value - 1.0) < 1e-12);
}

TEST_CASE("critical line integration") {
  QuadratureConfig cfg;
  SUBCASE("gaussian") {
    const auto r = integrate_critical_line([](double t) { return cplx(std::exp(-t * t)); }, cfg);
    CHECK(std::abs(r.value - 1.0 / (2 * std::sqrt(pi))) < 1e-12);
  }
  SUBCASE("zero") { CHECK(integrate_critical_line([](double) { return cplx(0.0); }, cfg).value == cplx(0.0)); }
  SUBCASE("inverse Mellin of Gamma at x = 1") {
    const auto r = integrate_critical_line([](double t) { return special::gamma(cplx(0.5, t)); }, cfg);
    CHECK(std::abs(r.value.real() - std::exp(-1.0)) < 1e-8);
    CHECK(std::abs(r.value.imag()) < 1e-8);
  }
  SUBCASE("truncation beyond tolerance is an error") {
    cfg.contour_truncation_T = 2.0;
    CHECK_THROWS_AS(integrate_critical_line([](double t) { return cplx(1.0 / (1 + t * t)); }, cfg), NumericalError);
  }
}

TEST_CASE("line integration with algebraic tails") {
  const QuadratureConfig cfg;
  // (1/2pi) int 1/(1/4 + tau^2) dtau = 1 : |1/s|^2 on the line.
  const auto r = integrate_line([](double t) { return cplx(1.0 / (0.25 + t * t)); }, 50.0, 2, 0.0, cfg);
  CHECK(std::abs(r.value.real() - 1.0) < 1e-9);
  // With oscillation x^{-i tau}: inverse Mellin of 1/s at x = 1/2 is 1.
  const double lx = std::log(0.5);
  auto g = [&](double t) { return cplx(1.0, 0.0) / cplx(0.5, t) * std::exp(-cplx(0.5, t) * lx); };
  const auto b = integrate_line(g, 50.0, 1, std::abs(lx), cfg);
  CHECK(std::abs(b.value.real() - 1.0) < 1e-8);
}

TEST_CASE("error estimates are honest") {
  const QuadratureConfig cfg;
  struct Case {
    std::function<double(double)> f;
    double a, b, exact;
    Singularity sing;
  };
  const std::vector<Case> cases{
      {[](double t) { return std::exp(-t); }, 0.0, 5.0, 1 - std::exp(-5.0), Singularity::none},
      {[](double t) { return std::log(t); }, 0.0, 1.0, -1.0, Singularity::left},
      {[](double t) { return 1 / std::sqrt(t); }, 0.0, 4.0, 4.0, Singularity::left},
      {[](double t) { return std::cos(50 * t); }, 0.0, 1.0, std::sin(50.0) / 50, Singularity::none},
  };
  for (const auto& c : cases) {
    const auto r = integrate_adaptive(c.f, c.a, c.b, cfg, c.sing);
    CHECK(std::abs(r.value - c.exact) <= 10 * r.err_est + 1e-15);
  }
}

TEST_CASE("Levin u accelerates an alternating series") {
  // sum (-1)^k / (k + 1) = ln 2
  std::vector<double> terms, sums;
  double s = 0.0;
  for (int k = 0; k < 12; ++k) {
    terms.push_back((k % 2 ? -1.0 : 1.0) / (k + 1));
    s += terms.back();
    sums.push_back(s);
  }
  CHECK(std::abs(levin_u(sums, terms, 0) - std::log(2.0)) < 1e-10);
  CHECK(std::abs(sums.back() - std::log(2.0)) > 1e-2);
}
