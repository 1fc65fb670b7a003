#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hht/errors.hpp"
#include "hht/special.hpp"

using namespace hht;
using namespace hht::special;
using std::numbers::pi;

namespace {

double gk(auto f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 8, 1e-14);
}

// sqrt(2/pi) int_0^sqrt(x) trig(t^2) dt by Gauss-Kronrod.
double fresnel_oracle(double x, bool sine) {
  auto f = [sine](double t) { return sine ? std::sin(t * t) : std::cos(t * t); };
  return std::sqrt(2.0 / pi) * gk(f, 0.0, std::sqrt(x));
}

// 2 int_0^inf e^{-xt} sqrt(t)/(1+t^2) dt.
double k_laplace(double x) {
  boost::math::quadrature::exp_sinh<double> es;
  return 2.0 * es.integrate([x](double t) { return std::exp(-x * t) * std::sqrt(t) / (1.0 + t * t); }, 0.0,
                            std::numeric_limits<double>::infinity(), 1e-14);
}

}  // namespace

TEST_CASE("critical point reflection flips tau") {
  CriticalPoint p(1.5);
  CHECK(p.s() == cplx(0.5, 1.5));
  CHECK(p.reflected().tau() == -1.5);
  CHECK_THROWS_AS(CriticalPoint(NAN), DomainError);
}

TEST_CASE("fresnel at zero and against quadrature") {
  CHECK(fresnel_S(0.0) == 0.0);
  CHECK(fresnel_C(0.0) == 0.0);
  for (double x : {1e-6, 0.3, 1.0, 2.5, 3.99, 4.0, 4.01, 9.0, 30.0, 100.0}) {
    CAPTURE(x);
    CHECK(std::abs(fresnel_S(x) - fresnel_oracle(x, true)) <= 1e-12);
    CHECK(std::abs(fresnel_C(x) - fresnel_oracle(x, false)) <= 1e-12);
  }
}

TEST_CASE("fresnel uses the sqrt(x) upper limit") {
  // int_0^1 sin(t^2) dt = 0.3102683017233811; at x = 1 both conventions coincide.
  CHECK(std::abs(fresnel_S(1.0) - std::sqrt(2.0 / pi) * 0.31026830172338110) < 1e-12);
  // At x = 4 the upper limit is 2, not 4.
  const double upper_limit_x = std::sqrt(2.0 / pi) * gk([](double t) { return std::sin(t * t); }, 0.0, 4.0);
  CHECK(std::abs(fresnel_S(4.0) - fresnel_oracle(4.0, true)) < 1e-12);
  CHECK(std::abs(fresnel_S(4.0) - upper_limit_x) > 1e-2);
}

TEST_CASE("fresnel limits and envelope") {
  CHECK(fresnel_S(1e6) == doctest::Approx(0.5).epsilon(0.002));
  CHECK(fresnel_C(1e6) == doctest::Approx(0.5).epsilon(0.002));
  for (double x = 0.0; x <= 100.0; x += 0.25) {
    const auto f = fresnel(x);
    CHECK(f.s >= -0.1);
    CHECK(f.s <= 1.0);
    CHECK(f.c >= -0.1);
    CHECK(f.c <= 1.0);
    if (x >= 4.0) {
      CHECK(std::abs(f.s - 0.5) <= 1.0 / std::sqrt(x));
      CHECK(std::abs(f.c - 0.5) <= 1.0 / std::sqrt(x));
    }
  }
}

TEST_CASE("fresnel branches agree at the seam") {
  const double x = detail::kFresnelSeam;
  const auto a = detail::fresnel_series(x);
  const auto b = detail::fresnel_continued_fraction(x);
  CHECK(std::abs(a.c - (0.5 + b.c)) <= 1e-13);
  CHECK(std::abs(a.s - (0.5 + b.s)) <= 1e-13);
  const auto comp = fresnel_complement(1e4);
  CHECK(std::abs(comp.c - (fresnel_C(1e4) - 0.5)) < 1e-15);
}

TEST_CASE("fresnel domain") {
  CHECK_THROWS_AS(fresnel(-1.0), DomainError);
  CHECK_THROWS_AS(fresnel(INFINITY), DomainError);
  CHECK_THROWS_AS(fresnel(NAN), DomainError);
}

TEST_CASE("log gamma special values") {
  CHECK(std::abs(log_gamma(0.5) - std::log(std::sqrt(pi))) < 1e-14);
  CHECK(std::abs(log_gamma(1.0)) < 1e-14);
  CHECK(std::abs(log_gamma(2.0)) < 1e-14);
}

TEST_CASE("log gamma matches lgamma on the real axis") {
  for (double x = 0.05; x < 30.0; x *= 1.37) {
    CAPTURE(x);
    CHECK(std::abs(log_gamma(x).real() - std::lgamma(x)) <= 1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST_CASE("modulus identity on the critical line") {
  for (double tau : {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 5.0, -5.0, 10.0, -10.0}) {
    CAPTURE(tau);
    const double want = pi / std::cosh(pi * tau);
    CHECK(std::abs(std::norm(gamma(cplx(0.5, tau))) - want) <= 1e-10 * want);
  }
}

TEST_CASE("gamma recurrence and reflection") {
  for (cplx s : {cplx(0.3, 0.7), cplx(0.5, 12.0), cplx(0.9, -40.0), cplx(0.1, 150.0)}) {
    CAPTURE(s);
    // log Gamma(s+1) = log s + log Gamma(s), modulo 2 pi i.
    const cplx d = log_gamma(s + 1.0) - std::log(s) - log_gamma(s);
    CHECK(std::abs(d.real()) < 1e-12 * std::max(1.0, std::abs(log_gamma(s))));
    CHECK(std::abs(std::remainder(d.imag(), 2 * pi)) < 1e-9);
    // Gamma(s) Gamma(1-s) = pi / sin(pi s), compared in log space.
    const cplx r = log_gamma(s) + log_gamma(1.0 - s) - (std::log(pi) - log_sin(pi * s));
    CHECK(std::abs(r.real()) < 1e-11 * std::max(1.0, std::abs(s)));
    CHECK(std::abs(std::remainder(r.imag(), 2 * pi)) < 1e-9);
  }
}

TEST_CASE("gamma against the Euler integral") {
  boost::math::quadrature::exp_sinh<double> es;
  const cplx s(1.5, 2.0);
  auto re = [&](double t) { return std::pow(t, s.real() - 1) * std::exp(-t) * std::cos(s.imag() * std::log(t)); };
  auto im = [&](double t) { return std::pow(t, s.real() - 1) * std::exp(-t) * std::sin(s.imag() * std::log(t)); };
  const cplx want(es.integrate(re, 0.0, INFINITY, 1e-14), es.integrate(im, 0.0, INFINITY, 1e-14));
  CHECK(std::abs(gamma(s) - want) <= 1e-12 * std::abs(want));
}

TEST_CASE("log gamma rejects poles and large imaginary parts") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-3.0), DomainError);
  CHECK_THROWS_AS(log_gamma(cplx(0.5, 200.5)), DomainError);
  CHECK_NOTHROW(log_gamma(cplx(0.5, 199.0)));
}

TEST_CASE("theta at tau = 0 is 2") {
  const cplx t = theta_multiplier(CriticalPoint(0.0));
  CHECK(std::abs(t - 2.0) <= 1e-12);
}

TEST_CASE("theta modulus closed form") {
  for (double tau : {-7.0, -2.0, 0.3, 2.0, 15.0}) {
    CAPTURE(tau);
    const double want = 2.0 * std::cosh(pi * tau / 2.0) / std::sqrt(std::cosh(pi * tau));
    CHECK(std::abs(std::abs(theta_multiplier(CriticalPoint(tau))) - want) <= 1e-10);
    CHECK(std::abs(theta_modulus(tau) - want) <= 1e-12);
  }
  const double far = std::abs(theta_multiplier(CriticalPoint(50.0)));
  CHECK(far >= std::numbers::sqrt2 - 1e-12);
  CHECK(far <= std::numbers::sqrt2 + 1e-6);
  CHECK(theta_modulus(1e4) == doctest::Approx(std::numbers::sqrt2));
}

TEST_CASE("theta band and reflection product on the grid") {
  for (int i = 0; i <= 1000; ++i) {
    const double tau = -20.0 + 40.0 * i / 1000.0;
    const CriticalPoint p(tau);
    const cplx th = theta_multiplier(p);
    CHECK(std::abs(th) >= std::numbers::sqrt2 - 1e-10);
    CHECK(std::abs(th) <= 2.0 + 1e-10);
    const cplx prod = th * theta_multiplier(p.reflected());
    CHECK(std::abs(prod - (2.0 + 2.0 / std::cosh(pi * tau))) <= 1e-9);
  }
}

TEST_CASE("theta agrees with the definition at moderate tau") {
  for (double tau : {0.0, 0.8, -3.0}) {
    const cplx s(0.5, tau);
    const cplx want = std::sqrt(2.0 / pi) * gamma(s) * (std::sin(pi * s / 2.0) + std::cos(pi * s / 2.0));
    CHECK(std::abs(theta_multiplier(CriticalPoint(tau)) - want) <= 1e-12 * std::abs(want));
  }
}

TEST_CASE("kernel k against its Laplace representation") {
  for (double x : {0.5, 1.0, 5.0, 20.0}) {
    CAPTURE(x);
    CHECK(std::abs(kernel_k(x) - k_laplace(x)) <= 1e-8);
  }
  CHECK(std::abs(kernel_k(100.0)) < 0.05);
}

TEST_CASE("kernel k stays finite at 0+") {
  // 2 int sqrt(t)/(1+t^2) dt = pi sqrt2 converges, so k is bounded near 0.
  CHECK(std::abs(k_laplace(1e-4) - kernel_k(1e-4)) <= 1e-6);
  CHECK(kernel_k(1e-4) == doctest::Approx(4.372).epsilon(1e-3));
  CHECK(kernel_k(1e-10) == doctest::Approx(pi * std::numbers::sqrt2).epsilon(1e-4));
}

TEST_CASE("kernel k matches its defining formula at random points") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> U(1e-3, 50.0);
  for (int i = 0; i < 50; ++i) {
    const double x = U(rng);
    const auto f = fresnel(x);
    const double want = pi * std::numbers::sqrt2 * (std::sin(x) + std::cos(x)) -
                        2.0 * std::numbers::sqrt2 * pi * (std::sin(x) * f.s + std::cos(x) * f.c);
    CHECK(std::abs(kernel_k(x) - want) <= 1e-10);
  }
}

TEST_CASE("phi against the Abel-type integral") {
  CHECK(inverse_kernel_phi(0.0) == 0.0);
  boost::math::quadrature::tanh_sinh<double> ts;
  for (double u : {0.5, 2.0, 10.0}) {
    // The two-argument form passes the distance to the nearer endpoint, so
    // u - t is exact near the singular end.
    auto g = [u](double t, double tc) {
      const double d = t > u / 2 ? tc : u - t;
      return std::cos(t) / std::sqrt(d);
    };
    const double want = ts.integrate(g, 0.0, u, 1e-14) / pi;
    CAPTURE(u);
    CHECK(std::abs(inverse_kernel_phi(u) - want) <= 1e-8);
  }
}

TEST_CASE("phi is bounded and splits into oscillating and smooth parts") {
  double sup = 0.0;
  for (double u = 0.0; u <= 1e3; u += 0.05) sup = std::max(sup, std::abs(inverse_kernel_phi(u)));
  MESSAGE("sup |Phi| on [0, 1000] = " << sup);
  CHECK(sup <= 1.0);
  for (double u : {1e-3, 0.7, 3.0, 40.0, 1e3}) {
    const double osc = (std::sin(u) + std::cos(u)) / std::sqrt(2.0 * pi);
    CHECK(std::abs(inverse_kernel_phi_smooth(u) - (inverse_kernel_phi(u) - osc)) <= 1e-13);
    CHECK(std::abs(inverse_kernel_phi_smooth(u) + kernel_k(u) / (2.0 * std::pow(pi, 1.5))) <= 1e-13);
  }
}

TEST_CASE("kernel domains") {
  CHECK_THROWS_AS(kernel_k(0.0), DomainError);
  CHECK_THROWS_AS(kernel_k(-1.0), DomainError);
  CHECK_THROWS_AS(inverse_kernel_phi(-1.0), DomainError);
}
