#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hht/catalog.hpp"
#include "hht/errors.hpp"

using namespace hht;
using std::numbers::pi;

namespace {

const double kSqrt2OverPi = std::sqrt(2.0 / pi);

// f*(1/2 + i tau) = int_R e^{u s} f(e^u) du.
cplx mellin_oracle(const CatalogEntry& e, double tau) {
  boost::math::quadrature::sinh_sinh<double> ss;
  const cplx s(0.5, tau);
  auto part = [&](bool imag) {
    return ss.integrate(
        [&](double u) {
          const double t = std::exp(u);
          if (t == 0.0 || !std::isfinite(t)) return 0.0;
          const double fv = e.f(t);
          if (fv == 0.0) return 0.0;
          const cplx w = std::exp(u * s) * fv;
          return imag ? w.imag() : w.real();
        },
        1e-13);
  };
  return {part(false), part(true)};
}

// sqrt(2/pi) int_0^inf (cos xt + sin xt) f(t) dt by Ooura's double exponential rule.
double hartley_oracle(const CatalogEntry& e, double x) {
  boost::math::quadrature::ooura_fourier_sin<double> s;
  boost::math::quadrature::ooura_fourier_cos<double> c;
  auto f = [&](double t) { return e.f(t); };
  return kSqrt2OverPi * (s.integrate(f, x).first + c.integrate(f, x).first);
}

}  // namespace

TEST_CASE("catalog names") {
  const auto names = catalog_names();
  CHECK(names == std::vector<std::string>{"exp", "gauss", "texp", "box", "lorentz", "zero"});
  CHECK_THROWS_AS(catalog_entry("sinc"), DomainError);
  for (const auto& n : names) CHECK(catalog_entry(n).name == n);
}

TEST_CASE("Mellin closed forms against quadrature") {
  for (const char* name : {"exp", "gauss", "texp", "lorentz"}) {
    const auto& e = catalog_entry(name);
    for (double tau : {0.0, 0.8, 3.0}) {
      CAPTURE(name);
      CAPTURE(tau);
      CHECK(std::abs(e.mellin(cplx(0.5, tau)) - mellin_oracle(e, tau)) < 1e-8);
    }
  }
  CHECK(std::abs(catalog_entry("exp").mellin(0.5) - std::sqrt(pi)) < 1e-14);
  CHECK(std::abs(catalog_entry("box").mellin(cplx(0.5, 2.0)) - 1.0 / cplx(0.5, 2.0)) < 1e-15);
}

TEST_CASE("Hartley closed forms against quadrature") {
  for (const char* name : {"exp", "texp", "lorentz"}) {
    const auto& e = catalog_entry(name);
    for (double x : {0.3, 1.0, 4.0}) {
      CAPTURE(name);
      CAPTURE(x);
      CHECK(std::abs(e.hartley(x) - hartley_oracle(e, x)) < 1e-8);
    }
  }
  const auto& box = catalog_entry("box");
  for (double x : {0.3, 1.0, 4.0}) {
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [x](double t) { return std::cos(x * t) + std::sin(x * t); }, 0.0, 1.0, 8, 1e-14);
    CHECK(std::abs(box.hartley(x) - kSqrt2OverPi * v) < 1e-12);
  }
  CHECK(std::abs(box.hartley(pi) - 2 * kSqrt2OverPi / pi) < 1e-14);
  // Small x stays accurate: H box -> sqrt(2/pi) (1 + x/2).
  CHECK(std::abs(box.hartley(1e-9) - kSqrt2OverPi * (1 + 0.5e-9)) < 1e-15);
  // Large-x branch of the lorentz sine integral joins the Ei branch.
  const auto& lz = catalog_entry("lorentz");
  CHECK(std::abs(lz.hartley(40.0 - 1e-9) - lz.hartley(40.0)) < 1e-12);
}

TEST_CASE("squared norms") {
  boost::math::quadrature::exp_sinh<double> es;
  for (const auto& e : catalog()) {
    if (!e.l2_norm_sq || e.name == "zero") continue;
    CAPTURE(e.name);
    const double b = e.f.support_end;
    const double v = std::isinf(b) ? es.integrate([&](double t) { return e.f(t) * e.f(t); }, 0.0, INFINITY, 1e-13)
                                   : b;  // only the unit box is compact
    CHECK(std::abs(v - *e.l2_norm_sq) < 1e-10);
  }
  CHECK(*catalog_entry("texp").l2_norm_sq == 0.25);
}

TEST_CASE("zero entry") {
  const auto& z = catalog_entry("zero");
  CHECK(z.f.identically_zero);
  CHECK(z.mellin_line().identically_zero());
  CHECK(z.hartley(2.0) == 0.0);
}

TEST_CASE("line functions mirror the closed forms") {
  for (const auto& e : catalog()) {
    const auto L = e.mellin_line();
    CAPTURE(e.name);
    CHECK(L.has_evaluator());
    CHECK(L.hermitian());
    CHECK(L.truncation_T() == e.line_T);
    CHECK(std::abs(L.at(1.5) - e.mellin(cplx(0.5, 1.5))) < 1e-15);
  }
}
