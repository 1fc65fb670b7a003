#include "hht/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "hht/errors.hpp"

namespace hht {

CriticalPoint::CriticalPoint(double tau) : tau_(tau) {
  if (!std::isfinite(tau)) throw DomainError("CriticalPoint: tau must be finite");
}

namespace special {
namespace {

using std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
const cplx kI{0.0, 1.0};

void require_fresnel_arg(double x) {
  if (!std::isfinite(x) || x < 0.0) throw DomainError("Fresnel integral: argument must be finite and >= 0");
}

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

namespace detail {

FresnelPair fresnel_series(double x) {
  // With z = sqrt(2x/pi):
  //   C = z sum_{k even} (-1)^{k/2} x^k / (k! (2k+1))
  //   S = z sum_{k odd}  (-1)^{(k-1)/2} x^k / (k! (2k+1))
  const double z = std::sqrt(2.0 * x / pi);
  double c = 0.0, s = 0.0;
  double term = 1.0;  // x^k / k!
  for (int k = 0; k < 200; ++k) {
    if (k > 0) term *= x / k;
    const double contrib = term / (2 * k + 1);
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      c += sign * contrib;
    } else {
      s += sign * contrib;
    }
    if (k > x && contrib < kEps * 1e-2 * (std::abs(c) + std::abs(s))) break;
  }
  return {z * c, z * s};
}

FresnelPair fresnel_continued_fraction(double x) {
  // Modified Lentz evaluation of the continued fraction for the complementary
  // error function along the Fresnel ray; pi z^2 = 2x.
  constexpr double kTiny = 1e-300;
  const double big = std::numeric_limits<double>::max() * kEps;
  const double z = std::sqrt(2.0 * x / pi);
  cplx b(1.0, -2.0 * x);
  cplx cc = big;
  cplx d = 1.0 / b;
  cplx h = d;
  int n = -1;
  bool converged = false;
  for (int k = 2; k <= 400; ++k) {
    n += 2;
    const double a = -static_cast<double>(n) * (n + 1);
    b += 4.0;
    d = a * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    cc = b + a / cc;
    if (std::abs(cc) < kTiny) cc = kTiny;
    const cplx del = cc * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) <= kEps) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericalError("Fresnel continued fraction did not converge");
  h *= cplx(z, -z);
  // C + iS = (1+i)/2 (1 - e^{ix} h)  =>  (C - 1/2) + i (S - 1/2) = -(1+i)/2 e^{ix} h
  const cplx comp = -cplx(0.5, 0.5) * cplx(std::cos(x), std::sin(x)) * h;
  return {comp.real(), comp.imag()};
}

}  // namespace detail

FresnelPair fresnel(double x) {
  require_fresnel_arg(x);
  if (x == 0.0) return {0.0, 0.0};
  if (x <= detail::kFresnelSeam) return detail::fresnel_series(x);
  const FresnelPair comp = detail::fresnel_continued_fraction(x);
  return {0.5 + comp.c, 0.5 + comp.s};
}

FresnelPair fresnel_complement(double x) {
  require_fresnel_arg(x);
  if (x <= detail::kFresnelSeam) {
    const FresnelPair v = detail::fresnel_series(x);
    return {v.c - 0.5, v.s - 0.5};
  }
  return detail::fresnel_continued_fraction(x);
}

double fresnel_S(double x) { return fresnel(x).s; }
double fresnel_C(double x) { return fresnel(x).c; }

cplx log_sin(cplx z) {
  if (std::abs(z.imag()) < 1.0) return std::log(std::sin(z));
  const cplx log_2i = std::log(cplx(0.0, 2.0));
  if (z.imag() > 0.0) {
    // sin z = e^{-iz} (e^{2iz} - 1) / (2i), |e^{2iz}| < 1
    return -kI * z + std::log(std::exp(2.0 * kI * z) - 1.0) - log_2i;
  }
  return kI * z + std::log(1.0 - std::exp(-2.0 * kI * z)) - log_2i;
}

cplx log_cos(cplx z) { return log_sin(z + pi / 2.0); }

double log_cosh(double a) {
  const double b = std::abs(a);
  return b + std::log1p(std::exp(-2.0 * b)) - std::numbers::ln2;
}

cplx log_gamma(cplx s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("log_gamma: non-finite argument");
  if (std::abs(s.imag()) > kMaxImag) throw DomainError("log_gamma: |Im s| exceeds supported range");
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    throw DomainError("log_gamma: pole at non-positive integer");
  }
  if (s.real() < 0.5) {
    return std::log(pi) - log_sin(pi * s) - log_gamma(1.0 - s);
  }
  const cplx z = s - 1.0;
  cplx series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

cplx log_theta(cplx s) {
  // sin(a) + cos(a) = sqrt2 sin(a + pi/4), so theta = (2/sqrt(pi)) Gamma(s) sin(pi (2s+1)/4).
  return std::log(2.0 / std::sqrt(pi)) + log_gamma(s) + log_sin(pi * (2.0 * s + 1.0) / 4.0);
}

cplx theta_multiplier(CriticalPoint p) { return std::exp(log_theta(p.s())); }

double theta_modulus(double tau) {
  return std::exp(std::numbers::ln2 + log_cosh(pi * tau / 2.0) - 0.5 * log_cosh(pi * tau));
}

double kernel_k(double x) {
  if (!std::isfinite(x) || x <= 0.0) throw DomainError("kernel_k: x must be > 0");
  const FresnelPair comp = fresnel_complement(x);
  return -2.0 * std::numbers::sqrt2 * pi * (std::sin(x) * comp.s + std::cos(x) * comp.c);
}

double inverse_kernel_phi(double u) {
  if (!std::isfinite(u) || u < 0.0) throw DomainError("inverse_kernel_phi: u must be >= 0");
  const FresnelPair v = fresnel(u);
  return std::sqrt(2.0 / pi) * (std::sin(u) * v.s + std::cos(u) * v.c);
}

double inverse_kernel_phi_smooth(double u) {
  if (!std::isfinite(u) || u < 0.0) throw DomainError("inverse_kernel_phi_smooth: u must be >= 0");
  const FresnelPair comp = fresnel_complement(u);
  return std::sqrt(2.0 / pi) * (std::sin(u) * comp.s + std::cos(u) * comp.c);
}

}  // namespace special
}  // namespace hht
