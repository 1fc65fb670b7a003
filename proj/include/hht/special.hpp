#pragma once

#include <complex>

namespace hht {

using cplx = std::complex<double>;

// A point s = 1/2 + i*tau on the critical line Re s = 1/2.
class CriticalPoint {
 public:
  CriticalPoint() = default;
  explicit CriticalPoint(double tau);

  double tau() const { return tau_; }
  cplx s() const { return {0.5, tau_}; }
  // s -> 1 - s is tau -> -tau.
  CriticalPoint reflected() const { return CriticalPoint(-tau_); }

 private:
  double tau_ = 0.0;
};

namespace special {

// log_gamma and the multiplier reject |Im s| beyond this.
inline constexpr double kMaxImag = 200.0;

struct FresnelPair {
  double c = 0.0;
  double s = 0.0;
};

// Fresnel integrals with upper limit sqrt(x):
//   S(x) = sqrt(2/pi) int_0^sqrt(x) sin(t^2) dt,  C(x) likewise with cos.
// Both tend to 1/2 as x -> infinity. Absolute error below 1e-14.
FresnelPair fresnel(double x);
double fresnel_S(double x);
double fresnel_C(double x);

// (C(x) - 1/2, S(x) - 1/2) without cancellation for large x.
FresnelPair fresnel_complement(double x);

// Principal branch of log Gamma (continuous continuation of the real
// log-gamma, imaginary part not reduced mod 2pi). Lanczos g = 7 on
// Re s >= 1/2, reflection below. Throws DomainError at poles and for
// |Im s| > kMaxImag.
cplx log_gamma(cplx s);
inline cplx gamma(cplx s) { return std::exp(log_gamma(s)); }

// log sin(z), stable for large |Im z|; imaginary part is some branch.
cplx log_sin(cplx z);
cplx log_cos(cplx z);

// log cosh(a) for real a without overflow.
double log_cosh(double a);

// theta(s) = sqrt(2/pi) Gamma(s) [sin(pi s/2) + cos(pi s/2)], the symbol of
// the half-Hartley transform: (H f)*(s) = theta(s) f*(1-s).
cplx theta_multiplier(CriticalPoint p);
cplx log_theta(cplx s);

// |theta(1/2 + i tau)| = 2 cosh(pi tau/2) / sqrt(cosh(pi tau)), valid for all tau.
double theta_modulus(double tau);

// k(x) = pi sqrt2 [sin x + cos x] - 2^{3/2} pi [sin x S(x) + cos x C(x)], x > 0.
double kernel_k(double x);

// Phi(u) = sqrt(2/pi) [sin u S(u) + cos u C(u)], u >= 0; the inversion kernel.
double inverse_kernel_phi(double u);

// Phi(u) - (sin u + cos u)/sqrt(2 pi), the non-oscillating part of Phi.
// Equals -k(u) / (2 pi^{3/2}); decays like u^{-3/2}.
double inverse_kernel_phi_smooth(double u);

namespace detail {
// sqrt(x) <= 2 uses the power series, above uses the continued fraction.
inline constexpr double kFresnelSeam = 4.0;
FresnelPair fresnel_series(double x);
// Returns the complement (C - 1/2, S - 1/2).
FresnelPair fresnel_continued_fraction(double x);
}  // namespace detail

}  // namespace special
}  // namespace hht
