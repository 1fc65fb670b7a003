#include "hht/catalog.hpp"

#include <cmath>
#include <numbers>

#include "hht/errors.hpp"

namespace hht {
namespace {

using std::numbers::pi;
const double kSqrt2OverPi = std::sqrt(2.0 / pi);

// Gamma-type transforms are negligible long before log_gamma's range ends.
cplx gamma_or_zero(cplx s) {
  if (std::abs(s.imag()) > special::kMaxImag) return {};
  return special::gamma(s);
}

// int_0^inf sin(xt)/(1+t^2) dt = (e^{-x} Ei(x) - e^{x} Ei(-x)) / 2.
double lorentz_sine(double x) {
  if (x < 40.0) return 0.5 * (std::exp(-x) * std::expint(x) - std::exp(x) * std::expint(-x));
  // Asymptotic sum_{k even} k! / x^{k+1}, truncated at its smallest term.
  double term = 1.0 / x, sum = 0.0;
  for (int k = 0; k < 60; k += 2) {
    sum += term;
    const double next = term * (k + 1) * (k + 2) / (x * x);
    if (next >= term || next < 1e-18 * sum) break;
    term = next;
  }
  return sum;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;

  {
    CatalogEntry e;
    e.name = "exp";
    e.formula = "exp(-t)";
    e.f.eval = [](double t) { return std::exp(-t); };
    e.f.decay = DecayClass::exponential;
    e.f.negligible_beyond = 50.0;
    e.mellin = gamma_or_zero;
    e.line_T = 40.0;
    e.l2_norm_sq = 0.5;
    e.hartley = [](double x) { return kSqrt2OverPi * (1.0 + x) / (1.0 + x * x); };
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "gauss";
    e.formula = "exp(-t^2)";
    e.f.eval = [](double t) { return std::exp(-t * t); };
    e.f.decay = DecayClass::gaussian;
    e.f.negligible_beyond = 7.0;
    e.mellin = [](cplx s) { return 0.5 * gamma_or_zero(s / 2.0); };
    e.line_T = 80.0;
    e.l2_norm_sq = std::sqrt(pi / 8.0);
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "texp";
    e.formula = "t exp(-t)";
    e.f.eval = [](double t) { return t * std::exp(-t); };
    e.f.decay = DecayClass::exponential;
    e.f.negligible_beyond = 55.0;
    e.mellin = [](cplx s) { return gamma_or_zero(s + 1.0); };
    e.line_T = 40.0;
    e.l2_norm_sq = 0.25;
    e.hartley = [](double x) {
      const double d = 1.0 + x * x;
      return kSqrt2OverPi * (1.0 + 2.0 * x - x * x) / (d * d);
    };
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "box";
    e.formula = "1 on [0,1), 0 beyond";
    e.f.eval = [](double t) { return t < 1.0 ? 1.0 : 0.0; };
    e.f.decay = DecayClass::compact;
    e.f.support_end = 1.0;
    e.f.breakpoints = {1.0};
    e.mellin = [](cplx s) { return 1.0 / s; };
    e.line_T = 200.0;
    e.line_order = 1;
    e.l2_norm_sq = 1.0;
    e.hartley = [](double x) {
      // 1 - cos x = 2 sin^2(x/2) avoids cancellation at small x.
      const double h = std::sin(x / 2.0);
      return kSqrt2OverPi * (std::sin(x) + 2.0 * h * h) / x;
    };
    e.smooth = false;
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "lorentz";
    e.formula = "1/(1+t^2)";
    e.f.eval = [](double t) { return 1.0 / (1.0 + t * t); };
    e.f.decay = DecayClass::polynomial;
    e.f.decay_order = 2.0;
    e.mellin = [](cplx s) {
      if (std::abs(s.imag()) > 2.0 * special::kMaxImag) return cplx{};
      return std::exp(std::log(pi / 2.0) - special::log_sin(pi * s / 2.0));
    };
    e.line_T = 40.0;
    e.l2_norm_sq = pi / 4.0;
    e.hartley = [](double x) { return kSqrt2OverPi * (pi / 2.0 * std::exp(-x) + lorentz_sine(x)); };
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "zero";
    e.formula = "0";
    e.f = zero_function();
    e.mellin = [](cplx) { return cplx{}; };
    e.line_T = 40.0;
    e.l2_norm_sq = 0.0;
    e.hartley = [](double) { return 0.0; };
    c.push_back(e);
  }
  return c;
}

}  // namespace

MellinLineFunction CatalogEntry::mellin_line(std::size_t n) const {
  auto fn = mellin;
  return MellinLineFunction::from_evaluator([fn](double tau) { return fn(cplx(0.5, tau)); }, line_T, line_order,
                                            false, n);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw DomainError("unknown catalog function '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  return names;
}

}  // namespace hht
