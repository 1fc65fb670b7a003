#include "hht/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "hht/errors.hpp"

namespace hht::quad {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUnderflow = std::numeric_limits<double>::min();

// Kronrod abscissae and weights (QUADPACK qk15); odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Rule {
  T value{};
  double err = 0.0;
  double resabs = 0.0;
};

template <class T>
void check_finite(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    if (!std::isfinite(v)) throw NumericalError("integrand returned a non-finite value");
  } else {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalError("integrand returned a non-finite value");
    }
  }
}

template <class T, class F>
Rule<T> gauss_kronrod15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  std::array<T, 7> fv1{}, fv2{};
  const T fc = f(center);
  check_finite(fc);
  T resg = fc * kWg[3];
  T resk = fc * kWgk[7];
  double resabs = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double dx = half * kXgk[jtw];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    check_finite(f1);
    check_finite(f2);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jtw] * (f1 + f2);
    resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double dx = half * kXgk[jtwm1];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    check_finite(f1);
    check_finite(f2);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += kWgk[jtwm1] * (f1 + f2);
    resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }
  const T reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  Rule<T> out;
  out.value = resk * half;
  resabs *= abs_half;
  resasc *= abs_half;
  double abserr = std::abs((resk - resg) * half);
  if (resasc != 0.0 && abserr != 0.0) abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  if (resabs > kUnderflow / (50.0 * kEps)) abserr = std::max(kEps * 50.0 * resabs, abserr);
  out.err = abserr;
  out.resabs = resabs;
  return out;
}

template <class T>
struct Segment {
  double a, b;
  Rule<T> rule;
  bool operator<(const Segment& o) const { return rule.err < o.rule.err; }
};

// Segments narrower than this (relative to their position) are not split:
// Kronrod nodes inside would round onto the endpoints.
constexpr double kMinRelWidth = 1024.0 * kEps;

bool too_narrow(double a, double b) { return std::abs(b - a) <= kMinRelWidth * std::max(std::abs(a), std::abs(b)); }

std::vector<double> graded_points(std::span<const double> points, Singularity sing) {
  std::vector<double> pts(points.begin(), points.end());
  auto grade = [](double from, double to) {
    // from is the singular end
    std::vector<double> g;
    double prev = to;
    for (int k = 1; k <= 60; ++k) {
      const double p = from + (to - from) * std::pow(0.25, k);
      if (p == from || p == prev || too_narrow(from, p)) break;
      g.push_back(p);
      prev = p;
    }
    return g;
  };
  if (pts.size() >= 2 && (sing == Singularity::left || sing == Singularity::both)) {
    auto g = grade(pts[0], pts[1]);
    pts.insert(pts.end(), g.begin(), g.end());
  }
  if (points.size() >= 2 && (sing == Singularity::right || sing == Singularity::both)) {
    auto g = grade(points[points.size() - 1], points[points.size() - 2]);
    pts.insert(pts.end(), g.begin(), g.end());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

template <class T, class F>
Estimate<T> adaptive_core(const F& f, std::span<const double> points, const QuadratureConfig& cfg, Singularity sing) {
  Estimate<T> out;
  if (points.size() < 2) return out;
  for (double p : points) {
    if (!std::isfinite(p)) throw DomainError("quadrature: interval endpoints must be finite");
  }
  const std::vector<double> pts = graded_points(points, sing);

  std::priority_queue<Segment<T>> heap;
  std::vector<Segment<T>> frozen;
  double total_err = 0.0;
  double total_resabs = 0.0;
  T total{};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Segment<T> seg{pts[i], pts[i + 1], gauss_kronrod15<T>(f, pts[i], pts[i + 1])};
    out.evaluations += 15;
    total += seg.rule.value;
    total_err += seg.rule.err;
    total_resabs += seg.rule.resabs;
    heap.push(seg);
  }
  const long limit = static_cast<long>(pts.size()) + cfg.max_subdivisions;
  long nseg = static_cast<long>(pts.size()) - 1;
  bool converged = false;
  // Error parked in segments too narrow to split. It is the resolution floor
  // near a singular endpoint away from 0; accepted while small against the
  // integral of |f|, which a non-integrable singularity is not.
  double frozen_err = 0.0;
  while (true) {
    const double tol = std::max({cfg.abs_tol, cfg.rel_tol * std::abs(total), 50.0 * kEps * total_resabs});
    if (total_err - frozen_err <= tol) {
      converged = frozen_err <= 1e-6 * (1.0 + total_resabs);
      break;
    }
    if (nseg >= limit || heap.empty()) break;
    Segment<T> seg = heap.top();
    heap.pop();
    const double mid = 0.5 * (seg.a + seg.b);
    if (!(mid > seg.a && mid < seg.b) || too_narrow(seg.a, seg.b)) {
      frozen_err += seg.rule.err;
      frozen.push_back(seg);
      continue;
    }
    Segment<T> left{seg.a, mid, gauss_kronrod15<T>(f, seg.a, mid)};
    Segment<T> right{mid, seg.b, gauss_kronrod15<T>(f, mid, seg.b)};
    out.evaluations += 30;
    total += left.rule.value + right.rule.value - seg.rule.value;
    total_err += left.rule.err + right.rule.err - seg.rule.err;
    total_resabs += left.rule.resabs + right.rule.resabs - seg.rule.resabs;
    heap.push(left);
    heap.push(right);
    ++nseg;
  }
  // Re-sum to remove drift from the incremental updates.
  T sum{};
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().rule.value;
    err += heap.top().rule.err;
    heap.pop();
  }
  for (const auto& s : frozen) {
    sum += s.rule.value;
    err += s.rule.err;
  }
  out.value = sum;
  out.err_est = err;
  out.converged = converged;
  return out;
}

template <class T, class F>
Estimate<T> adaptive_interval(const F& f, double a, double b, const QuadratureConfig& cfg, Singularity sing) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate_adaptive: endpoints must be finite");
  if (a == b) return {};
  if (a > b) {
    Singularity flipped = sing;
    if (sing == Singularity::left) flipped = Singularity::right;
    if (sing == Singularity::right) flipped = Singularity::left;
    auto r = adaptive_interval<T>(f, b, a, cfg, flipped);
    r.value = -r.value;
    return r;
  }
  const std::array<double, 2> pts{a, b};
  auto r = adaptive_core<T>(f, std::span<const double>(pts), cfg, sing);
  if (!r.converged) {
    throw NumericalError("integrate_adaptive: no convergence after " + std::to_string(cfg.max_subdivisions) +
                         " subdivisions (err_est " + std::to_string(r.err_est) + ")");
  }
  return r;
}

template <class T, class F>
Estimate<T> semi_infinite(const F& f, double a, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: a must be finite");
  auto g = [&](double v) -> T {
    const double t = a + (1.0 - v) / v;
    const T fv = f(t);
    if (fv == T{}) return T{};
    return fv / (v * v);
  };
  const std::array<double, 2> pts{0.0, 1.0};
  auto r = adaptive_core<T>(g, std::span<const double>(pts), cfg, Singularity::left);
  if (!r.converged) throw NumericalError("integrate_semi_infinite: no convergence");
  return r;
}

std::vector<double> oscillation_points(double a, double b, double omega, std::span<const double> breaks) {
  std::vector<double> pts{a, b};
  if (omega > 0.0) {
    const double h = std::numbers::pi / omega;
    const double n = std::ceil((b - a) / h);
    if (n > 5e6) throw NumericalError("oscillatory span: too many half periods");
    for (long k = 1; k < static_cast<long>(n); ++k) pts.push_back(a + k * h);
  }
  for (double p : breaks) {
    if (p > a && p < b) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

template <class T, class F>
Estimate<T> oscillatory_span(const F& f, double a, double b, double omega, const QuadratureConfig& cfg,
                             std::span<const double> breaks) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("oscillatory span: endpoints must be finite");
  if (a >= b) return {};
  const auto pts = oscillation_points(a, b, omega, breaks);
  auto r = adaptive_core<T>(f, std::span<const double>(pts), cfg, Singularity::none);
  if (!r.converged) throw NumericalError("oscillatory span: no convergence");
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("QuadratureConfig: tolerances must be > 0");
  if (max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
  if (tail_periods_min < 1 || acceleration_order < 1 || max_tail_periods < 1) {
    throw DomainError("QuadratureConfig: tail parameters must be >= 1");
  }
  if (!(contour_truncation_T > 0.0)) throw DomainError("QuadratureConfig: contour_truncation_T must be > 0");
}

QuadratureConfig QuadratureConfig::tightened(double factor) const {
  QuadratureConfig c = *this;
  c.abs_tol = std::max(abs_tol * factor, 1e-300);
  c.rel_tol = std::max(rel_tol * factor, 1e-15);
  return c;
}

Estimate<double> integrate_adaptive(const RealFn& f, double a, double b, const QuadratureConfig& cfg,
                                    Singularity sing) {
  return adaptive_interval<double>(f, a, b, cfg, sing);
}

Estimate<cplx> integrate_adaptive_complex(const ComplexFn& f, double a, double b, const QuadratureConfig& cfg,
                                          Singularity sing) {
  return adaptive_interval<cplx>(f, a, b, cfg, sing);
}

Estimate<double> integrate_points(const RealFn& f, std::span<const double> points, const QuadratureConfig& cfg,
                                  Singularity sing) {
  cfg.validate();
  return adaptive_core<double>(f, points, cfg, sing);
}

Estimate<cplx> integrate_points_complex(const ComplexFn& f, std::span<const double> points,
                                        const QuadratureConfig& cfg, Singularity sing) {
  cfg.validate();
  return adaptive_core<cplx>(f, points, cfg, sing);
}

Estimate<double> integrate_semi_infinite(const RealFn& f, double a, const QuadratureConfig& cfg) {
  return semi_infinite<double>(f, a, cfg);
}

Estimate<cplx> integrate_semi_infinite_complex(const ComplexFn& f, double a, const QuadratureConfig& cfg) {
  return semi_infinite<cplx>(f, a, cfg);
}

Estimate<double> integrate_oscillatory_span(const RealFn& f, double a, double b, double omega,
                                            const QuadratureConfig& cfg, std::span<const double> breaks) {
  return oscillatory_span<double>(f, a, b, omega, cfg, breaks);
}

Estimate<cplx> integrate_oscillatory_span_complex(const ComplexFn& f, double a, double b, double omega,
                                                  const QuadratureConfig& cfg, std::span<const double> breaks) {
  return oscillatory_span<cplx>(f, a, b, omega, cfg, breaks);
}

double levin_u(std::span<const double> partial_sums, std::span<const double> terms, long first_index) {
  const int k = static_cast<int>(partial_sums.size()) - 1;
  if (k < 0 || terms.size() != partial_sums.size()) return std::numeric_limits<double>::quiet_NaN();
  constexpr double beta = 1.0;
  const double n = static_cast<double>(first_index);
  double num = 0.0, den = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double remainder = (n + j + beta) * terms[j];
    if (remainder == 0.0 || !std::isfinite(remainder)) return std::numeric_limits<double>::quiet_NaN();
    double c = binomial(k, j) * std::pow((n + j + beta) / (n + k + beta), k - 1);
    if (j % 2 == 1) c = -c;
    num += c * partial_sums[j] / remainder;
    den += c / remainder;
  }
  return num / den;
}

Estimate<double> integrate_oscillatory_tail(const RealFn& f, double a, double omega, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("oscillatory tail: omega must be > 0");
  if (!std::isfinite(a)) throw DomainError("oscillatory tail: a must be finite");
  const double h = std::numbers::pi / omega;
  const QuadratureConfig piece_cfg = cfg.tightened(1e-2);
  const int m = cfg.acceleration_order;

  std::vector<double> terms, sums;
  double sum = 0.0;
  double piece_err = 0.0;
  long evaluations = 0;
  double prev_levin = std::numeric_limits<double>::quiet_NaN();
  int agreeing = 0;
  for (int k = 0; k < cfg.max_tail_periods; ++k) {
    const std::array<double, 2> pts{a + k * h, a + (k + 1) * h};
    const auto piece = adaptive_core<double>(f, std::span<const double>(pts), piece_cfg, Singularity::none);
    evaluations += piece.evaluations;
    piece_err += piece.err_est;
    sum += piece.value;
    terms.push_back(piece.value);
    sums.push_back(sum);

    const auto n = static_cast<long>(terms.size());
    if (n < cfg.tail_periods_min || n < 2) continue;
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(sum));
    const double last_two = std::abs(terms[n - 1]) + std::abs(terms[n - 2]);
    if (last_two <= 1e-3 * tol) {
      return {sum, piece_err + last_two, evaluations, true};
    }
    if (n >= m + 1) {
      const long first = n - 1 - m;
      const double levin = levin_u(std::span<const double>(sums).subspan(first, m + 1),
                                   std::span<const double>(terms).subspan(first, m + 1), first);
      // Levin u also sums some divergent alternating series; only accept
      // it once the half-period terms are shrinking across the window.
      const bool shrinking = std::abs(terms[n - 1]) < std::abs(terms[first]);
      if (!shrinking) {
        agreeing = 0;
      } else if (std::isfinite(levin) && std::isfinite(prev_levin)) {
        const double diff = std::abs(levin - prev_levin);
        agreeing = (diff <= tol) ? agreeing + 1 : 0;
        if (agreeing >= 2) return {levin, piece_err + diff, evaluations, true};
      }
      prev_levin = levin;
    }
  }
  throw NumericalError("oscillatory tail: no convergence within " + std::to_string(cfg.max_tail_periods) +
                       " half periods (envelope not decaying?)");
}

Estimate<cplx> integrate_critical_line(const ComplexFn& g, const QuadratureConfig& cfg) {
  cfg.validate();
  const double T = cfg.contour_truncation_T;
  const int pieces = std::max(2, static_cast<int>(std::ceil(2.0 * T)));
  std::vector<double> pts;
  for (int i = 0; i <= pieces; ++i) pts.push_back(-T + 2.0 * T * i / pieces);
  auto r = adaptive_core<cplx>(g, std::span<const double>(pts), cfg, Singularity::none);
  if (!r.converged) throw NumericalError("integrate_critical_line: no convergence");
  const double two_pi = 2.0 * std::numbers::pi;
  const double trunc = (std::abs(g(T)) + std::abs(g(-T))) * std::max(1.0, T) / two_pi;
  r.value /= two_pi;
  r.err_est = r.err_est / two_pi + trunc;
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value));
  if (trunc > tol) {
    throw NumericalError("integrate_critical_line: truncation error estimate " + std::to_string(trunc) +
                         " exceeds tolerance at T = " + std::to_string(T));
  }
  return r;
}

Estimate<cplx> integrate_line(const ComplexFn& g, double T, int algebraic_order, double omega,
                              const QuadratureConfig& cfg) {
  QuadratureConfig central = cfg;
  central.contour_truncation_T = T;
  if (algebraic_order <= 0) return integrate_critical_line(g, central);

  cfg.validate();
  const double piece = omega > 0.0 ? std::min(1.0, std::numbers::pi / omega) : 1.0;
  const int pieces = std::max(2, static_cast<int>(std::ceil(2.0 * T / piece)));
  std::vector<double> pts;
  for (int i = 0; i <= pieces; ++i) pts.push_back(-T + 2.0 * T * i / pieces);
  auto mid = adaptive_core<cplx>(g, std::span<const double>(pts), cfg, Singularity::none);
  if (!mid.converged) throw NumericalError("integrate_line: no convergence on [-T, T]");

  cplx tails{};
  double tail_err = 0.0;
  long evals = mid.evaluations;
  auto reflected = [&](double t) { return g(-t); };
  if (omega <= 0.0) {
    // Fold the two sides so odd parts cancel before integration.
    auto folded = [&](double t) { return g(t) + g(-t); };
    const auto both = semi_infinite<cplx>(folded, T, cfg);
    tails = both.value;
    tail_err = both.err_est;
    evals += both.evaluations;
  } else {
    const std::array<ComplexFn, 2> sides{g, reflected};
    for (const auto& side : sides) {
      const auto re = integrate_oscillatory_tail([&](double t) { return side(t).real(); }, T, omega, cfg);
      const auto im = integrate_oscillatory_tail([&](double t) { return side(t).imag(); }, T, omega, cfg);
      tails += cplx(re.value, im.value);
      tail_err += re.err_est + im.err_est;
      evals += re.evaluations + im.evaluations;
    }
  }
  const double two_pi = 2.0 * std::numbers::pi;
  return {(mid.value + tails) / two_pi, (mid.err_est + tail_err) / two_pi, evals, true};
}

}  // namespace hht::quad
