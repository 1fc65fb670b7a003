#include "hht/functions.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_spline.h>

#include <algorithm>
#include <cmath>

#include "hht/errors.hpp"

namespace hht {

DecayClass parse_decay_class(std::string_view name) {
  if (name == "compact") return DecayClass::compact;
  if (name == "exponential") return DecayClass::exponential;
  if (name == "gaussian") return DecayClass::gaussian;
  if (name == "polynomial") return DecayClass::polynomial;
  throw DomainError("unknown decay class '" + std::string(name) + "'");
}

std::string to_string(DecayClass d) {
  switch (d) {
    case DecayClass::compact: return "compact";
    case DecayClass::exponential: return "exponential";
    case DecayClass::gaussian: return "gaussian";
    case DecayClass::polynomial: return "polynomial";
  }
  return "unknown";
}

double HalfLineFunction::effective_end() const { return std::min(support_end, negligible_beyond); }

HalfLineFunction zero_function() {
  HalfLineFunction z;
  z.eval = [](double) { return 0.0; };
  z.decay = DecayClass::compact;
  z.support_end = 0.0;
  z.identically_zero = true;
  return z;
}

struct SampledFunction::Spline {
  gsl_spline* spline = nullptr;
  Spline(const std::vector<double>& x, const std::vector<double>& y) {
    const gsl_interp_type* type = x.size() >= 3 ? gsl_interp_cspline : gsl_interp_linear;
    spline = gsl_spline_alloc(type, x.size());
    if (!spline) throw NumericalError("SampledFunction: spline allocation failed");
    if (gsl_spline_init(spline, x.data(), y.data(), x.size()) != GSL_SUCCESS) {
      gsl_spline_free(spline);
      throw NumericalError("SampledFunction: spline construction failed");
    }
  }
  ~Spline() { gsl_spline_free(spline); }
  Spline(const Spline&) = delete;
  Spline& operator=(const Spline&) = delete;

  double operator()(double t) const {
    double y = 0.0;
    // A null accelerator keeps evaluation free of shared mutable state.
    gsl_spline_eval_e(spline, t, nullptr, &y);
    return y;
  }
};

namespace {

// Least-squares slope and intercept of log|v| against u.
std::pair<double, double> log_fit(const std::vector<double>& u, const std::vector<double>& v) {
  const double n = static_cast<double>(u.size());
  double su = 0, sv = 0, suu = 0, suv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double lv = std::log(std::abs(v[i]));
    su += u[i];
    sv += lv;
    suu += u[i] * u[i];
    suv += u[i] * lv;
  }
  const double den = n * suu - su * su;
  if (den == 0.0) return {0.0, sv / n};
  const double slope = (n * suv - su * sv) / den;
  return {slope, (sv - slope * su) / n};
}

}  // namespace

SampledFunction::SampledFunction(std::vector<double> grid, std::vector<double> values, DecayClass decay)
    : grid_(std::move(grid)), values_(std::move(values)), decay_(decay) {
  if (grid_.size() < 2) throw DomainError("SampledFunction: need at least two samples");
  if (grid_.size() != values_.size()) throw DomainError("SampledFunction: grid and values differ in length");
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!std::isfinite(grid_[i]) || !std::isfinite(values_[i])) {
      throw DomainError("SampledFunction: non-finite sample");
    }
    if (grid_[i] <= 0.0) throw DomainError("SampledFunction: grid must be positive");
    if (i > 0 && !(grid_[i] > grid_[i - 1])) throw DomainError("SampledFunction: grid must be strictly increasing");
  }
  gsl_set_error_handler_off();
  spline_ = std::make_shared<const Spline>(grid_, values_);

  const double t0 = grid_[0], t1 = grid_[1];
  const double v0 = values_[0], v1 = values_[1];
  if (t0 < t1 - t0) {
    lower_linear_ = true;
    lower_q_ = std::nan("");
  } else if (v0 != 0.0 && v1 != 0.0 && (v0 > 0) == (v1 > 0)) {
    lower_q_ = std::log(v1 / v0) / std::log(t1 / t0);
    lower_c_ = v0 / std::pow(t0, lower_q_);
  } else {
    lower_q_ = 0.0;
    lower_c_ = v0;
  }

  const std::size_t n = grid_.size();
  const double tn = grid_[n - 1], vn = values_[n - 1];
  switch (decay_) {
    case DecayClass::compact:
      upper_zero_ = true;
      break;
    case DecayClass::exponential:
    case DecayClass::gaussian: {
      std::vector<double> u, v;
      for (std::size_t i = 0; i < n; ++i) {
        if (grid_[i] >= tn / 10.0 && values_[i] != 0.0 && (values_[i] > 0) == (vn > 0)) {
          const double t = grid_[i];
          u.push_back(decay_ == DecayClass::gaussian ? t * t : t);
          v.push_back(values_[i]);
        }
      }
      if (vn == 0.0 || u.size() < 2) {
        upper_zero_ = true;
        break;
      }
      const double slope = log_fit(u, v).first;
      if (!(slope < 0.0)) throw DomainError("SampledFunction: samples do not decay at the end of the grid");
      upper_rate_ = -slope;
      upper_c_ = vn;
      break;
    }
    case DecayClass::polynomial: {
      const double tm = grid_[n - 2], vm = values_[n - 2];
      if (vn == 0.0) {
        upper_zero_ = true;
        break;
      }
      if (vm == 0.0 || (vm > 0) != (vn > 0)) throw DomainError("SampledFunction: cannot fit a power-law tail");
      upper_p_ = -std::log(vn / vm) / std::log(tn / tm);
      if (!(upper_p_ > 0.0)) throw DomainError("SampledFunction: samples do not decay at the end of the grid");
      upper_c_ = vn;
      break;
    }
  }
}

double SampledFunction::operator()(double t) const {
  const double t0 = grid_.front(), tn = grid_.back();
  if (t < t0) {
    if (lower_linear_) return values_[0] + (values_[1] - values_[0]) / (grid_[1] - t0) * (t - t0);
    if (t <= 0.0) return lower_q_ == 0.0 ? lower_c_ : 0.0;
    return lower_c_ * std::pow(t, lower_q_);
  }
  if (t > tn) {
    if (upper_zero_) return 0.0;
    switch (decay_) {
      case DecayClass::exponential: return upper_c_ * std::exp(-upper_rate_ * (t - tn));
      case DecayClass::gaussian: return upper_c_ * std::exp(-upper_rate_ * (t * t - tn * tn));
      case DecayClass::polynomial: return upper_c_ * std::pow(t / tn, -upper_p_);
      case DecayClass::compact: return 0.0;
    }
  }
  return (*spline_)(t);
}

HalfLineFunction SampledFunction::as_function() const {
  HalfLineFunction h;
  auto self = std::make_shared<const SampledFunction>(*this);
  h.eval = [self](double t) { return (*self)(t); };
  h.decay = decay_;
  h.breakpoints = {grid_.front(), grid_.back()};
  h.rough_at_zero = !lower_linear_;
  const double vmax = std::abs(*std::max_element(values_.begin(), values_.end(),
                                                 [](double a, double b) { return std::abs(a) < std::abs(b); }));
  const double tn = grid_.back();
  if (upper_zero_) {
    h.support_end = tn;
  } else if (decay_ == DecayClass::exponential || decay_ == DecayClass::gaussian) {
    const double drop = std::log(std::abs(upper_c_) / (1e-20 * vmax));
    if (drop <= 0.0) {
      h.negligible_beyond = tn;
    } else if (decay_ == DecayClass::exponential) {
      h.negligible_beyond = tn + drop / upper_rate_;
    } else {
      h.negligible_beyond = std::sqrt(tn * tn + drop / upper_rate_);
    }
  } else if (decay_ == DecayClass::polynomial) {
    h.decay_order = upper_p_;
  }
  if (std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; })) {
    h.identically_zero = true;
  }
  return h;
}

std::vector<double> linear_grid(double a, double b, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {a};
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = b;
  return g;
}

std::vector<double> geometric_grid(double a, double b, std::size_t n) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("geometric_grid: endpoints must be positive");
  if (n == 0) return {};
  if (n == 1) return {a};
  std::vector<double> g(n);
  const double la = std::log(a), lb = std::log(b);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  g.front() = a;
  g.back() = b;
  return g;
}

std::vector<double> decade_grid(double a, double b, int per_decade) {
  const double decades = std::log10(b / a);
  const auto n = static_cast<std::size_t>(std::llround(decades * per_decade)) + 1;
  return geometric_grid(a, b, n);
}

}  // namespace hht
