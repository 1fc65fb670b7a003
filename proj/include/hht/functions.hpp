#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hht {

enum class DecayClass { compact, exponential, gaussian, polynomial };

DecayClass parse_decay_class(std::string_view name);
std::string to_string(DecayClass d);

// A real function on (0, inf) together with the metadata the integration
// engines need to pick a strategy.
struct HalfLineFunction {
  std::function<double(double)> eval;
  DecayClass decay = DecayClass::exponential;
  // f vanishes identically beyond this point.
  double support_end = std::numeric_limits<double>::infinity();
  // |f| is below double resolution of anything it is added to beyond this.
  double negligible_beyond = std::numeric_limits<double>::infinity();
  // For polynomial decay, f(t) ~ c t^{-decay_order}.
  double decay_order = 0.0;
  // Discontinuities or kinks, sorted.
  std::vector<double> breakpoints;
  // f has an integrable singularity or a fractional power at t = 0.
  bool rough_at_zero = false;
  // Zero function; lets callers short-circuit.
  bool identically_zero = false;

  double operator()(double t) const { return eval(t); }
  // Right end of the region that needs explicit quadrature: support end,
  // negligible point, or infinity.
  double effective_end() const;
};

HalfLineFunction zero_function();

// Samples of a real function on a strictly increasing positive grid,
// interpolated by a natural cubic spline and extended outside the grid by a
// tail model chosen from the decay class. Immutable; copies share the spline.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> grid, std::vector<double> values, DecayClass decay);

  double operator()(double t) const;

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  DecayClass decay() const { return decay_; }

  // Lower tail: f(t) = c t^q below the grid, or linear when the grid
  // starts close to 0 (q reported as NaN then).
  double lower_power() const { return lower_q_; }
  // Upper tail: exponential c e^{-rate t}, or polynomial c t^{-p}.
  double upper_rate() const { return upper_rate_; }
  double upper_power() const { return upper_p_; }

  HalfLineFunction as_function() const;

 private:
  struct Spline;
  std::vector<double> grid_;
  std::vector<double> values_;
  DecayClass decay_;
  std::shared_ptr<const Spline> spline_;
  bool lower_linear_ = false;
  double lower_c_ = 0.0, lower_q_ = 0.0;
  double upper_c_ = 0.0, upper_rate_ = 0.0, upper_p_ = 0.0;
  bool upper_zero_ = false;
};

// Strictly increasing grids used throughout.
std::vector<double> linear_grid(double a, double b, std::size_t n);
std::vector<double> geometric_grid(double a, double b, std::size_t n);
// Geometric grid from a to b with the given number of points per decade.
std::vector<double> decade_grid(double a, double b, int per_decade);

}  // namespace hht
