#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hht/mellin.hpp"

namespace hht::csv {

// Two frozen layouts, each with a mandatory header line:
//   x,value       samples of a function on a strictly increasing positive grid
//   tau,re,im     values on the critical line
struct Samples {
  std::vector<double> x;
  std::vector<double> value;
};

// Throw InputError on a missing header, bad numbers, no rows, or a grid that
// is not strictly increasing and positive.
Samples read_samples(std::istream& in);
Samples read_samples_file(const std::string& path);
MellinLineFunction read_line(std::istream& in);

// Numbers are written with %.17g, so files round-trip exactly.
void write_samples(std::ostream& out, std::span<const double> x, std::span<const double> value);
void write_line(std::ostream& out, const MellinLineFunction& F);

std::string format_double(double v);

}  // namespace hht::csv
