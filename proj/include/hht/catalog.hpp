#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hht/functions.hpp"
#include "hht/mellin.hpp"

namespace hht {

// A closed-form test function with its Mellin transform and, where
// elementary, its half-Hartley transform. The catalog is frozen.
struct CatalogEntry {
  std::string name;
  std::string formula;
  HalfLineFunction f;
  std::function<cplx(cplx s)> mellin;
  // Truncation and algebraic decay order of mellin() along the critical line.
  double line_T = 40.0;
  int line_order = 0;
  std::optional<double> l2_norm_sq;
  std::function<double(double)> hartley;  // empty when no closed form
  // Continuous on (0, inf); eligible for pointwise round trips.
  bool smooth = true;

  MellinLineFunction mellin_line(std::size_t n = MellinLineFunction::kDefaultPoints) const;
};

const std::vector<CatalogEntry>& catalog();
// Throws DomainError for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);
std::vector<std::string> catalog_names();

}  // namespace hht
