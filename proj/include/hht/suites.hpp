#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hht/grid_kernels.hpp"
#include "hht/mellin.hpp"
#include "hht/quadrature.hpp"
#include "hht/report.hpp"

namespace hht {

struct SuiteOptions {
  quad::QuadratureConfig cfg;
  // Multiplies every case tolerance.
  double tol_scale = 1.0;
  Execution ex = Execution::parallel;
};

// inversion, norms, multiplier, parseval, factorization, operator-identity,
// homogeneous, special-kernels; "all" runs each in that order.
std::vector<std::string> suite_names();

// Throws DomainError for an unknown suite; NumericalError propagates.
VerificationReport run_suite(std::string_view name, const SuiteOptions& opt);

// Test functions phi on the line for the homogeneous equation: "gaussian"
// e^{-tau^2} and "sech" sech(tau), both even.
MellinLineFunction test_phi(std::string_view name);

nlohmann::json to_json(const quad::QuadratureConfig& cfg);

}  // namespace hht
