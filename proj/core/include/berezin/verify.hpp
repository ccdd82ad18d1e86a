#pragma once

// Named verification suites driven by the CLI and the acceptance tests.
// Each suite returns per-check values, references and sigma distances.

#include <cstdint>

#include "berezin/quadrature.hpp"
#include "berezin/report.hpp"
#include "berezin/series.hpp"

namespace berezin {

// Mobius identities and involution residuals on seeded pairs, kernel
// gradients against central finite differences, the change-of-variables
// consistency of the Jacobian, and the reproducing property at alpha = 0.
SuiteReport run_identity_suite(std::uint64_t seed);

// Sharpness of the closed-form constant for the chosen case: attainment
// at z = 0, a 20-symbol competitor catalog, and the extremal z-grid.
SuiteReport run_sharp_suite(Case gradient_case, int n, double alpha, const QuadratureConfig& cfg);

// Series-side checks for one (n, alpha): term-sequence monotonicity and
// turning indices, ratio identities, the series-integral agreement on an
// r-grid, the vanishing limit at r -> 1, and the scan argmax location.
SuiteReport run_series_suite(int n, double alpha, const QuadratureConfig& cfg);

// parseval_series vs double_angle_integral on five parameter sets.
SuiteReport run_parseval_suite();

// Quarter-disc Beta moments (deterministic 2-D quadrature) and real-ball
// moments (Monte-Carlo) against their closed forms.
SuiteReport run_moment_suite(const QuadratureConfig& cfg);

// Growth table of the oracle bound curve for -1 < alpha < 0.
SuiteReport run_unbounded_suite(int n, double alpha, const QuadratureConfig& cfg);

}  // namespace berezin
