#pragma once

// Closed-form side of the seminorm bounds: the term sequences a_k, a_{j,k},
// b_k, b_{j,k} with their turning indices, the bound-function series for the
// holomorphic- and real-gradient cases, the Parseval expansion of the double
// angular integral, sharp constants, strict upper bounds, and the
// classification of (n, alpha) into the three boundedness regimes.

#include <optional>

#include "berezin/special.hpp"

namespace berezin {

// Truncated series value; tail_bound < 1e-12 * max(1, |value|) at return.
struct SeriesValue {
  double value = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;
};

// Which gradient seminorm is being bounded.
enum class Case { complex_gradient, real_gradient };

enum class Regime { unbounded, sharp, bounded_strict };

struct RegimeReport {
  int n = 1;
  double alpha = 0.0;
  Case gradient_case = Case::complex_gradient;
  Regime regime = Regime::sharp;
  double constant_or_bound = 0.0;        // +infinity in the unbounded regime
  std::optional<int> turning_index;      // present iff regime == bounded_strict
};

// a_k = binom(alpha+k-1, k) Gamma(k+3/2) / Gamma(k+alpha+n+3/2).
// Monotone decreasing for alpha <= 2n+3; otherwise single-peaked at k_alpha.
double a_seq(const WeightContext& ctx, int k);

// k_alpha = ceil((alpha - (2n+3)) / (2n+2)) for alpha > 2n+3, else 0;
// the argmax of a_seq.
int k_alpha(const WeightContext& ctx);

// a_{j,k} = binom(k,j) Gamma(k-j+1) Gamma(j+3/2) = k! Gamma(j+3/2) / j!,
// strictly increasing in j for fixed k.
double a_jk(int k, int j);

// b_k = binom(2alpha+2k-1, 2k) binom(alpha+k-1, k)^-1 k! / Gamma(k+alpha+n+3/2).
// Throws a degenerate-weight error when the inverse binomial vanishes
// (alpha = 0, k >= 1).
double b_seq(const WeightContext& ctx, int k);

// k'_alpha = ceil(alpha/(2n+1) - 1/2) for alpha > n+1/2, else 0;
// the argmax of b_seq.
int k_prime_alpha(const WeightContext& ctx);

// b_{j,k} = binom(2k,2j)/binom(k,j) Gamma(k-j+1) Gamma(j+1/2),
// decreasing in j with exact ratio b_{j+1,k}/b_{j,k} = (2k-2j-1)/(2k-2j).
double b_jk(int k, int j);

// The holomorphic-case bound curve
//   (1-r^2)^alpha (n+1) Gamma(n+alpha+1)
//     * sum_k binom(alpha+k-1,k)^2 Gamma(k+3/2)/Gamma(k+alpha+n+3/2) r^(2k),
// equal at r=0 to sharp_constant_complex. Requires 0 <= r < 1, alpha >= 0.
SeriesValue bound_function_complex(const WeightContext& ctx, double r);

// Truncated Parseval expansion of double_angle_integral:
//   4 pi^2 sum_{k<=k_max} binom(alpha+k-1,k)^2
//       sum_j binom(k,j)^2 (c1 rho1)^(2j) (c2 rho2)^(2k-2j).
double parseval_series(double rho1, double rho2, double c1, double c2, double alpha, int k_max);

// The real-case double series scaled by pi^(n-1) Gamma(alpha+1):
//   sum_k binom(2k+2alpha-1,2k) r^(2k) / Gamma(alpha+n+k+3/2)
//       sum_j binom(2k,2j) Gamma(k-j+1) Gamma(j+1/2) nu1^(2k-2j) nu2^(2j),
// the value of Int_{B_2n} |mu_1| (1-|mu|^2)^alpha (1 - r mu_1 nu1 - r mu_2 nu2)^(-2 alpha) dv.
// Requires 0 <= r < 1, alpha >= 0, nu1^2 + nu2^2 = 1 (to 1e-12).
SeriesValue bound_function_real(const WeightContext& ctx, double r, double nu1, double nu2);

// Majorant of bound_function_real with the inner sum replaced by
// k! Gamma(1/2); equals the exact series at (nu1, nu2) = (1, 0).
SeriesValue bound_function_real_majorant(const WeightContext& ctx, double r);

// (n+1)/2 B(n+alpha+1, 1/2); the seminorm for 0 <= alpha <= 2n+3.
double sharp_constant_complex(const WeightContext& ctx);

// (2/pi)(n+1) B(alpha+n+1, 1/2); the seminorm for 0 <= alpha <= n+1/2.
double sharp_constant_real(const WeightContext& ctx);

// Strict bound (n+1) Gamma(n+alpha+1) binom(alpha+k_a-1, k_a)
//   Gamma(k_a+3/2)/Gamma(k_a+alpha+n+3/2) for alpha > 2n+3.
double upper_bound_complex(const WeightContext& ctx);

// Strict bound (2/sqrt(pi))(n+1) binom(2k'+2alpha-1, 2k') binom(k'+alpha-1, k')^-1
//   k'! Gamma(alpha+n+1)/Gamma(k'+alpha+n+3/2) for alpha > n+1/2.
double upper_bound_real(const WeightContext& ctx);

// Regime classification with the applicable constant or bound attached.
RegimeReport classify(int n, double alpha, Case gradient_case);

}  // namespace berezin
