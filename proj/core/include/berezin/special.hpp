#pragma once

// Gamma/Beta machinery, generalized binomial coefficients, and the
// normalizing constant c_alpha = Gamma(alpha+n+1) / (Gamma(alpha+1) pi^n)
// of the weighted probability measure dv_alpha on the unit ball of C^n.

namespace berezin {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// B(a,b) = exp(log_gamma(a) + log_gamma(b) - log_gamma(a+b)), a, b > 0.
double beta(double a, double b);

// Generalized binomial coefficient binom(x, k) = prod_{i=1..k} (x-k+i)/i,
// the k-th Taylor coefficient of (1-z)^{-(x-k+1)} family; the empty product
// is 1. Computed as the k-fold product so that nonpositive factors give
// exact zeros (binom(k-1, k) = 0 for k >= 1).
double gen_binomial(double x, int k);

// Dimension, weight exponent, and the cached normalizer c_alpha.
// Immutable after construction via make_context().
struct WeightContext {
  int n = 1;
  double alpha = 0.0;
  double c_alpha = 0.0;
};

// Requires n >= 1 and alpha > -1.
WeightContext make_context(int n, double alpha);

}  // namespace berezin
