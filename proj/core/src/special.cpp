#include "berezin/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace berezin {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: requires x > 0");
  return std::lgamma(x);
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta: requires a, b > 0");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double gen_binomial(double x, int k) {
  if (k < 0) throw std::invalid_argument("gen_binomial: requires k >= 0");
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v *= (x - k + i) / i;
  return v;
}

WeightContext make_context(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("make_context: requires n >= 1");
  if (!(alpha > -1.0)) throw std::invalid_argument("make_context: requires alpha > -1");
  WeightContext ctx;
  ctx.n = n;
  ctx.alpha = alpha;
  ctx.c_alpha = std::exp(log_gamma(alpha + n + 1) - log_gamma(alpha + 1) -
                         n * std::log(std::numbers::pi));
  return ctx;
}

}  // namespace berezin
