#include "berezin/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace berezin {

namespace {

constexpr double kTermCutoff = 1e-15;   // term / partial-sum truncation threshold
constexpr double kTailCutoff = 1e-13;   // geometric tail / partial-sum threshold
constexpr int kMaxTerms = 5'000'000;

void require_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("bound function: requires 0 <= r < 1");
}

void require_nonneg_alpha(const WeightContext& ctx) {
  if (ctx.alpha < 0.0) {
    throw std::domain_error("bound function: series form requires alpha >= 0");
  }
}

// Sums positive log-space terms with the shared truncation contract: stop
// once the term ratio has dropped below 1 (past the peak), the term is
// below kTermCutoff of the partial sum, and the geometric tail bound is
// negligible. log_term(k) may return -inf for exact-zero terms.
template <typename LogTerm>
SeriesValue sum_series(LogTerm&& log_term) {
  SeriesValue out;
  double sum = 0.0;
  double prev = -1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double t = std::exp(log_term(k));
    sum += t;
    out.terms_used = k + 1;
    if (k > 0 && prev > 0.0) {
      const double ratio = t / prev;
      if (ratio < 1.0) {
        const double tail = t * ratio / (1.0 - ratio);
        if (t <= kTermCutoff * sum && tail <= kTailCutoff * sum) {
          out.value = sum;
          out.tail_bound = tail;
          return out;
        }
      }
    } else if (t == 0.0) {
      // Degenerate weight: every later term carries the same zero factor.
      out.value = sum;
      out.tail_bound = 0.0;
      return out;
    }
    prev = t;
  }
  throw std::runtime_error("sum_series: no convergence within the term budget");
}

}  // namespace

double a_seq(const WeightContext& ctx, int k) {
  if (k < 0) throw std::invalid_argument("a_seq: requires k >= 0");
  return gen_binomial(ctx.alpha + k - 1, k) *
         std::exp(log_gamma(k + 1.5) - log_gamma(k + ctx.alpha + ctx.n + 1.5));
}

int k_alpha(const WeightContext& ctx) {
  const double threshold = 2.0 * ctx.n + 3.0;
  if (ctx.alpha <= threshold) return 0;
  return static_cast<int>(std::ceil((ctx.alpha - threshold) / (2.0 * ctx.n + 2.0)));
}

double a_jk(int k, int j) {
  if (k < 0 || j < 0 || j > k) throw std::invalid_argument("a_jk: requires 0 <= j <= k");
  return std::exp(log_gamma(k + 1.0) + log_gamma(j + 1.5) - log_gamma(j + 1.0));
}

double b_seq(const WeightContext& ctx, int k) {
  if (k < 0) throw std::invalid_argument("b_seq: requires k >= 0");
  const double inv = gen_binomial(ctx.alpha + k - 1, k);
  if (inv == 0.0) {
    throw std::domain_error("b_seq: degenerate weight (binom(alpha+k-1,k) vanishes)");
  }
  return gen_binomial(2.0 * ctx.alpha + 2 * k - 1, 2 * k) / inv *
         std::exp(log_gamma(k + 1.0) - log_gamma(k + ctx.alpha + ctx.n + 1.5));
}

int k_prime_alpha(const WeightContext& ctx) {
  if (ctx.alpha <= ctx.n + 0.5) return 0;
  return static_cast<int>(std::ceil(ctx.alpha / (2.0 * ctx.n + 1.0) - 0.5));
}

double b_jk(int k, int j) {
  if (k < 0 || j < 0 || j > k) throw std::invalid_argument("b_jk: requires 0 <= j <= k");
  const double log_c2k2j = log_gamma(2 * k + 1.0) - log_gamma(2 * j + 1.0) - log_gamma(2 * (k - j) + 1.0);
  const double log_ckj = log_gamma(k + 1.0) - log_gamma(j + 1.0) - log_gamma(k - j + 1.0);
  return std::exp(log_c2k2j - log_ckj + log_gamma(k - j + 1.0) + log_gamma(j + 0.5));
}

SeriesValue bound_function_complex(const WeightContext& ctx, double r) {
  require_r(r);
  require_nonneg_alpha(ctx);
  const double lr2 = r > 0.0 ? 2.0 * std::log(r) : -std::numeric_limits<double>::infinity();

  double log_binom = 0.0;  // ln binom(alpha+k-1, k), updated incrementally
  auto log_term = [&, first = true](int k) mutable {
    if (!first) {
      const double num = ctx.alpha + k - 1;
      log_binom += (num > 0.0 ? std::log(num) : -std::numeric_limits<double>::infinity()) -
                   std::log(static_cast<double>(k));
    }
    first = false;
    const double lg = log_gamma(k + 1.5) - log_gamma(k + ctx.alpha + ctx.n + 1.5);
    return 2.0 * log_binom + lg + (k > 0 ? k * lr2 : 0.0);
  };

  SeriesValue s = sum_series(log_term);
  const double pref =
      std::pow(1.0 - r * r, ctx.alpha) * (ctx.n + 1) * std::exp(log_gamma(ctx.n + ctx.alpha + 1.0));
  s.value *= pref;
  s.tail_bound *= pref;
  return s;
}

double parseval_series(double rho1, double rho2, double c1, double c2, double alpha, int k_max) {
  if (rho1 < 0 || rho2 < 0 || c1 < 0 || c2 < 0) {
    throw std::invalid_argument("parseval_series: arguments must be >= 0");
  }
  if (k_max < 0) throw std::invalid_argument("parseval_series: k_max must be >= 0");
  const double u = c1 * rho1;
  const double v = c2 * rho2;
  if (!(u + v < 1.0)) {
    throw std::invalid_argument("parseval_series: divergent parameter range (c1*rho1 + c2*rho2 >= 1)");
  }

  std::vector<double> pu(static_cast<std::size_t>(k_max) + 1, 1.0);
  std::vector<double> pv(static_cast<std::size_t>(k_max) + 1, 1.0);
  for (int j = 1; j <= k_max; ++j) {
    pu[static_cast<std::size_t>(j)] = pu[static_cast<std::size_t>(j - 1)] * u;
    pv[static_cast<std::size_t>(j)] = pv[static_cast<std::size_t>(j - 1)] * v;
  }

  double total = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    double choose = 1.0;  // binom(k, j) along the inner loop
    double inner = 0.0;
    for (int j = 0; j <= k; ++j) {
      const double t = choose * pu[static_cast<std::size_t>(j)] * pv[static_cast<std::size_t>(k - j)];
      inner += t * t;
      choose *= static_cast<double>(k - j) / (j + 1);
    }
    const double cb = gen_binomial(alpha + k - 1, k);
    total += cb * cb * inner;
  }
  const double four_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
  return four_pi_sq * total;
}

namespace {

// ln binom(2alpha+2k-1, 2k) updated by the two factors joining at each k.
struct EvenBinomLog {
  double alpha;
  double value = 0.0;
  void advance(int k) {
    for (int i = 2 * k - 1; i <= 2 * k; ++i) {
      const double num = 2.0 * alpha + i - 1;
      value += (num > 0.0 ? std::log(num) : -std::numeric_limits<double>::infinity()) -
               std::log(static_cast<double>(i));
    }
  }
};

}  // namespace

SeriesValue bound_function_real(const WeightContext& ctx, double r, double nu1, double nu2) {
  require_r(r);
  require_nonneg_alpha(ctx);
  if (std::abs(nu1 * nu1 + nu2 * nu2 - 1.0) > 1e-12) {
    throw std::invalid_argument("bound_function_real: requires nu1^2 + nu2^2 = 1");
  }
  const double lr2 = r > 0.0 ? 2.0 * std::log(r) : -std::numeric_limits<double>::infinity();
  const double lnu1 = nu1 != 0.0 ? 2.0 * std::log(std::abs(nu1))
                                 : -std::numeric_limits<double>::infinity();
  const double lnu2 = nu2 != 0.0 ? 2.0 * std::log(std::abs(nu2))
                                 : -std::numeric_limits<double>::infinity();

  EvenBinomLog binom{ctx.alpha};
  auto log_term = [&](int k) {
    if (k > 0) binom.advance(k);
    // inner sum over j in linear space; all terms are >= 0
    double inner = 0.0;
    for (int j = 0; j <= k; ++j) {
      double lt = log_gamma(2 * k + 1.0) - log_gamma(2 * j + 1.0) -
                  log_gamma(2 * (k - j) + 1.0) + log_gamma(k - j + 1.0) + log_gamma(j + 0.5);
      if (k - j > 0) lt += (k - j) * lnu1;
      if (j > 0) lt += j * lnu2;
      inner += std::exp(lt);
    }
    const double log_inner = inner > 0.0 ? std::log(inner) : -std::numeric_limits<double>::infinity();
    return binom.value - log_gamma(ctx.alpha + ctx.n + k + 1.5) + (k > 0 ? k * lr2 : 0.0) +
           log_inner;
  };

  SeriesValue s = sum_series(log_term);
  const double scale =
      std::exp((ctx.n - 1) * std::log(std::numbers::pi) + log_gamma(ctx.alpha + 1.0));
  s.value *= scale;
  s.tail_bound *= scale;
  return s;
}

SeriesValue bound_function_real_majorant(const WeightContext& ctx, double r) {
  require_r(r);
  require_nonneg_alpha(ctx);
  const double lr2 = r > 0.0 ? 2.0 * std::log(r) : -std::numeric_limits<double>::infinity();

  EvenBinomLog binom{ctx.alpha};
  auto log_term = [&](int k) {
    if (k > 0) binom.advance(k);
    return binom.value + log_gamma(k + 1.0) + log_gamma(0.5) -
           log_gamma(ctx.alpha + ctx.n + k + 1.5) + (k > 0 ? k * lr2 : 0.0);
  };

  SeriesValue s = sum_series(log_term);
  const double scale =
      std::exp((ctx.n - 1) * std::log(std::numbers::pi) + log_gamma(ctx.alpha + 1.0));
  s.value *= scale;
  s.tail_bound *= scale;
  return s;
}

double sharp_constant_complex(const WeightContext& ctx) {
  if (ctx.alpha < 0.0 || ctx.alpha > 2.0 * ctx.n + 3.0) {
    throw std::domain_error("sharp_constant_complex: requires 0 <= alpha <= 2n+3");
  }
  return 0.5 * (ctx.n + 1) * beta(ctx.n + ctx.alpha + 1.0, 0.5);
}

double sharp_constant_real(const WeightContext& ctx) {
  if (ctx.alpha < 0.0 || ctx.alpha > ctx.n + 0.5) {
    throw std::domain_error("sharp_constant_real: requires 0 <= alpha <= n+1/2");
  }
  return 2.0 / std::numbers::pi * (ctx.n + 1) * beta(ctx.alpha + ctx.n + 1.0, 0.5);
}

double upper_bound_complex(const WeightContext& ctx) {
  if (!(ctx.alpha > 2.0 * ctx.n + 3.0)) {
    throw std::domain_error("upper_bound_complex: requires alpha > 2n+3");
  }
  const int k = k_alpha(ctx);
  return (ctx.n + 1) * std::exp(log_gamma(ctx.n + ctx.alpha + 1.0)) *
         gen_binomial(ctx.alpha + k - 1, k) *
         std::exp(log_gamma(k + 1.5) - log_gamma(k + ctx.alpha + ctx.n + 1.5));
}

double upper_bound_real(const WeightContext& ctx) {
  if (!(ctx.alpha > ctx.n + 0.5)) {
    throw std::domain_error("upper_bound_real: requires alpha > n+1/2");
  }
  const int k = k_prime_alpha(ctx);
  return 2.0 / std::sqrt(std::numbers::pi) * (ctx.n + 1) *
         gen_binomial(2.0 * ctx.alpha + 2 * k - 1, 2 * k) /
         gen_binomial(ctx.alpha + k - 1, k) *
         std::exp(log_gamma(k + 1.0) + log_gamma(ctx.alpha + ctx.n + 1.0) -
                  log_gamma(k + ctx.alpha + ctx.n + 1.5));
}

RegimeReport classify(int n, double alpha, Case gradient_case) {
  const WeightContext ctx = make_context(n, alpha);  // validates n >= 1, alpha > -1
  RegimeReport report;
  report.n = n;
  report.alpha = alpha;
  report.gradient_case = gradient_case;

  if (alpha < 0.0) {
    report.regime = Regime::unbounded;
    report.constant_or_bound = std::numeric_limits<double>::infinity();
    return report;
  }

  const bool complex_case = gradient_case == Case::complex_gradient;
  const double threshold = complex_case ? 2.0 * n + 3.0 : n + 0.5;
  if (alpha <= threshold) {
    report.regime = Regime::sharp;
    report.constant_or_bound =
        complex_case ? sharp_constant_complex(ctx) : sharp_constant_real(ctx);
  } else {
    report.regime = Regime::bounded_strict;
    report.constant_or_bound = complex_case ? upper_bound_complex(ctx) : upper_bound_real(ctx);
    report.turning_index = complex_case ? k_alpha(ctx) : k_prime_alpha(ctx);
  }
  return report;
}

}  // namespace berezin
