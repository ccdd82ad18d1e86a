// Acceptance suite: every criterion runs at its stated tolerance and
// prints one PASS/FAIL line; the process exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "berezin/ball.hpp"
#include "berezin/kernel.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/seminorm.hpp"
#include "berezin/series.hpp"
#include "berezin/special.hpp"

using namespace berezin;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void report(int num, const std::string& what, bool pass, const std::string& detail) {
  std::printf("[%s] %2d: %-46s %s\n", pass ? "PASS" : "FAIL", num, what.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

QuadratureConfig mc_config(std::uint64_t seed) {
  QuadratureConfig cfg;
  cfg.samples = 1'000'000;
  cfg.seed = seed;
  cfg.threads = 0;
  return cfg;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

CPoint scaled_sample(const BallSampler& s, std::uint64_t i, double cap) {
  std::vector<double> x(static_cast<std::size_t>(s.dim()));
  s.point(i, x);
  for (double& c : x) c *= cap;
  return CPoint::from_real(x);
}

void criterion_1_sharp_complex_constant() {
  bool pass = true;
  double worst_sigma = 0.0;
  double worst_secs = 0.0;
  const std::pair<int, double> params[4] = {{1, 0.0}, {1, 2.0}, {2, 1.5}, {3, 0.0}};
  for (auto [n, alpha] : params) {
    const auto t0 = std::chrono::steady_clock::now();
    const WeightContext ctx = make_context(n, alpha);
    const auto est = integrate_weighted([](const CPoint& w) { return std::abs(w[0]); }, ctx,
                                        mc_config(101 + n));
    const double value = (n + 1) * est.value;
    const double se = (n + 1) * est.std_error;
    const double reference = 0.5 * (n + 1) * beta(n + alpha + 1.0, 0.5);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double sigma = std::abs(value - reference) / se;
    worst_sigma = std::max(worst_sigma, sigma);
    worst_secs = std::max(worst_secs, secs);
    pass = pass && sigma <= 4.0 && secs < 60.0;
  }
  // hand-derived Gamma-ratio anchors
  pass = pass && std::abs(sharp_constant_complex(make_context(1, 0.0)) - 4.0 / 3.0) < 1e-14;
  pass = pass && std::abs(sharp_constant_complex(make_context(1, 1.0)) - 16.0 / 15.0) < 1e-14;
  report(1, "sharp complex constant (Monte-Carlo, 4 sigma)", pass,
         fmt("max sigma=%.2f, max run=%.1fs", worst_sigma, worst_secs));
}

void criterion_2_sharp_real_constant() {
  bool pass = true;
  double worst_sigma = 0.0;
  const std::pair<int, double> params[2] = {{1, 0.0}, {2, 0.5}};
  for (auto [n, alpha] : params) {
    const WeightContext ctx = make_context(n, alpha);
    const BoundedSymbol f = BoundedSymbol::extremal_real(CPoint::basis(n, 0));
    const SeminormSample s = s_real(f, CPoint::zero(n), ctx, mc_config(211 + n));
    const double reference = sharp_constant_real(ctx);
    const double sigma = std::abs(s.value - reference) / s.std_error;
    worst_sigma = std::max(worst_sigma, sigma);
    pass = pass && sigma <= 4.0;
  }
  pass = pass &&
         std::abs(sharp_constant_real(make_context(1, 0.0)) - 16.0 / (3.0 * kPi)) < 1e-14;
  report(2, "sharp real constant via s_real at z=0", pass, fmt("max sigma=%.2f", worst_sigma));
}

void criterion_3_series_integral_identity() {
  bool pass = true;
  double worst_sigma = 0.0;
  for (int n : {1, 2}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      const WeightContext ctx = make_context(n, alpha);
      for (double r : {0.0, 0.3, 0.7}) {
        const SeriesValue sv = bound_function_complex(ctx, r);
        const auto oracle = oracle_bound_complex(ctx, r, mc_config(307));
        const double sigma =
            std::abs(oracle.value - sv.value) / std::max(oracle.std_error, 1e-12);
        worst_sigma = std::max(worst_sigma, sigma);
        pass = pass && sigma <= 4.0;
      }
    }
  }
  report(3, "series-integral identity on the (n,alpha,r) grid", pass,
         fmt("max sigma=%.2f over 18 points", worst_sigma));
}

void criterion_4_term_sequence_monotonicity() {
  bool pass = true;
  double worst_rel = 0.0;
  detail::SampleRng rng(404, 0);
  auto draw_n = [&] { return 1 + static_cast<int>(rng.uniform() * 4.0); };

  for (int trial = 0; trial < 50; ++trial) {
    // a-sequence, decreasing regime alpha <= 2n+3
    {
      const int n = draw_n();
      const WeightContext ctx = make_context(n, rng.uniform() * (2 * n + 3));
      int argmax = 0;
      for (int k = 1; k <= 500; ++k) {
        if (a_seq(ctx, k) > a_seq(ctx, argmax)) argmax = k;
      }
      pass = pass && argmax == k_alpha(ctx);
    }
    // a-sequence, single-peak regime alpha > 2n+3
    {
      const int n = draw_n();
      const WeightContext ctx = make_context(n, 2 * n + 3 + 0.01 + rng.uniform() * 25.0);
      int argmax = 0;
      for (int k = 1; k <= 500; ++k) {
        if (a_seq(ctx, k) > a_seq(ctx, argmax)) argmax = k;
      }
      pass = pass && argmax == k_alpha(ctx);
      const int k = static_cast<int>(rng.uniform() * 200.0);
      const double lhs = a_seq(ctx, k) * (ctx.alpha + k) * (k + 1.5);
      const double rhs = a_seq(ctx, k + 1) * (k + 1.0) * (k + ctx.alpha + ctx.n + 1.5);
      const double rel = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
      worst_rel = std::max(worst_rel, rel);
      pass = pass && rel <= 1e-12;
    }
    // b-sequence, decreasing regime alpha <= n+1/2
    {
      const int n = draw_n();
      const WeightContext ctx = make_context(n, 0.02 + rng.uniform() * (n + 0.48));
      int argmax = 0;
      for (int k = 1; k <= 500; ++k) {
        if (b_seq(ctx, k) > b_seq(ctx, argmax)) argmax = k;
      }
      pass = pass && argmax == k_prime_alpha(ctx);
    }
    // b-sequence, single-peak regime alpha > n+1/2
    {
      const int n = draw_n();
      const WeightContext ctx = make_context(n, n + 0.5 + 0.01 + rng.uniform() * 12.0);
      int argmax = 0;
      for (int k = 1; k <= 500; ++k) {
        if (b_seq(ctx, k) > b_seq(ctx, argmax)) argmax = k;
      }
      pass = pass && argmax == k_prime_alpha(ctx);
      const int k = static_cast<int>(rng.uniform() * 200.0);
      const double lhs = b_seq(ctx, k + 1) * (2 * k + 1.0) * (k + ctx.n + ctx.alpha + 1.5);
      const double rhs = b_seq(ctx, k) * (2 * k + 2 * ctx.alpha + 1.0) * (k + 1.0);
      const double rel = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
      worst_rel = std::max(worst_rel, rel);
      pass = pass && rel <= 1e-12;
    }
  }
  report(4, "term-sequence argmax and exact ratios", pass,
         fmt("max ratio residual=%.2e", worst_rel));
}

void criterion_5_parseval_identity() {
  bool pass = true;
  double worst_rel = 0.0;
  const double sets[5][5] = {{0.5, 0.6, 0.4, 0.5, 1.5},
                             {0.6, 0.5, 0.5, 0.0, 1.0},
                             {0.25, 0.9, 0.4, 0.5, 0.7},
                             {0.5, 0.5, 0.5, 0.5, 2.5},
                             {0.4, 0.5, 0.5, 0.6, 3.0}};
  for (const auto& p : sets) {
    const double integral = double_angle_integral(p[0], p[1], p[2], p[3], p[4]);
    const double series = parseval_series(p[0], p[1], p[2], p[3], p[4], 60);
    const double rel = std::abs(integral - series) / std::abs(series);
    worst_rel = std::max(worst_rel, rel);
    pass = pass && rel <= 1e-8;
  }
  report(5, "Parseval double-angle identity (5 sets)", pass, fmt("max rel=%.2e", worst_rel));
}

void criterion_6_moment_closed_forms() {
  bool pass = true;
  double worst_rel = 0.0;
  const int beta_sets[3][2] = {{0, 0}, {2, 1}, {3, 3}};
  const double beta_alphas[3] = {1.0, 0.5, 2.0};
  for (int i = 0; i < 3; ++i) {
    const int k = beta_sets[i][0], j = beta_sets[i][1];
    const double alpha = beta_alphas[i];
    const double quad = quarter_disc_moment(2.0 * j + 2.0, 2.0 * (k - j) + 1.0, alpha);
    const double closed = 0.25 * std::exp(log_gamma(alpha + 1.0) - log_gamma(alpha + k + 3.5) +
                                          log_gamma(k - j + 1.0) + log_gamma(j + 1.5));
    const double rel = std::abs(quad - closed) / closed;
    worst_rel = std::max(worst_rel, rel);
    pass = pass && rel <= 1e-6;
  }

  double worst_sigma = 0.0;
  const int real_sets[3][3] = {{1, 0, 0}, {2, 1, 1}, {2, 2, 0}};
  const double real_alphas[3] = {1.0, 0.5, 2.0};
  for (int i = 0; i < 3; ++i) {
    const int n = real_sets[i][0], k = real_sets[i][1], j = real_sets[i][2];
    const double alpha = real_alphas[i];
    const auto est = integrate_lebesgue_real(
        [&](std::span<const double> x) {
          double nrm2 = 0.0;
          for (double c : x) nrm2 += c * c;
          return std::pow(std::abs(x[0]), 2.0 * (k - j) + 1.0) * std::pow(x[1], 2.0 * j) *
                 std::pow(1.0 - nrm2, alpha);
        },
        2 * n, mc_config(606 + i));
    const double closed = std::exp((n - 1) * std::log(kPi) + log_gamma(alpha + 1.0) -
                                   log_gamma(alpha + n + k + 1.5) + log_gamma(k - j + 1.0) +
                                   log_gamma(j + 0.5));
    const double sigma = std::abs(est.value - closed) / est.std_error;
    worst_sigma = std::max(worst_sigma, sigma);
    pass = pass && sigma <= 4.0;
  }
  report(6, "Beta-integral and real-ball moment closed forms", pass,
         fmt("max rel=%.2e, max sigma=%.2f", worst_rel, worst_sigma));
}

void criterion_7_kernel_gradient_fd() {
  bool pass = true;
  double worst = 0.0;
  const double h = 1e-5;
  for (int n : {1, 2, 3}) {
    const WeightContext ctx = make_context(n, 0.7);
    const BallSampler sampler(2 * n, 700 + static_cast<std::uint64_t>(n));
    for (std::uint64_t i = 0; i < 100; ++i) {
      const CPoint z = scaled_sample(sampler, 2 * i, 0.9);
      const CPoint w = scaled_sample(sampler, 2 * i + 1, 0.9);
      const KernelGradient g = kernel_grad_z(z, w, ctx);
      double num2 = 0.0, den2 = 0.0;
      for (int c = 0; c < n; ++c) {
        CPoint zxp = z, zxm = z, zyp = z, zym = z;
        zxp[c] += h;
        zxm[c] -= h;
        zyp[c] += Complex(0.0, h);
        zym[c] -= Complex(0.0, h);
        const double dx = (kernel(zxp, w, ctx) - kernel(zxm, w, ctx)) / (2 * h);
        const double dy = (kernel(zyp, w, ctx) - kernel(zym, w, ctx)) / (2 * h);
        const Complex fd = 0.5 * Complex(dx, -dy);
        num2 += std::norm(fd - g.holomorphic_part[static_cast<std::size_t>(c)]);
        den2 += std::norm(g.holomorphic_part[static_cast<std::size_t>(c)]);
      }
      worst = std::max(worst, std::sqrt(num2 / den2));
    }
  }
  pass = worst <= 1e-6;
  report(7, "kernel gradient vs central finite differences", pass,
         fmt("max rel error=%.2e", worst));
}

void criterion_8_mobius_identity_suite() {
  double worst = 0.0;
  for (int n : {1, 2, 3}) {
    const BallSampler sampler(2 * n, 800 + static_cast<std::uint64_t>(n));
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const CPoint z = scaled_sample(sampler, 2 * i, 0.95);
      const CPoint xi = scaled_sample(sampler, 2 * i + 1, 0.95);
      const auto [r3, r4] = identity_residuals(z, xi);
      const CPoint back = mobius(z, mobius(z, xi));
      double inv2 = 0.0;
      for (int c = 0; c < n; ++c) inv2 += std::norm(back[c] - xi[c]);
      worst = std::max({worst, r3, r4, std::sqrt(inv2)});
    }
  }
  report(8, "Mobius identities and involution residuals", worst <= 1e-10,
         fmt("max residual=%.2e", worst));
}

void criterion_9_unboundedness() {
  const WeightContext ctx = make_context(1, -0.5);
  QuadratureConfig cfg = mc_config(909);
  cfg.method = Method::radial_importance;
  const double rs[4] = {0.0, 0.5, 0.9, 0.99};
  const auto rows = demonstrate_unbounded(ctx, rs, cfg);

  bool monotone = true;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double joint =
        std::hypot(rows[i].estimate.std_error, rows[i + 1].estimate.std_error);
    monotone = monotone &&
               rows[i + 1].estimate.value - rows[i].estimate.value > 4.0 * joint;
  }
  const double ratio = rows.back().estimate.value / rows.front().estimate.value;
  const bool pass = monotone && ratio > 10.0;
  report(9, "unboundedness for alpha<0 (growth ratio > 10)", pass,
         fmt("ratio=%.3f, monotone=%.0f", ratio, monotone ? 1.0 : 0.0));
}

void criterion_10_vanishing_limit() {
  bool pass = true;
  double worst = 0.0;
  for (auto [n, alpha] : {std::pair{1, 1.0}, std::pair{2, 2.0}}) {
    const WeightContext ctx = make_context(n, alpha);
    const double frac = bound_function_complex(ctx, 0.999).value /
                        bound_function_complex(ctx, 0.0).value;
    worst = std::max(worst, frac);
    pass = pass && frac < 0.05;
  }
  report(10, "vanishing limit at r -> 1", pass, fmt("max fraction=%.4f (< 0.05)", worst));
}

void criterion_11_strict_bound_regime() {
  std::vector<double> grid;
  for (int i = 0; i < 100; ++i) grid.push_back(0.01 * i);

  const WeightContext cc = make_context(1, 10.0);
  const ScanResult sc = scan_r(Case::complex_gradient, cc, grid);
  const bool c_ok = sc.argmax_index > 0 && sc.argmax_index + 1 < sc.rows.size() &&
                    sc.max_value < upper_bound_complex(cc);

  const WeightContext cr = make_context(1, 5.0);
  const ScanResult sr = scan_r(Case::real_gradient, cr, grid);
  const bool r_ok = sr.argmax_index > 0 && sr.argmax_index + 1 < sr.rows.size() &&
                    sr.max_value < upper_bound_real(cr);

  report(11, "strict-bound regime: interior argmax below bound", c_ok && r_ok,
         fmt("complex max/bound=%.4f, real max/bound=%.4f",
             sc.max_value / upper_bound_complex(cc), sr.max_value / upper_bound_real(cr)));
}

void criterion_12_no_counterexample_catalog() {
  bool pass = true;
  double worst_sigma = -1e9;
  for (Case c : {Case::complex_gradient, Case::real_gradient}) {
    const WeightContext ctx = make_context(1, 0.0);
    const double constant = c == Case::complex_gradient ? sharp_constant_complex(ctx)
                                                        : sharp_constant_real(ctx);
    const auto catalog = symbol_catalog(c, ctx.n, 20, 1200);
    for (const auto& sym : catalog) {
      const SeminormSample s = c == Case::complex_gradient
                                   ? s_complex(sym, CPoint::zero(1), ctx, mc_config(1201))
                                   : s_real(sym, CPoint::zero(1), ctx, mc_config(1202));
      const double sigma = (s.value - constant) / std::max(s.std_error, 1e-12);
      worst_sigma = std::max(worst_sigma, sigma);
      pass = pass && sigma <= 4.0;
    }
  }
  report(12, "no counterexample in the random symbol catalog", pass,
         fmt("max (value-const)/sigma=%.1f", worst_sigma));
}

}  // namespace

int main() {
  std::printf("acceptance suite (Monte-Carlo runs use 10^6 samples)\n");
  criterion_1_sharp_complex_constant();
  criterion_2_sharp_real_constant();
  criterion_3_series_integral_identity();
  criterion_4_term_sequence_monotonicity();
  criterion_5_parseval_identity();
  criterion_6_moment_closed_forms();
  criterion_7_kernel_gradient_fd();
  criterion_8_mobius_identity_suite();
  criterion_9_unboundedness();
  criterion_10_vanishing_limit();
  criterion_11_strict_bound_regime();
  criterion_12_no_counterexample_catalog();
  std::printf("%d of 12 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
