#pragma once

// Randomized integration over the real 2n-ball (= the unit ball of C^n)
// against dv and the weighted probability measure dv_alpha, plus the
// deterministic angular/moment quadratures used as oracles for the
// closed forms.
//
// Reproducibility contract: every sample is a pure function of
// (seed, sample index). Evaluation is chunked with a fixed chunk size and
// the per-chunk accumulators are merged in chunk order, so the result is
// bit-for-bit identical for any thread count.

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <vector>

#include "berezin/ball.hpp"
#include "berezin/special.hpp"

namespace berezin {

enum class Method { uniform, radial_importance };

struct QuadratureConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  Method method = Method::uniform;
  unsigned threads = 1;  // 0 = hardware concurrency
};

// Monte-Carlo value with standard error (sample sd / sqrt(samples)).
template <typename T>
struct IntegralEstimate {
  T value{};
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};
using RealEstimate = IntegralEstimate<double>;
using ComplexEstimate = IntegralEstimate<Complex>;

// Componentwise Monte-Carlo estimate of a complex-vector integrand.
struct VectorEstimate {
  std::vector<Complex> values;
  std::vector<double> std_errors;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Volume of the unit ball of R^dim: pi^(dim/2) / Gamma(dim/2 + 1).
double ball_volume(int dim);

// Uniform sampling of the open unit ball of R^dim: isotropic Gaussian
// direction, radius U^(1/dim). Points are addressable by index.
class BallSampler {
 public:
  BallSampler(int dim, std::uint64_t seed);
  int dim() const { return dim_; }
  void point(std::uint64_t index, std::span<double> out) const;

 private:
  int dim_;
  std::uint64_t seed_;
};

// Importance sampler for the weight (1-|x|^2)^alpha on the ball of R^dim
// (dim even): uniform direction on the sphere, radius drawn by inverse
// transform on a 4096-node monotone cubic spline of the radial CDF. The
// CDF is tabulated in the variable y = 1 - (1-r^2)^(alpha+1), in which the
// radial density is bounded for every alpha > -1, so the importance
// weights returned by point() stay bounded and average exactly 1.
class RadialImportanceSampler {
 public:
  RadialImportanceSampler(int dim, double alpha, std::uint64_t seed);
  int dim() const { return dim_; }
  // Fills a point of the ball and returns its importance weight relative
  // to the normalized radial density r^(dim-1)(1-r^2)^alpha.
  double point(std::uint64_t index, std::span<double> out) const;

 private:
  void eval_spline(double u, double& y, double& dydu) const;

  int dim_;
  int n_half_;
  double alpha_;
  std::uint64_t seed_;
  double inv_ap1_;
  double beta_norm_;        // B(dim/2, alpha+1)
  std::vector<double> ys_;  // inverse CDF values on the uniform u-grid
  std::vector<double> ds_;  // monotone tangents
};

namespace detail {

inline std::uint64_t splitmix_next(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Per-sample substream: sample i draws from the counter block
// [i*kStride, (i+1)*kStride) of one global splitmix64 sequence, so
// distinct samples never share counters regardless of chunking.
class SampleRng {
 public:
  static constexpr std::uint64_t kStride = 64;

  SampleRng(std::uint64_t seed, std::uint64_t index)
      : state_(seed + index * (kStride * 0x9e3779b97f4a7c15ULL)) {}

  double uniform() { return static_cast<double>(splitmix_next(state_) >> 11) * 0x1.0p-53; }
  double uniform_pos() {
    return static_cast<double>((splitmix_next(state_) >> 11) + 1) * 0x1.0p-53;
  }

  void fill_gaussian(std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); i += 2) {
      const double u1 = uniform_pos();
      const double u2 = uniform();
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double t = 2.0 * std::numbers::pi * u2;
      out[i] = r * std::cos(t);
      if (i + 1 < out.size()) out[i + 1] = r * std::sin(t);
    }
  }

 private:
  std::uint64_t state_;
};

struct Accumulator {
  std::vector<double> mean;
  std::vector<double> m2;
  std::uint64_t count = 0;

  explicit Accumulator(std::size_t ncomp) : mean(ncomp, 0.0), m2(ncomp, 0.0) {}

  void add(std::span<const double> x) {
    ++count;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double d = x[i] - mean[i];
      mean[i] += d / static_cast<double>(count);
      m2[i] += d * (x[i] - mean[i]);
    }
  }

  void merge(const Accumulator& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(o.count);
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double d = o.mean[i] - mean[i];
      mean[i] += d * nb / (na + nb);
      m2[i] += o.m2[i] + d * d * na * nb / (na + nb);
    }
    count += o.count;
  }

  double variance(std::size_t i) const {
    return count > 1 ? m2[i] / static_cast<double>(count - 1) : 0.0;
  }
};

inline void require_finite(const double* comps, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(comps[i])) {
      throw std::runtime_error("quadrature: non-finite integrand value at a sampled point");
    }
  }
}

inline constexpr std::uint64_t kChunkSamples = 16384;

// Runs fn(begin, end, acc) over fixed-size index chunks, possibly on
// several threads, and merges the per-chunk accumulators in chunk order.
template <typename ChunkFn>
Accumulator run_chunked(std::size_t ncomp, std::uint64_t samples, unsigned threads, ChunkFn&& fn) {
  if (samples < 1) throw std::invalid_argument("quadrature: samples must be >= 1");
  const std::uint64_t nchunks = (samples + kChunkSamples - 1) / kChunkSamples;
  unsigned nthreads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  nthreads = static_cast<unsigned>(std::min<std::uint64_t>(nthreads, nchunks));

  std::vector<Accumulator> accs(nchunks, Accumulator(ncomp));
  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t b = c * kChunkSamples;
    const std::uint64_t e = std::min(samples, b + kChunkSamples);
    fn(b, e, accs[c]);
  };

  if (nthreads <= 1) {
    for (std::uint64_t c = 0; c < nchunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::uint64_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) {
            run_chunk(c);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  Accumulator total(ncomp);
  for (const auto& a : accs) total.merge(a);
  return total;
}

template <typename T>
IntegralEstimate<T> make_estimate(const Accumulator& acc, double scale,
                                  const QuadratureConfig& cfg) {
  IntegralEstimate<T> est;
  est.samples = acc.count;
  est.seed = cfg.seed;
  const double rn = std::sqrt(static_cast<double>(acc.count));
  if constexpr (std::is_same_v<T, Complex>) {
    est.value = scale * Complex(acc.mean[0], acc.mean[1]);
    est.std_error = std::abs(scale) * std::sqrt(acc.variance(0) + acc.variance(1)) / rn;
  } else {
    est.value = scale * acc.mean[0];
    est.std_error = std::abs(scale) * std::sqrt(acc.variance(0)) / rn;
  }
  return est;
}

template <typename F>
using real_point_result_t = std::remove_cvref_t<std::invoke_result_t<F&, std::span<const double>>>;

template <typename F>
using cpoint_result_t = std::remove_cvref_t<std::invoke_result_t<F&, const CPoint&>>;

}  // namespace detail

// Estimate of the Lebesgue integral of f over the unit ball of R^dim;
// f maps a coordinate span to a real or complex value.
template <typename F>
auto integrate_lebesgue_real(F&& f, int dim, const QuadratureConfig& cfg)
    -> IntegralEstimate<detail::real_point_result_t<F>> {
  using T = detail::real_point_result_t<F>;
  constexpr bool is_cx = std::is_same_v<T, Complex>;
  const std::size_t ncomp = is_cx ? 2 : 1;
  const BallSampler sampler(dim, cfg.seed);

  auto acc = detail::run_chunked(
      ncomp, cfg.samples, cfg.threads,
      [&](std::uint64_t b, std::uint64_t e, detail::Accumulator& a) {
        std::vector<double> x(static_cast<std::size_t>(dim));
        double comps[2];
        for (std::uint64_t i = b; i < e; ++i) {
          sampler.point(i, x);
          if constexpr (is_cx) {
            const Complex v = f(std::span<const double>(x));
            comps[0] = v.real();
            comps[1] = v.imag();
          } else {
            comps[0] = f(std::span<const double>(x));
          }
          detail::require_finite(comps, ncomp);
          a.add(std::span<const double>(comps, ncomp));
        }
      });
  return detail::make_estimate<T>(acc, ball_volume(dim), cfg);
}

// Estimate of Int_{B^n} f dv for f on C^n (real dimension 2n).
template <typename F>
auto integrate_lebesgue(F&& f, int n, const QuadratureConfig& cfg)
    -> IntegralEstimate<detail::cpoint_result_t<F>> {
  using T = detail::cpoint_result_t<F>;
  constexpr bool is_cx = std::is_same_v<T, Complex>;
  if (n < 1) throw std::invalid_argument("integrate_lebesgue: n must be >= 1");
  const int dim = 2 * n;
  const std::size_t ncomp = is_cx ? 2 : 1;
  const BallSampler sampler(dim, cfg.seed);

  auto acc = detail::run_chunked(
      ncomp, cfg.samples, cfg.threads,
      [&](std::uint64_t b, std::uint64_t e, detail::Accumulator& a) {
        std::vector<double> x(static_cast<std::size_t>(dim));
        CPoint w = CPoint::zero(n);  // per-chunk scratch
        double comps[2];
        for (std::uint64_t i = b; i < e; ++i) {
          sampler.point(i, x);
          w.set_from_real(x);
          if constexpr (is_cx) {
            const Complex v = f(static_cast<const CPoint&>(w));
            comps[0] = v.real();
            comps[1] = v.imag();
          } else {
            comps[0] = f(static_cast<const CPoint&>(w));
          }
          detail::require_finite(comps, ncomp);
          a.add(std::span<const double>(comps, ncomp));
        }
      });
  return detail::make_estimate<T>(acc, ball_volume(dim), cfg);
}

// Estimate of Int_{B_dim} f(x) (1-|x|^2)^alpha dv(x) over the real ball
// (unnormalized weighted integral; dim must be even for the importance
// method). Uniform method multiplies the integrand by the weight; the
// radial-importance method absorbs the weight into the radial proposal.
template <typename F>
auto integrate_weighted_real(F&& f, int dim, double alpha, const QuadratureConfig& cfg)
    -> IntegralEstimate<detail::real_point_result_t<F>> {
  using T = detail::real_point_result_t<F>;
  constexpr bool is_cx = std::is_same_v<T, Complex>;
  if (!(alpha > -1.0)) throw std::invalid_argument("integrate_weighted_real: alpha must be > -1");

  if (cfg.method == Method::uniform) {
    return integrate_lebesgue_real(
        [&f, alpha](std::span<const double> x) {
          double nrm2 = 0.0;
          for (double c : x) nrm2 += c * c;
          return f(x) * std::pow(1.0 - nrm2, alpha);
        },
        dim, cfg);
  }

  const RadialImportanceSampler sampler(dim, alpha, cfg.seed);
  const std::size_t ncomp = is_cx ? 2 : 1;
  auto acc = detail::run_chunked(
      ncomp, cfg.samples, cfg.threads,
      [&](std::uint64_t b, std::uint64_t e, detail::Accumulator& a) {
        std::vector<double> x(static_cast<std::size_t>(dim));
        double comps[2];
        for (std::uint64_t i = b; i < e; ++i) {
          const double w = sampler.point(i, x);
          if constexpr (is_cx) {
            const Complex v = w * f(std::span<const double>(x));
            comps[0] = v.real();
            comps[1] = v.imag();
          } else {
            comps[0] = w * f(std::span<const double>(x));
          }
          detail::require_finite(comps, ncomp);
          a.add(std::span<const double>(comps, ncomp));
        }
      });
  // Total weighted mass: Int (1-|x|^2)^alpha dv = pi^(d/2) G(a+1)/G(d/2+a+1).
  const double mass = std::exp(0.5 * dim * std::log(std::numbers::pi) + log_gamma(alpha + 1.0) -
                               log_gamma(0.5 * dim + alpha + 1.0));
  return detail::make_estimate<T>(acc, mass, cfg);
}

// Estimate of Int f dv_alpha over the unit ball of C^n (dv_alpha is the
// normalized probability measure of the context).
template <typename F>
auto integrate_weighted(F&& f, const WeightContext& ctx, const QuadratureConfig& cfg)
    -> IntegralEstimate<detail::cpoint_result_t<F>> {
  using T = detail::cpoint_result_t<F>;
  constexpr bool is_cx = std::is_same_v<T, Complex>;
  const int dim = 2 * ctx.n;
  const std::size_t ncomp = is_cx ? 2 : 1;
  const bool uniform = cfg.method == Method::uniform;
  const BallSampler ball(dim, cfg.seed);
  std::optional<RadialImportanceSampler> radial;
  if (!uniform) radial.emplace(dim, ctx.alpha, cfg.seed);

  auto acc = detail::run_chunked(
      ncomp, cfg.samples, cfg.threads,
      [&](std::uint64_t b, std::uint64_t e, detail::Accumulator& a) {
        std::vector<double> x(static_cast<std::size_t>(dim));
        CPoint w = CPoint::zero(ctx.n);  // per-chunk scratch
        double comps[2];
        for (std::uint64_t i = b; i < e; ++i) {
          double wt;
          if (uniform) {
            ball.point(i, x);
            w.set_from_real(x);
            wt = std::pow(1.0 - w.norm_sq(), ctx.alpha);
          } else {
            wt = radial->point(i, x);
            w.set_from_real(x);
          }
          if constexpr (is_cx) {
            const Complex v = wt * f(static_cast<const CPoint&>(w));
            comps[0] = v.real();
            comps[1] = v.imag();
          } else {
            comps[0] = wt * f(static_cast<const CPoint&>(w));
          }
          detail::require_finite(comps, ncomp);
          a.add(std::span<const double>(comps, ncomp));
        }
      });

  // uniform: vol(B_2n) c_alpha E[f (1-|w|^2)^alpha]; radial: the proposal
  // already carries the weighted measure up to c_alpha * total mass = 1.
  const double scale =
      uniform ? ball_volume(dim) * ctx.c_alpha
              : ctx.c_alpha * std::exp(ctx.n * std::log(std::numbers::pi) +
                                       log_gamma(ctx.alpha + 1.0) -
                                       log_gamma(ctx.n + ctx.alpha + 1.0));
  return detail::make_estimate<T>(acc, scale, cfg);
}

// Componentwise estimate of Int f_i dv_alpha for a complex-vector
// integrand; f fills ncomp complex components per point. One pass over
// the samples feeds all components.
template <typename F>
VectorEstimate integrate_weighted_vec(F&& f, int ncomp, const WeightContext& ctx,
                                      const QuadratureConfig& cfg) {
  if (ncomp < 1) throw std::invalid_argument("integrate_weighted_vec: ncomp must be >= 1");
  const int dim = 2 * ctx.n;
  const std::size_t nreal = static_cast<std::size_t>(2 * ncomp);
  const bool uniform = cfg.method == Method::uniform;
  const BallSampler ball(dim, cfg.seed);
  std::optional<RadialImportanceSampler> radial;
  if (!uniform) radial.emplace(dim, ctx.alpha, cfg.seed);

  auto acc = detail::run_chunked(
      nreal, cfg.samples, cfg.threads,
      [&](std::uint64_t b, std::uint64_t e, detail::Accumulator& a) {
        std::vector<double> x(static_cast<std::size_t>(dim));
        std::vector<Complex> vals(static_cast<std::size_t>(ncomp));
        std::vector<double> comps(nreal);
        CPoint w = CPoint::zero(ctx.n);
        for (std::uint64_t i = b; i < e; ++i) {
          double wt;
          if (uniform) {
            ball.point(i, x);
            w.set_from_real(x);
            wt = std::pow(1.0 - w.norm_sq(), ctx.alpha);
          } else {
            wt = radial->point(i, x);
            w.set_from_real(x);
          }
          f(static_cast<const CPoint&>(w), std::span<Complex>(vals));
          for (int c = 0; c < ncomp; ++c) {
            comps[static_cast<std::size_t>(2 * c)] = wt * vals[static_cast<std::size_t>(c)].real();
            comps[static_cast<std::size_t>(2 * c + 1)] =
                wt * vals[static_cast<std::size_t>(c)].imag();
          }
          detail::require_finite(comps.data(), nreal);
          a.add(comps);
        }
      });

  const double scale =
      uniform ? ball_volume(dim) * ctx.c_alpha
              : ctx.c_alpha * std::exp(ctx.n * std::log(std::numbers::pi) +
                                       log_gamma(ctx.alpha + 1.0) - log_gamma(ctx.n + ctx.alpha + 1.0));
  VectorEstimate est;
  est.samples = acc.count;
  est.seed = cfg.seed;
  est.values.resize(static_cast<std::size_t>(ncomp));
  est.std_errors.resize(static_cast<std::size_t>(ncomp));
  const double rn = std::sqrt(static_cast<double>(acc.count));
  for (int c = 0; c < ncomp; ++c) {
    const std::size_t re = static_cast<std::size_t>(2 * c);
    est.values[static_cast<std::size_t>(c)] = scale * Complex(acc.mean[re], acc.mean[re + 1]);
    est.std_errors[static_cast<std::size_t>(c)] =
        scale * std::sqrt(acc.variance(re) + acc.variance(re + 1)) / rn;
  }
  return est;
}

// Tensor trapezoidal rule (512x512 nodes, spectrally accurate for this
// periodic integrand) for
//   Int_0^2pi Int_0^2pi |1 - c1 rho1 e^(i phi1) - c2 rho2 e^(i phi2)|^(-2 alpha)
// Requires rho1, rho2, c1, c2 >= 0 and c1 rho1 + c2 rho2 < 1.
double double_angle_integral(double rho1, double rho2, double c1, double c2, double alpha);

// Deterministic 2-D quadrature (polar substitution + tensor Simpson) of
//   Int Int_{rho1^2+rho2^2<1, rho1,rho2>0} (1-rho1^2-rho2^2)^alpha rho1^p rho2^q
// for p, q >= 0, alpha > -1/2.
double quarter_disc_moment(double p, double q, double alpha);

}  // namespace berezin
