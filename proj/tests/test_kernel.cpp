#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "berezin/kernel.hpp"
#include "berezin/quadrature.hpp"

using namespace berezin;

namespace {

CPoint scaled_sample(const BallSampler& s, std::uint64_t i, double cap) {
  std::vector<double> x(static_cast<std::size_t>(s.dim()));
  s.point(i, x);
  for (double& c : x) c *= cap;
  return CPoint::from_real(x);
}

CPoint shifted(const CPoint& z, int coord, double h) {
  CPoint out = z;
  out[coord / 2] += coord % 2 == 0 ? Complex(h, 0.0) : Complex(0.0, h);
  return out;
}

// Central finite differences of the kernel in the 2n real coordinates of z.
std::vector<double> fd_real_gradient(const CPoint& z, const CPoint& w, const WeightContext& ctx,
                                     double h) {
  std::vector<double> out(static_cast<std::size_t>(2 * ctx.n));
  for (int c = 0; c < 2 * ctx.n; ++c) {
    out[static_cast<std::size_t>(c)] =
        (kernel(shifted(z, c, h), w, ctx) - kernel(shifted(z, c, -h), w, ctx)) / (2.0 * h);
  }
  return out;
}

double rel_vec_error(const std::vector<double>& got, const std::vector<double>& want) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    num += (got[i] - want[i]) * (got[i] - want[i]);
    den += want[i] * want[i];
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("kernel closed-form values") {
  const WeightContext ctx1 = make_context(1, 0.0);
  const CPoint z0 = CPoint::zero(1);
  const CPoint w({Complex(0.4, -0.3)});
  CHECK(kernel(z0, w, ctx1) == doctest::Approx(1.0).epsilon(1e-15));

  const WeightContext ctx2 = make_context(2, 1.0);
  const CPoint z2({Complex(0.3, 0.2), Complex(-0.1, 0.4)});
  CHECK(kernel(z2, CPoint::zero(2), ctx2) ==
        doctest::Approx(std::pow(1.0 - z2.norm_sq(), 3.0)).epsilon(1e-14));

  const CPoint half({Complex(0.5, 0.0)});
  CHECK(kernel(half, half, ctx1) == doctest::Approx(16.0 / 9.0).epsilon(1e-14));

  CHECK(kernel(z0, w, ctx1) > 0.0);
  const CPoint near_edge({Complex(1.0 - 1e-10, 0.0)});
  CHECK_THROWS_AS(kernel(near_edge, w, ctx1), std::invalid_argument);
}

TEST_CASE("kernel gradient at z = 0") {
  for (int n : {1, 3}) {
    const WeightContext ctx = make_context(n, 0.5);
    const BallSampler sampler(2 * n, 5);
    const CPoint w = scaled_sample(sampler, 1, 0.8);
    const KernelGradient g = kernel_grad_z(CPoint::zero(n), w, ctx);
    for (int i = 0; i < n; ++i) {
      const Complex expect = static_cast<double>(n + 1) * std::conj(w[i]);
      CHECK(std::abs(g.holomorphic_part[static_cast<std::size_t>(i)] - expect) < 1e-14);
      CHECK(g.antiholomorphic_part[static_cast<std::size_t>(i)] ==
            std::conj(g.holomorphic_part[static_cast<std::size_t>(i)]));
    }
  }
}

TEST_CASE("kernel gradient against central differences") {
  for (int n : {1, 2, 3}) {
    const WeightContext ctx = make_context(n, 0.7);
    const BallSampler sampler(2 * n, 1234 + static_cast<std::uint64_t>(n));
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const CPoint z = scaled_sample(sampler, 2 * i, 0.9);
      const CPoint w = scaled_sample(sampler, 2 * i + 1, 0.9);
      const KernelGradient g = kernel_grad_z(z, w, ctx);
      const std::vector<double> fd = fd_real_gradient(z, w, ctx, 1e-5);

      // d/dz_i = (d/dx_i - i d/dy_i)/2
      std::vector<double> got, want;
      for (int c = 0; c < n; ++c) {
        const Complex fz = 0.5 * Complex(fd[static_cast<std::size_t>(2 * c)],
                                         -fd[static_cast<std::size_t>(2 * c + 1)]);
        got.push_back(fz.real());
        got.push_back(fz.imag());
        want.push_back(g.holomorphic_part[static_cast<std::size_t>(c)].real());
        want.push_back(g.holomorphic_part[static_cast<std::size_t>(c)].imag());
      }
      worst = std::max(worst, rel_vec_error(got, want));
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("real gradient assembly") {
  const WeightContext ctx = make_context(1, 0.0);
  const CPoint z0 = CPoint::zero(1);
  const CPoint w({Complex(0.5, 0.0)});
  const auto g = kernel_grad_real(z0, w, ctx);
  CHECK(g.size() == 2);
  CHECK(g[0] == doctest::Approx(2.0).epsilon(1e-14));  // 2 (n+1) Re w = 2
  CHECK(g[1] == doctest::Approx(0.0));

  // |grad| = 2 |grad_z| for the real-valued kernel
  const BallSampler sampler(2, 77);
  for (std::uint64_t i = 0; i < 50; ++i) {
    const CPoint z = scaled_sample(sampler, 2 * i, 0.9);
    const CPoint ww = scaled_sample(sampler, 2 * i + 1, 0.9);
    const auto gr = kernel_grad_real(z, ww, ctx);
    const auto gz = kernel_grad_z(z, ww, ctx);
    double nr = 0.0;
    for (double c : gr) nr += c * c;
    double nz = 0.0;
    for (const Complex& c : gz.holomorphic_part) nz += std::norm(c);
    CHECK(std::sqrt(nr) == doctest::Approx(2.0 * std::sqrt(nz)).epsilon(1e-12));
  }

  // finite-difference agreement in all 2n real coordinates
  for (int n : {1, 2}) {
    const WeightContext ctxn = make_context(n, 1.2);
    const BallSampler s(2 * n, 900 + static_cast<std::uint64_t>(n));
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const CPoint z = scaled_sample(s, 2 * i, 0.9);
      const CPoint ww = scaled_sample(s, 2 * i + 1, 0.9);
      worst = std::max(worst, rel_vec_error(fd_real_gradient(z, ww, ctxn, 1e-5),
                                            kernel_grad_real(z, ww, ctxn)));
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("reproducing property at alpha = 0") {
  QuadratureConfig cfg;
  cfg.samples = 300000;
  cfg.seed = 17;
  for (int n : {1, 2}) {
    const WeightContext ctx = make_context(n, 0.0);
    for (double r : {0.0, 0.4, 0.7}) {
      CPoint z = CPoint::zero(n);
      z[0] = Complex(r, 0.0);
      const auto est =
          integrate_weighted([&](const CPoint& w) { return kernel(z, w, ctx); }, ctx, cfg);
      CHECK(std::abs(est.value - 1.0) <= 4.0 * std::max(est.std_error, 1e-12));
    }
  }
}
