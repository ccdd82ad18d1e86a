#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "berezin/ball.hpp"
#include "berezin/quadrature.hpp"

using namespace berezin;

namespace {

CPoint scaled_sample(const BallSampler& s, std::uint64_t i, double cap) {
  std::vector<double> x(static_cast<std::size_t>(s.dim()));
  s.point(i, x);
  for (double& c : x) c *= cap;
  return CPoint::from_real(x);
}

double dist(const CPoint& a, const CPoint& b) {
  double d2 = 0.0;
  for (int i = 0; i < a.dim(); ++i) d2 += std::norm(a[i] - b[i]);
  return std::sqrt(d2);
}

}  // namespace

TEST_CASE("herm_inner basics") {
  const CPoint e1 = CPoint::basis(2, 0);
  CHECK(herm_inner(e1, e1) == Complex(1.0, 0.0));

  const CPoint z({Complex(0.5, 0.0), Complex(0.0, 0.0)});
  const CPoint w({Complex(0.0, 0.0), Complex(0.5, 0.0)});
  CHECK(herm_inner(z, w) == Complex(0.0, 0.0));

  // one-dimensional hand product: (0.3+0.4i) * conj(0.5i) = 0.2 - 0.15i
  const CPoint a({Complex(0.3, 0.4)});
  const CPoint b({Complex(0.0, 0.5)});
  const Complex ip = herm_inner(a, b);
  CHECK(ip.real() == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(ip.imag() == doctest::Approx(-0.15).epsilon(1e-15));

  CHECK(herm_inner(a, a).imag() == 0.0);
  CHECK(herm_inner(a, a).real() == doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(herm_inner(e1, a), std::invalid_argument);
}

TEST_CASE("CPoint construction and invariants") {
  CHECK_THROWS_AS(CPoint(std::vector<Complex>{}), std::invalid_argument);
  CHECK_THROWS_AS(CPoint::zero(0), std::invalid_argument);

  const double xs[4] = {0.1, 0.2, -0.3, 0.4};
  const CPoint p = CPoint::from_real(xs);
  CHECK(p.dim() == 2);
  CHECK(p[1] == Complex(-0.3, 0.4));
  CHECK(p.in_ball());
}

TEST_CASE("mobius fixed values") {
  const CPoint z({Complex(0.4, 0.1), Complex(-0.2, 0.3)});
  const CPoint zero = CPoint::zero(2);

  CHECK(dist(mobius(z, zero), z) < 1e-15);          // phi_z(0) = z
  CHECK(mobius(z, z).norm() < 1e-15);               // phi_z(z) = 0

  // n = 1: (0.5 - 0.2) / (1 - 0.5*0.2) = 1/3
  const CPoint z1({Complex(0.5, 0.0)});
  const CPoint xi1({Complex(0.2, 0.0)});
  const CPoint img = mobius(z1, xi1);
  CHECK(img[0].real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(img[0].imag() == doctest::Approx(0.0));

  // phi_0 = -identity
  const CPoint xi({Complex(0.3, -0.2), Complex(0.1, 0.4)});
  const CPoint neg = mobius(zero, xi);
  CHECK(dist(neg, CPoint({-xi[0], -xi[1]})) == 0.0);

  const CPoint outside({Complex(1.0, 0.5)});
  CHECK_THROWS_AS(mobius(CPoint({Complex(0.5, 0.0)}), outside), std::invalid_argument);
  CHECK_THROWS_AS(mobius(outside, CPoint({Complex(0.5, 0.0)})), std::invalid_argument);
}

TEST_CASE("identity residuals") {
  const CPoint zero = CPoint::zero(2);
  const CPoint xi({Complex(0.3, -0.2), Complex(0.1, 0.4)});
  const auto [r3_zero, r4_zero] = identity_residuals(zero, xi);
  CHECK(r3_zero == 0.0);
  CHECK(r4_zero == 0.0);

  const CPoint z({Complex(0.4, 0.1), Complex(-0.2, 0.3)});
  const auto [r3_same, r4_same] = identity_residuals(z, z);
  CHECK(r3_same <= 1e-12);
  CHECK(r4_same <= 1e-12);
}

TEST_CASE("mobius identities and involution on seeded pairs") {
  for (int n : {1, 2, 3}) {
    const BallSampler sampler(2 * n, 2024 + static_cast<std::uint64_t>(n));
    double max_res = 0.0;
    double max_inv = 0.0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const CPoint z = scaled_sample(sampler, 2 * i, 0.95);
      const CPoint xi = scaled_sample(sampler, 2 * i + 1, 0.95);
      const auto [r3, r4] = identity_residuals(z, xi);
      max_res = std::max(max_res, std::max(r3, r4));
      max_inv = std::max(max_inv, dist(mobius(z, mobius(z, xi)), xi));
    }
    CHECK(max_res <= 1e-12 * 3.0);  // both sides of each identity are O(1) here
    CHECK(max_inv <= 1e-10);
  }
}

TEST_CASE("jacobian_real values") {
  const CPoint z({Complex(0.4, 0.1), Complex(-0.2, 0.3)});
  CHECK(jacobian_real(CPoint::zero(2), z) == doctest::Approx(1.0).epsilon(1e-15));

  const double expect = std::pow(1.0 - z.norm_sq(), -3.0);  // n = 2
  CHECK(jacobian_real(z, z) == doctest::Approx(expect).epsilon(1e-13));

  const CPoint z1({Complex(0.5, 0.0)});
  const CPoint xi1({Complex(0.2, 0.0)});
  CHECK(jacobian_real(z1, xi1) ==
        doctest::Approx((0.75 / 0.81) * (0.75 / 0.81)).epsilon(1e-14));
}

TEST_CASE("change of variables against the Jacobian") {
  // Int g dv == Int g(phi_z(zeta)) J_R phi_z(zeta) dv(zeta) for a smooth
  // bump vanishing at the sphere.
  auto bump = [](const CPoint& w) {
    const double s = w.norm_sq();
    return s < 1.0 ? std::exp(-1.0 / (1.0 - s)) * std::cos(2.0 * w[0].real()) : 0.0;
  };
  const CPoint z({Complex(0.3, -0.2)});
  QuadratureConfig cfg;
  cfg.samples = 200000;
  cfg.seed = 99;
  const auto lhs = integrate_lebesgue(bump, 1, cfg);
  cfg.seed = 100;
  const auto rhs = integrate_lebesgue(
      [&](const CPoint& zeta) { return bump(mobius(z, zeta)) * jacobian_real(z, zeta); }, 1, cfg);
  CHECK(std::abs(lhs.value - rhs.value) <= 4.0 * std::hypot(lhs.std_error, rhs.std_error));
}
