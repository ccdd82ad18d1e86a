#include "berezin/ball.hpp"

#include <cmath>
#include <stdexcept>

namespace berezin {

namespace {

void require_ball_point(const CPoint& p, const char* what) {
  if (!p.in_ball()) {
    throw std::invalid_argument(std::string(what) + ": point lies outside the open unit ball");
  }
}

}  // namespace

CPoint::CPoint(std::vector<Complex> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("CPoint: dimension must be >= 1");
}

CPoint::CPoint(std::initializer_list<Complex> coords) : CPoint(std::vector<Complex>(coords)) {}

CPoint CPoint::zero(int n) {
  if (n < 1) throw std::invalid_argument("CPoint::zero: n must be >= 1");
  return CPoint(std::vector<Complex>(static_cast<std::size_t>(n), Complex(0.0, 0.0)));
}

CPoint CPoint::basis(int n, int i) {
  CPoint p = zero(n);
  if (i < 0 || i >= n) throw std::invalid_argument("CPoint::basis: index out of range");
  p[i] = Complex(1.0, 0.0);
  return p;
}

CPoint CPoint::from_real(std::span<const double> xs) {
  if (xs.empty() || xs.size() % 2 != 0) {
    throw std::invalid_argument("CPoint::from_real: need a nonempty even-length coordinate list");
  }
  std::vector<Complex> c(xs.size() / 2);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Complex(xs[2 * i], xs[2 * i + 1]);
  return CPoint(std::move(c));
}

void CPoint::set_from_real(std::span<const double> xs) {
  if (xs.size() != 2 * coords_.size()) {
    throw std::invalid_argument("CPoint::set_from_real: coordinate count mismatch");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = Complex(xs[2 * i], xs[2 * i + 1]);
}

double CPoint::norm_sq() const { return herm_inner(*this, *this).real(); }

double CPoint::norm() const { return std::sqrt(norm_sq()); }

Complex herm_inner(const CPoint& z, const CPoint& w) {
  if (z.dim() != w.dim()) throw std::invalid_argument("herm_inner: dimension mismatch");
  Complex s(0.0, 0.0);
  for (int i = 0; i < z.dim(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

CPoint mobius(const CPoint& z, const CPoint& xi) {
  require_ball_point(z, "mobius(z)");
  require_ball_point(xi, "mobius(xi)");
  if (z.dim() != xi.dim()) throw std::invalid_argument("mobius: dimension mismatch");

  const double z2 = z.norm_sq();
  std::vector<Complex> out(static_cast<std::size_t>(z.dim()));
  if (z2 == 0.0) {
    // phi_0 = -identity, the continuous limit of the general formula.
    for (int i = 0; i < z.dim(); ++i) out[static_cast<std::size_t>(i)] = -xi[i];
    return CPoint(std::move(out));
  }

  const Complex ip = herm_inner(xi, z);          // <xi, z>
  const Complex proj = ip / z2;                  // coefficient of the projection onto z
  const double s = std::sqrt(1.0 - z2);
  const Complex denom = 1.0 - ip;
  for (int i = 0; i < z.dim(); ++i) {
    const Complex pz = proj * z[i];
    out[static_cast<std::size_t>(i)] = (z[i] - pz - s * (xi[i] - pz)) / denom;
  }
  return CPoint(std::move(out));
}

std::pair<double, double> identity_residuals(const CPoint& z, const CPoint& xi) {
  const CPoint image = mobius(z, xi);
  const Complex zxi = herm_inner(z, xi);

  const double lhs3 = 1.0 - image.norm_sq();
  const double rhs3 = (1.0 - z.norm_sq()) * (1.0 - xi.norm_sq()) / std::norm(1.0 - zxi);
  const double res3 = std::abs(lhs3 - rhs3);

  const Complex rhs4 = (1.0 - zxi) * (1.0 - herm_inner(z, image));
  const double res4 = std::abs(Complex(1.0 - z.norm_sq(), 0.0) - rhs4);

  return {res3, res4};
}

double jacobian_real(const CPoint& z, const CPoint& xi) {
  require_ball_point(z, "jacobian_real(z)");
  require_ball_point(xi, "jacobian_real(xi)");
  if (z.dim() != xi.dim()) throw std::invalid_argument("jacobian_real: dimension mismatch");
  const double base = (1.0 - z.norm_sq()) / std::norm(1.0 - herm_inner(z, xi));
  double out = 1.0;
  for (int i = 0; i < z.dim() + 1; ++i) out *= base;
  return out;
}

}  // namespace berezin
