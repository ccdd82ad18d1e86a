#pragma once

// Complex unit-ball primitives: points of C^n, the Hermitian inner product
// <z,w> = sum_k z_k conj(w_k), the involutive Mobius automorphisms phi_z,
// and the real Jacobian of phi_z. All operations are pure.

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace berezin {

using Complex = std::complex<double>;

// A point of C^n, n >= 1, stored as n complex coordinates (2n reals).
class CPoint {
 public:
  CPoint() = default;
  explicit CPoint(std::vector<Complex> coords);
  CPoint(std::initializer_list<Complex> coords);

  static CPoint zero(int n);
  // Standard basis vector e_{i+1} (0-based index i).
  static CPoint basis(int n, int i);
  // Interleaved real coordinates (x_1, y_1, ..., x_n, y_n); size must be even.
  static CPoint from_real(std::span<const double> xs);

  int dim() const { return static_cast<int>(coords_.size()); }
  Complex& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  const Complex& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const Complex> coords() const { return coords_; }

  // Overwrites the coordinates from interleaved reals without reallocating.
  void set_from_real(std::span<const double> xs);

  double norm_sq() const;
  double norm() const;
  // Strict ball membership |z| < 1, no tolerance.
  bool in_ball() const { return norm_sq() < 1.0; }

 private:
  std::vector<Complex> coords_;
};

// <z,w> = z_1 conj(w_1) + ... + z_n conj(w_n). Throws on dimension mismatch.
Complex herm_inner(const CPoint& z, const CPoint& w);

// The Mobius automorphism phi_z(xi) exchanging 0 and z. Requires |z| < 1 and
// |xi| < 1. phi_0 is the continuous limit -identity.
CPoint mobius(const CPoint& z, const CPoint& xi);

// Absolute residuals of the two automorphism identities
//   1 - |phi_z(xi)|^2 = (1-|z|^2)(1-|xi|^2) / |1 - <z,xi>|^2
//   1 - |z|^2         = (1 - <z,xi>)(1 - <z, phi_z(xi)>)
// evaluated with mobius() and herm_inner(). Both residuals are >= 0.
std::pair<double, double> identity_residuals(const CPoint& z, const CPoint& xi);

// Real Jacobian of phi_z at xi: ((1-|z|^2) / |1 - <z,xi>|^2)^(n+1) > 0.
double jacobian_real(const CPoint& z, const CPoint& xi);

}  // namespace berezin
