#pragma once

// The Berezin kernel
//   K(z,w) = (1-|z|^2)^(n+1) / |1 - <z,w>|^(2n+2)
// together with its closed-form holomorphic gradient, the conjugate
// gradient, and the assembly of the real 2n-gradient.

#include <vector>

#include "berezin/ball.hpp"
#include "berezin/special.hpp"

namespace berezin {

// Holomorphic and antiholomorphic kernel derivatives. K is real valued, so
// antiholomorphic_part[i] == conj(holomorphic_part[i]) by construction.
struct KernelGradient {
  std::vector<Complex> holomorphic_part;      // dK/dz_i
  std::vector<Complex> antiholomorphic_part;  // dK/dzbar_i
};

// K(z,w); strictly positive. Requires |z| < 1 - 1e-9 and |w| < 1.
double kernel(const CPoint& z, const CPoint& w, const WeightContext& ctx);

// dK/dz_i(z,w) = (n+1)(1-|z|^2)^n ((1-|z|^2) conj(w_i) - (1-<z,w>) conj(z_i))
//                / ((1-<z,w>)^(n+2) (1-conj<z,w>)^(n+1)),
// with the antiholomorphic part set by conjugation. Integer complex powers
// are computed by repeated multiplication, never via complex logs.
KernelGradient kernel_grad_z(const CPoint& z, const CPoint& w, const WeightContext& ctx);

// Real gradient in the interleaved coordinates (x_1, y_1, ..., x_n, y_n):
//   d/dx_k = dK/dz_k + dK/dzbar_k,   d/dy_k = i (dK/dz_k - dK/dzbar_k).
// Each component is checked to be real to 1e-12 before the imaginary
// residue is discarded; the Euclidean norm equals 2 |grad_z K|.
std::vector<double> kernel_grad_real(const CPoint& z, const CPoint& w, const WeightContext& ctx);

}  // namespace berezin
