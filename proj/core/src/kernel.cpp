#include "berezin/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace berezin {

namespace {

constexpr double kEdgeGuard = 1e-9;

void require_kernel_domain(const CPoint& z, const CPoint& w, const WeightContext& ctx) {
  if (z.dim() != ctx.n || w.dim() != ctx.n) {
    throw std::invalid_argument("kernel: point dimension does not match the context");
  }
  // z within 1e-9 of the sphere is rejected rather than extrapolated.
  if (!(z.norm_sq() < (1.0 - kEdgeGuard) * (1.0 - kEdgeGuard))) {
    throw std::invalid_argument("kernel: |z| must stay below 1 - 1e-9");
  }
  if (!w.in_ball()) throw std::invalid_argument("kernel: |w| must be < 1");
}

double rpow_int(double base, int e) {
  double out = 1.0;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Complex cpow_int(Complex base, int e) {
  Complex out(1.0, 0.0);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

double kernel(const CPoint& z, const CPoint& w, const WeightContext& ctx) {
  require_kernel_domain(z, w, ctx);
  const double num = rpow_int(1.0 - z.norm_sq(), ctx.n + 1);
  const double den = rpow_int(std::norm(1.0 - herm_inner(z, w)), ctx.n + 1);
  return num / den;
}

KernelGradient kernel_grad_z(const CPoint& z, const CPoint& w, const WeightContext& ctx) {
  require_kernel_domain(z, w, ctx);
  const int n = ctx.n;
  const double one_m_z2 = 1.0 - z.norm_sq();
  const Complex ip = herm_inner(z, w);
  const Complex denom = cpow_int(1.0 - ip, n + 2) * cpow_int(1.0 - std::conj(ip), n + 1);
  const Complex pref = (n + 1) * rpow_int(one_m_z2, n) / denom;

  KernelGradient g;
  g.holomorphic_part.resize(static_cast<std::size_t>(n));
  g.antiholomorphic_part.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Complex h = pref * (one_m_z2 * std::conj(w[i]) - (1.0 - ip) * std::conj(z[i]));
    g.holomorphic_part[static_cast<std::size_t>(i)] = h;
    g.antiholomorphic_part[static_cast<std::size_t>(i)] = std::conj(h);
  }
  return g;
}

std::vector<double> kernel_grad_real(const CPoint& z, const CPoint& w, const WeightContext& ctx) {
  const KernelGradient g = kernel_grad_z(z, w, ctx);
  std::vector<double> out(static_cast<std::size_t>(2 * ctx.n));
  double scale = 0.0;
  for (int i = 0; i < ctx.n; ++i) {
    scale = std::max(scale, std::abs(g.holomorphic_part[static_cast<std::size_t>(i)]));
  }
  const double tol = 1e-12 * std::max(1.0, scale);
  for (int i = 0; i < ctx.n; ++i) {
    const Complex h = g.holomorphic_part[static_cast<std::size_t>(i)];
    const Complex a = g.antiholomorphic_part[static_cast<std::size_t>(i)];
    const Complex dx = h + a;
    const Complex dy = Complex(0.0, 1.0) * (h - a);
    if (std::abs(dx.imag()) > tol || std::abs(dy.imag()) > tol) {
      throw std::runtime_error("kernel_grad_real: nonreal component residue");
    }
    out[static_cast<std::size_t>(2 * i)] = dx.real();
    out[static_cast<std::size_t>(2 * i + 1)] = dy.real();
  }
  return out;
}

}  // namespace berezin
