#include "berezin/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace berezin {

namespace {

constexpr int kCdfNodes = 4096;
// SampleRng streams are 64 counters wide; one sample needs dim Gaussian
// draws plus one radius draw.
constexpr int kMaxDim = 60;

}  // namespace

double ball_volume(int dim) {
  if (dim < 1) throw std::invalid_argument("ball_volume: dim must be >= 1");
  return std::exp(0.5 * dim * std::log(std::numbers::pi) - log_gamma(0.5 * dim + 1.0));
}

BallSampler::BallSampler(int dim, std::uint64_t seed) : dim_(dim), seed_(seed) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("BallSampler: unsupported dimension");
}

void BallSampler::point(std::uint64_t index, std::span<double> out) const {
  if (out.size() != static_cast<std::size_t>(dim_)) {
    throw std::invalid_argument("BallSampler::point: output span size mismatch");
  }
  detail::SampleRng rng(seed_, index);
  rng.fill_gaussian(out);
  double nrm2 = 0.0;
  for (double c : out) nrm2 += c * c;
  const double u = rng.uniform();
  if (nrm2 == 0.0) return;  // measure-zero event; keep the origin
  const double scale = std::pow(u, 1.0 / dim_) / std::sqrt(nrm2);
  for (double& c : out) c *= scale;
}

RadialImportanceSampler::RadialImportanceSampler(int dim, double alpha, std::uint64_t seed)
    : dim_(dim), n_half_(dim / 2), alpha_(alpha), seed_(seed) {
  if (dim < 2 || dim % 2 != 0 || dim > kMaxDim) {
    throw std::invalid_argument("RadialImportanceSampler: dim must be even and within range");
  }
  if (!(alpha > -1.0)) throw std::invalid_argument("RadialImportanceSampler: alpha must be > -1");

  inv_ap1_ = 1.0 / (alpha + 1.0);
  beta_norm_ = beta(static_cast<double>(n_half_), alpha + 1.0);

  // Radial density of |x| is r^(dim-1)(1-r^2)^alpha (normalized), i.e.
  // s = r^2 is Beta(dim/2, alpha+1). In y = 1-(1-s)^(alpha+1) the density
  //   f_Y(y) = s(y)^(dim/2-1) / ((alpha+1) B(dim/2, alpha+1))
  // is bounded, and with q_m = prod_{i<=m} (alpha+i)/i the CDF is
  //   F_Y(y) = 1 - (1-y) sum_{m<dim/2} q_m s(y)^m.
  std::vector<double> q(static_cast<std::size_t>(n_half_), 1.0);
  for (int m = 1; m < n_half_; ++m) {
    q[static_cast<std::size_t>(m)] = q[static_cast<std::size_t>(m - 1)] * (alpha + m) / m;
  }
  auto s_of_y = [&](double y) { return 1.0 - std::pow(1.0 - y, inv_ap1_); };
  auto cdf = [&](double y) {
    const double s = s_of_y(y);
    double poly = 0.0;
    for (int m = n_half_ - 1; m >= 0; --m) poly = poly * s + q[static_cast<std::size_t>(m)];
    return 1.0 - (1.0 - y) * poly;
  };
  auto pdf = [&](double y) {
    const double s = s_of_y(y);
    double p = 1.0;
    for (int m = 0; m < n_half_ - 1; ++m) p *= s;
    return p * inv_ap1_ / beta_norm_;
  };

  // Invert the CDF on a uniform u-grid with safeguarded Newton.
  ys_.assign(kCdfNodes, 0.0);
  ys_.back() = 1.0;
  double lo = 0.0;
  for (int j = 1; j + 1 < kCdfNodes; ++j) {
    const double target = static_cast<double>(j) / (kCdfNodes - 1);
    double hi = 1.0;
    double y = std::clamp(ys_[static_cast<std::size_t>(j - 1)] + 1.0 / kCdfNodes, lo, hi);
    for (int it = 0; it < 80; ++it) {
      const double fv = cdf(y) - target;
      if (fv > 0.0) {
        hi = y;
      } else {
        lo = y;
      }
      const double dv = pdf(y);
      double step = dv > 0.0 ? y - fv / dv : 0.5 * (lo + hi);
      if (!(step > lo) || !(step < hi)) step = 0.5 * (lo + hi);
      if (std::abs(step - y) < 1e-16) {
        y = step;
        break;
      }
      y = step;
    }
    ys_[static_cast<std::size_t>(j)] = y;
    lo = y;
  }

  // Monotone tangents (harmonic mean of adjacent secants).
  ds_.assign(kCdfNodes, 0.0);
  const double inv_h = static_cast<double>(kCdfNodes - 1);
  std::vector<double> sec(kCdfNodes - 1);
  for (int j = 0; j + 1 < kCdfNodes; ++j) {
    sec[static_cast<std::size_t>(j)] =
        (ys_[static_cast<std::size_t>(j + 1)] - ys_[static_cast<std::size_t>(j)]) * inv_h;
  }
  ds_.front() = sec.front();
  ds_.back() = sec.back();
  for (int j = 1; j + 1 < kCdfNodes; ++j) {
    const double a = sec[static_cast<std::size_t>(j - 1)];
    const double b = sec[static_cast<std::size_t>(j)];
    ds_[static_cast<std::size_t>(j)] = (a > 0.0 && b > 0.0) ? 2.0 * a * b / (a + b) : 0.0;
  }
}

void RadialImportanceSampler::eval_spline(double u, double& y, double& dydu) const {
  const double h = 1.0 / (kCdfNodes - 1);
  int j = static_cast<int>(u * (kCdfNodes - 1));
  j = std::clamp(j, 0, kCdfNodes - 2);
  const double t = u * (kCdfNodes - 1) - j;
  const double y0 = ys_[static_cast<std::size_t>(j)];
  const double y1 = ys_[static_cast<std::size_t>(j + 1)];
  const double d0 = ds_[static_cast<std::size_t>(j)] * h;
  const double d1 = ds_[static_cast<std::size_t>(j + 1)] * h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  y = (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * d0 + (-2 * t3 + 3 * t2) * y1 +
      (t3 - t2) * d1;
  dydu = ((6 * t2 - 6 * t) * y0 + (3 * t2 - 4 * t + 1) * d0 + (-6 * t2 + 6 * t) * y1 +
          (3 * t2 - 2 * t) * d1) /
         h;
}

double RadialImportanceSampler::point(std::uint64_t index, std::span<double> out) const {
  if (out.size() != static_cast<std::size_t>(dim_)) {
    throw std::invalid_argument("RadialImportanceSampler::point: output span size mismatch");
  }
  detail::SampleRng rng(seed_, index);
  rng.fill_gaussian(out);
  double nrm2 = 0.0;
  for (double c : out) nrm2 += c * c;
  const double u = rng.uniform();

  double y, dydu;
  eval_spline(u, y, dydu);
  y = std::clamp(y, 0.0, 1.0 - 1e-16);
  const double s = 1.0 - std::pow(1.0 - y, inv_ap1_);
  const double r = std::sqrt(std::clamp(s, 0.0, 1.0 - 1e-16));

  double sp = 1.0;
  for (int m = 0; m < n_half_ - 1; ++m) sp *= s;
  const double weight = sp * inv_ap1_ / beta_norm_ * dydu;

  if (nrm2 > 0.0) {
    const double scale = r / std::sqrt(nrm2);
    for (double& c : out) c *= scale;
  }
  return weight;
}

double double_angle_integral(double rho1, double rho2, double c1, double c2, double alpha) {
  if (rho1 < 0 || rho2 < 0 || c1 < 0 || c2 < 0) {
    throw std::invalid_argument("double_angle_integral: arguments must be >= 0");
  }
  const double u = c1 * rho1;
  const double v = c2 * rho2;
  if (!(u + v < 1.0)) {
    throw std::invalid_argument("double_angle_integral: requires c1*rho1 + c2*rho2 < 1");
  }

  constexpr int m = 512;
  std::vector<Complex> phase(m);
  for (int k = 0; k < m; ++k) {
    const double t = 2.0 * std::numbers::pi * k / m;
    phase[static_cast<std::size_t>(k)] = Complex(std::cos(t), std::sin(t));
  }
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const Complex base = 1.0 - u * phase[static_cast<std::size_t>(i)];
    double row = 0.0;
    for (int j = 0; j < m; ++j) {
      row += std::pow(std::norm(base - v * phase[static_cast<std::size_t>(j)]), -alpha);
    }
    total += row;
  }
  const double two_pi = 2.0 * std::numbers::pi;
  return total / (static_cast<double>(m) * m) * two_pi * two_pi;
}

double quarter_disc_moment(double p, double q, double alpha) {
  if (p < 0 || q < 0) throw std::invalid_argument("quarter_disc_moment: exponents must be >= 0");
  if (!(alpha > -0.5)) throw std::invalid_argument("quarter_disc_moment: requires alpha > -1/2");

  // rho1 = r cos(theta), rho2 = r sin(theta), r = sin(psi):
  //   integrand = cos(psi)^(2 alpha + 1) sin(psi)^(p+q+1) cos(theta)^p sin(theta)^q
  constexpr int m = 1025;  // odd node count for composite Simpson
  const double h = 0.5 * std::numbers::pi / (m - 1);
  auto simpson_weight = [](int i) { return i == 0 || i == m - 1 ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0); };

  double inner = 0.0;  // the theta factor is the same on every psi row
  for (int j = 0; j < m; ++j) {
    const double th = j * h;
    inner += simpson_weight(j) * std::pow(std::cos(th), p) * std::pow(std::sin(th), q);
  }
  inner *= h / 3.0;

  double outer = 0.0;
  for (int i = 0; i < m; ++i) {
    const double psi = i * h;
    outer += simpson_weight(i) * std::pow(std::cos(psi), 2.0 * alpha + 1.0) *
             std::pow(std::sin(psi), p + q + 1.0);
  }
  return outer * h / 3.0 * inner;
}

}  // namespace berezin
