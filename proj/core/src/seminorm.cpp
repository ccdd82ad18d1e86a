#include "berezin/seminorm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace berezin {

namespace {

constexpr double kZeroSetTol = 1e-14;

CPoint unit_direction(CPoint a) {
  const double nrm = a.norm();
  if (!(nrm > 0.0)) throw std::invalid_argument("extremal symbol: direction must be nonzero");
  for (int i = 0; i < a.dim(); ++i) a[i] /= nrm;
  return a;
}

void require_matching(const BoundedSymbol& f, const CPoint& z, const WeightContext& ctx) {
  if (f.dimension() != ctx.n || z.dim() != ctx.n) {
    throw std::invalid_argument("seminorm: symbol/point dimension does not match the context");
  }
}

double weight_factor(const CPoint& z) { return 1.0 - z.norm_sq(); }

}  // namespace

BoundedSymbol BoundedSymbol::constant(Complex c, int n) {
  if (n < 1) throw std::invalid_argument("BoundedSymbol::constant: n must be >= 1");
  if (std::abs(c) > 1.0 + 1e-15) {
    throw std::invalid_argument("BoundedSymbol::constant: requires |c| <= 1");
  }
  BoundedSymbol s(Kind::constant, n, c.imag() == 0.0);
  s.c_ = c;
  return s;
}

BoundedSymbol BoundedSymbol::extremal_complex(CPoint a) {
  BoundedSymbol s(Kind::extremal_complex, a.dim(), false);
  s.a_ = unit_direction(std::move(a));
  return s;
}

BoundedSymbol BoundedSymbol::extremal_real(CPoint a) {
  BoundedSymbol s(Kind::extremal_real, a.dim(), true);
  s.a_ = unit_direction(std::move(a));
  return s;
}

BoundedSymbol BoundedSymbol::custom(int n, std::function<Complex(const CPoint&)> f,
                                    bool real_valued) {
  if (n < 1) throw std::invalid_argument("BoundedSymbol::custom: n must be >= 1");
  if (!f) throw std::invalid_argument("BoundedSymbol::custom: callable required");
  BoundedSymbol s(Kind::custom, n, real_valued);
  s.f_ = std::move(f);
  return s;
}

Complex BoundedSymbol::operator()(const CPoint& w) const {
  switch (kind_) {
    case Kind::constant:
      return c_;
    case Kind::extremal_complex: {
      const Complex u = herm_inner(w, a_);
      const double m = std::abs(u);
      return m <= kZeroSetTol ? Complex(0.0, 0.0) : u / m;
    }
    case Kind::extremal_real: {
      const double t = herm_inner(w, a_).real();
      if (std::abs(t) <= kZeroSetTol) return Complex(0.0, 0.0);
      return Complex(t > 0.0 ? 1.0 : -1.0, 0.0);
    }
    case Kind::custom:
      return f_(w);
  }
  return Complex(0.0, 0.0);
}

ComplexEstimate transform_at(const BoundedSymbol& f, const CPoint& z, const WeightContext& ctx,
                             const QuadratureConfig& cfg) {
  require_matching(f, z, ctx);
  return integrate_weighted([&](const CPoint& w) { return kernel(z, w, ctx) * f(w); }, ctx, cfg);
}

VectorEstimate grad_transform_at(const BoundedSymbol& f, const CPoint& z, const WeightContext& ctx,
                                 const QuadratureConfig& cfg, GradientSide side) {
  require_matching(f, z, ctx);
  const bool holo = side == GradientSide::holomorphic;
  return integrate_weighted_vec(
      [&, holo](const CPoint& w, std::span<Complex> out) {
        const KernelGradient g = kernel_grad_z(z, w, ctx);
        const Complex fv = f(w);
        const auto& part = holo ? g.holomorphic_part : g.antiholomorphic_part;
        for (std::size_t i = 0; i < part.size(); ++i) out[i] = part[i] * fv;
      },
      ctx.n, ctx, cfg);
}

SeminormSample s_complex(const BoundedSymbol& f, const CPoint& z, const WeightContext& ctx,
                         const QuadratureConfig& cfg, GradientSide side) {
  const VectorEstimate g = grad_transform_at(f, z, ctx, cfg, side);
  double nrm2 = 0.0;
  double err2 = 0.0;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    nrm2 += std::norm(g.values[i]);
    err2 += g.std_errors[i] * g.std_errors[i];
  }
  const double w = weight_factor(z);
  return SeminormSample{z, w * std::sqrt(nrm2), w * std::sqrt(err2)};
}

SeminormSample s_real(const BoundedSymbol& f, const CPoint& z, const WeightContext& ctx,
                      const QuadratureConfig& cfg) {
  require_matching(f, z, ctx);
  // Spot-check real-valuedness on a seeded sample batch.
  {
    const BallSampler probe(2 * ctx.n, cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<double> x(static_cast<std::size_t>(2 * ctx.n));
    CPoint w = CPoint::zero(ctx.n);
    for (std::uint64_t i = 0; i < 256; ++i) {
      probe.point(i, x);
      w.set_from_real(x);
      if (std::abs(f(w).imag()) > 1e-9) {
        throw std::invalid_argument("s_real: symbol is not real-valued");
      }
    }
  }

  const VectorEstimate g = grad_transform_at(f, z, ctx, cfg, GradientSide::holomorphic);
  // d/dx_k = 2 Re g_k and d/dy_k = -2 Im g_k, so |grad| = 2 |g|.
  double nrm2 = 0.0;
  double err2 = 0.0;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const double gx = 2.0 * g.values[i].real();
    const double gy = -2.0 * g.values[i].imag();
    nrm2 += gx * gx + gy * gy;
    err2 += g.std_errors[i] * g.std_errors[i];
  }
  const double w = weight_factor(z);
  return SeminormSample{z, w * std::sqrt(nrm2), w * 2.0 * std::sqrt(err2)};
}

RealEstimate oracle_bound_complex(const WeightContext& ctx, double r, const QuadratureConfig& cfg) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("oracle_bound_complex: requires 0 <= r < 1");
  }
  const double a = ctx.alpha;
  auto est = integrate_weighted(
      [r, a](const CPoint& w) {
        return std::abs(w[0]) * std::pow(std::norm(1.0 - r * w[0]), -a);
      },
      ctx, cfg);
  const double pref = (ctx.n + 1) * std::pow(1.0 - r * r, a);
  est.value *= pref;
  est.std_error *= pref;
  return est;
}

RealEstimate oracle_bound_real(const WeightContext& ctx, double r, double nu1, double nu2,
                               const QuadratureConfig& cfg) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("oracle_bound_real: requires 0 <= r < 1");
  }
  if (std::abs(nu1 * nu1 + nu2 * nu2 - 1.0) > 1e-12) {
    throw std::invalid_argument("oracle_bound_real: requires nu1^2 + nu2^2 = 1");
  }
  const double a = ctx.alpha;
  return integrate_weighted_real(
      [r, a, nu1, nu2](std::span<const double> x) {
        return std::abs(x[0]) * std::pow(1.0 - r * (x[0] * nu1 + x[1] * nu2), -2.0 * a);
      },
      2 * ctx.n, a, cfg);
}

std::vector<BoundedSymbol> symbol_catalog(Case gradient_case, int n, int count,
                                          std::uint64_t seed) {
  if (n < 1 || count < 0) throw std::invalid_argument("symbol_catalog: bad arguments");
  const bool real_case = gradient_case == Case::real_gradient;

  struct Monomial {
    Complex coeff;
    std::vector<int> pow_w;
    std::vector<int> pow_conj;
  };

  std::vector<BoundedSymbol> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    detail::SampleRng rng(seed, static_cast<std::uint64_t>(s));
    std::vector<Monomial> monos(4);
    for (auto& m : monos) {
      double g[2];
      rng.fill_gaussian(g);
      m.coeff = 0.5 * Complex(g[0], g[1]);
      m.pow_w.resize(static_cast<std::size_t>(n));
      m.pow_conj.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        m.pow_w[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform() * 3.0);
        m.pow_conj[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform() * 3.0);
      }
    }

    auto poly = [monos, n](const CPoint& w) {
      Complex acc(0.0, 0.0);
      for (const auto& m : monos) {
        Complex t = m.coeff;
        for (int i = 0; i < n; ++i) {
          for (int p = 0; p < m.pow_w[static_cast<std::size_t>(i)]; ++p) t *= w[i];
          for (int q = 0; q < m.pow_conj[static_cast<std::size_t>(i)]; ++q) t *= std::conj(w[i]);
        }
        acc += t;
      }
      return acc;
    };

    if (real_case) {
      out.push_back(BoundedSymbol::custom(
          n,
          [poly](const CPoint& w) {
            const double v = poly(w).real();
            return Complex(v / std::max(1.0, std::abs(v)), 0.0);
          },
          true));
    } else {
      out.push_back(BoundedSymbol::custom(
          n,
          [poly](const CPoint& w) {
            const Complex v = poly(w);
            const double m = std::abs(v);
            return m > 1.0 ? v / m : v;
          },
          false));
    }
  }
  return out;
}

SuiteReport verify_sharpness(Case gradient_case, const WeightContext& ctx,
                             const QuadratureConfig& cfg) {
  const bool complex_case = gradient_case == Case::complex_gradient;
  // Throws the regime error when alpha lies outside the sharp range.
  const double constant =
      complex_case ? sharp_constant_complex(ctx) : sharp_constant_real(ctx);

  SuiteReport rep;
  rep.suite = complex_case ? "sharp-complex" : "sharp-real";

  const CPoint z0 = CPoint::zero(ctx.n);
  const CPoint e1 = CPoint::basis(ctx.n, 0);
  const BoundedSymbol extremal =
      complex_case ? BoundedSymbol::extremal_complex(e1) : BoundedSymbol::extremal_real(e1);
  auto seminorm_at = [&](const BoundedSymbol& f, const CPoint& z) {
    return complex_case ? s_complex(f, z, ctx, cfg) : s_real(f, z, ctx, cfg);
  };

  const SeminormSample attained = seminorm_at(extremal, z0);
  rep.checks.push_back(sigma_check("attainment_z0", attained.value, constant, attained.std_error));

  const auto catalog = symbol_catalog(gradient_case, ctx.n, 20, cfg.seed + 1000003);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const SeminormSample s = seminorm_at(catalog[i], z0);
    rep.checks.push_back(bound_check("catalog_symbol_" + std::to_string(i), s.value, constant,
                                     s.std_error));
  }

  for (int g = 0; g < 5; ++g) {
    const double r = 0.2 * g;
    CPoint z = CPoint::zero(ctx.n);
    z[0] = Complex(r, 0.0);
    const SeminormSample s = seminorm_at(extremal, z);
    rep.checks.push_back(
        bound_check("extremal_grid_r" + std::to_string(g * 2), s.value, constant, s.std_error));
  }
  return rep;
}

ScanResult scan_r(Case gradient_case, const WeightContext& ctx, std::span<const double> r_grid,
                  const std::optional<QuadratureConfig>& oracle_cfg) {
  if (r_grid.empty()) throw std::invalid_argument("scan_r: empty grid");
  const bool complex_case = gradient_case == Case::complex_gradient;

  ScanResult out;
  out.rows.reserve(r_grid.size());
  for (double r : r_grid) {
    ScanRow row;
    row.r = r;
    if (complex_case) {
      row.bound = bound_function_complex(ctx, r).value;
    } else {
      const double pref = 2.0 * (ctx.n + 1) * ctx.c_alpha * std::pow(1.0 - r * r, ctx.alpha);
      row.bound = pref * bound_function_real_majorant(ctx, r).value;
    }
    if (oracle_cfg) {
      RealEstimate est;
      if (complex_case) {
        est = oracle_bound_complex(ctx, r, *oracle_cfg);
      } else {
        est = oracle_bound_real(ctx, r, 1.0, 0.0, *oracle_cfg);
        const double pref = 2.0 * (ctx.n + 1) * ctx.c_alpha * std::pow(1.0 - r * r, ctx.alpha);
        est.value *= pref;
        est.std_error *= pref;
      }
      row.oracle_value = est.value;
      row.oracle_std_error = est.std_error;
    }
    out.rows.push_back(row);
  }

  out.argmax_index = 0;
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (out.rows[i].bound > out.rows[out.argmax_index].bound) out.argmax_index = i;
  }
  out.max_value = out.rows[out.argmax_index].bound;
  return out;
}

std::vector<UnboundedRow> demonstrate_unbounded(const WeightContext& ctx,
                                                std::span<const double> r_list,
                                                const QuadratureConfig& cfg) {
  if (!(ctx.alpha > -1.0 && ctx.alpha < 0.0)) {
    throw std::domain_error("demonstrate_unbounded: requires -1 < alpha < 0");
  }
  std::vector<UnboundedRow> rows;
  rows.reserve(r_list.size());
  for (double r : r_list) {
    rows.push_back(UnboundedRow{r, oracle_bound_complex(ctx, r, cfg)});
  }
  return rows;
}

}  // namespace berezin
