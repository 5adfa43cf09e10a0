#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "xiggc/numtheory.hpp"
#include "xiggc/quadrature.hpp"
#include "xiggc/specfun.hpp"
#include "xiggc/types.hpp"

namespace xiggc::nucore {

// Value with a one-sided bound on what numerical truncation dropped or what
// the quadrature error estimate reports.
struct NuValue {
  double value;
  double error_bound;
};

inline constexpr double inv_sqrt_2pi = 0.3989422804014326779;

// Prime-power atoms damped at a fixed alpha, with the auxiliary tables that
// make the zeta Levy component cheap across many t values: c_n = Lambda(n) n^{-alpha}
// at position x_n = log n, suffix sums for the saturation regime (small t,
// where 1 - e^{-x^2/2t} is 1 to machine precision), and power moments
// M_j = sum c_n x_n^{2j} for the large-t series.
class ZetaAtomCache {
 public:
  static constexpr int moment_count = 12;

  ZetaAtomCache(double alpha, std::int64_t cutoff) : alpha_(alpha), cutoff_(cutoff) {
    if (!(alpha > 1.0)) throw std::domain_error("ZetaAtomCache requires alpha > 1");
    AtomicMeasure m = numtheory::mu_zeta_atoms(alpha, cutoff);
    const std::size_t n = m.atoms.size();
    x_.resize(n);
    x2_.resize(n);
    c_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      x_[i] = m.atoms[i].x;
      x2_[i] = x_[i] * x_[i];
      c_[i] = m.atoms[i].w * std::exp(-alpha * x_[i]);
    }
    suffix_.resize(n + 1);
    long double acc = 0.0L;
    for (std::size_t i = n; i-- > 0;) {
      acc += c_[i];
      suffix_[i] = static_cast<double>(acc);
    }
    suffix_[n] = 0.0;
    for (int j = 0; j < moment_count; ++j) {
      long double mj = 0.0L;
      for (std::size_t i = 0; i < n; ++i) {
        long double p = x2_[i];
        long double v = c_[i];
        for (int k = 0; k <= j; ++k) v *= p;
        mj += v;
      }
      moments_[j] = static_cast<double>(mj);
    }
    tail_bound_ = numtheory::lambda_tail_bound(alpha, cutoff);
  }

  ZetaAtomCache(double alpha, const TruncationPolicy& policy)
      : ZetaAtomCache(alpha, policy.prime_cutoff) {}

  double alpha() const { return alpha_; }
  std::int64_t cutoff() const { return cutoff_; }
  std::size_t size() const { return x_.size(); }
  const std::vector<double>& positions() const { return x_; }
  const std::vector<double>& weights() const { return c_; }

  // sum of all damped weights: the truncated -zeta'/zeta(alpha)
  double sum_all() const { return suffix_.empty() ? 0.0 : suffix_[0]; }

  // certified bound on the damped weight mass dropped beyond the cutoff
  double tail_bound() const { return tail_bound_; }

  // sum c_n (1 - e^{-x_n^2 / (2t)}). Three regimes: a 12-term power series
  // when every exponent is <= 1/2 (large t), exact saturation of atoms whose
  // exponent exceeds 37 (small t), and a direct expm1 sweep for the rest.
  double weighted_sum(double t) const {
    if (!(t > 0.0)) throw std::domain_error("weighted_sum requires t > 0");
    if (x_.empty()) return 0.0;
    const double inv2t = 0.5 / t;
    if (x2_.back() <= t) {
      // series: sum_j (-1)^{j+1} M_j / (j! (2t)^j), term ratio <= 1/4
      double series = 0.0;
      double factor = inv2t;  // 1/(2t)^j / j! running value
      for (int j = 0; j < moment_count; ++j) {
        double term = moments_[j] * factor;
        series += (j % 2 == 0) ? term : -term;
        if (std::abs(term) < 1e-17 * std::abs(series)) break;
        factor *= inv2t / (j + 2);
      }
      return series;
    }
    const double sat_x2 = 74.0 * t;  // e^{-37} vanishes next to 1
    std::size_t k =
        std::lower_bound(x2_.begin(), x2_.end(), sat_x2) - x2_.begin();
    KahanSum s;
    for (std::size_t i = 0; i < k; ++i)
      s.add(-c_[i] * std::expm1(-x2_[i] * inv2t));
    s.add(suffix_[k]);
    return s.value();
  }

 private:
  double alpha_;
  std::int64_t cutoff_;
  std::vector<double> x_, x2_, c_;
  std::vector<double> suffix_;
  double moments_[moment_count];
  double tail_bound_;
};

namespace detail {

// integrand of the Gamma-component Levy density, finite everywhere with
// limit 0 as x -> 0 (behaves as x/(4t)); expm1 keeps all digits at small x
inline double nu_gamma_integrand(double x, double alpha, double t) {
  double num = -std::expm1(-x * x * (0.5 / t));
  if (num == 0.0) return 0.0;
  double den = -std::expm1(-2.0 * x);
  return num * std::exp(-(alpha + 2.0) * x) / den;
}

}  // namespace detail

// Gamma factor's Levy component:
// (1/sqrt(2 pi t)) \int_0^infty (1-e^{-x^2/2t}) e^{-(alpha+2)x} / (1-e^{-2x}) dx.
inline NuValue nu_gamma(double alpha, double t, const TruncationPolicy& policy) {
  if (!(alpha > 1.0)) throw std::domain_error("nu_gamma requires alpha > 1");
  if (!(t > 0.0)) throw std::domain_error("nu_gamma requires t > 0");
  auto f = [alpha, t](double x) { return detail::nu_gamma_integrand(x, alpha, t); };
  QuadResult q = quadrature::integrate_to_inf(f, 0.0, policy.quad_rel_tol,
                                              policy.quad_max_subdiv);
  if (!q.converged)
    throw PrecisionError("nu_gamma quadrature did not converge");
  double pref = inv_sqrt_2pi / std::sqrt(t);
  return {pref * q.value, pref * q.abs_error_estimate};
}

// Zeta component against a prebuilt atom cache:
// (1/sqrt(2 pi t)) sum_{2 <= n <= cutoff} Lambda(n) n^{-alpha} (1-e^{-log^2(n)/2t}).
// error_bound certifies the dropped n > cutoff mass (1-e^{-u} <= 1 termwise).
inline NuValue nu_zeta(double t, const ZetaAtomCache& cache) {
  double pref = inv_sqrt_2pi / std::sqrt(t);
  return {pref * cache.weighted_sum(t), pref * cache.tail_bound()};
}

// Convenience overload building the cache per call. series_rel_tol, when
// finite, turns an unacceptably loose truncation into a hard error.
inline NuValue nu_zeta(double alpha, double t, const TruncationPolicy& policy,
                       double series_rel_tol =
                           std::numeric_limits<double>::infinity()) {
  ZetaAtomCache cache(alpha, policy);
  NuValue v = nu_zeta(t, cache);
  if (v.error_bound > series_rel_tol * std::abs(v.value))
    throw PrecisionError("nu_zeta truncation tail exceeds requested tolerance");
  return v;
}

// Pole component in scaled-complement form, decreasing from 1/2 at t = 0+:
// nu0(t) = (1/2) e^{(alpha-1)^2 t/2} erfc((alpha-1) sqrt(t/2)) = erfcx(...)/2.
inline double nu_zero(double alpha, double t) {
  if (!(alpha > 1.0)) throw std::domain_error("nu_zero requires alpha > 1");
  if (!(t > 0.0)) throw std::domain_error("nu_zero requires t > 0");
  return 0.5 * specfun::erfcx((alpha - 1.0) * std::sqrt(0.5 * t));
}

// Full Levy density of the reciprocal-xi representation.
inline NuValue nu_xi(double t, const ZetaAtomCache& cache,
                     const TruncationPolicy& policy) {
  NuValue g = nu_gamma(cache.alpha(), t, policy);
  NuValue z = nu_zeta(t, cache);
  double zero = nu_zero(cache.alpha(), t);
  return {g.value + z.value + zero, g.error_bound + z.error_bound};
}

inline NuValue nu_xi(double alpha, double t, const TruncationPolicy& policy) {
  ZetaAtomCache cache(alpha, policy);
  return nu_xi(t, cache, policy);
}

// Density of the random variable behind the pole component, as printed:
// 2(alpha-1) / (pi sqrt(2x) ((alpha-1)^2 + 2x)). It integrates to 1 over
// (0, infty); its Laplace transform at t is 2 nu_zero(alpha, t) (the factor
// 2 is forced by t = 0: a probability density transforms to 1, while
// nu_zero(0+) = 1/2).
inline double z0_density(double alpha, double x) {
  if (!(alpha > 1.0)) throw std::domain_error("z0_density requires alpha > 1");
  if (!(x > 0.0)) throw std::domain_error("z0_density requires x > 0");
  double b = alpha - 1.0;
  return 2.0 * b / (3.14159265358979323846 * std::sqrt(2.0 * x) * (b * b + 2.0 * x));
}

// Tag selecting the continuous Gamma-factor Thorin measure mu(dx) = dx/(e^{2x}-1).
struct GammaMeasure {};

// Thorin kernel density U(z) = (1/(pi sqrt(2z))) \int 2 sin^2(x sqrt(z/2)) e^{-alpha x} mu(dx)
// for an atomic measure (weights Lambda(n) at positions log n). The Laplace
// transform of U in z reproduces the matching Levy component atom by atom.
inline NuValue thorin_kernel(double alpha, double z, const AtomicMeasure& mu) {
  if (!(alpha > 1.0)) throw std::domain_error("thorin_kernel requires alpha > 1");
  if (!(z > 0.0)) throw std::domain_error("thorin_kernel requires z > 0");
  double omega = std::sqrt(0.5 * z);
  KahanSum s;
  for (const auto& a : mu.atoms) {
    double sn = std::sin(a.x * omega);
    s.add(2.0 * a.w * std::exp(-alpha * a.x) * sn * sn);
  }
  double pref = 1.0 / (3.14159265358979323846 * std::sqrt(2.0 * z));
  double tail = 0.0;
  if (!mu.atoms.empty()) {
    auto cutoff = static_cast<std::int64_t>(std::floor(std::exp(mu.atoms.back().x)));
    tail = 2.0 * numtheory::lambda_tail_bound(alpha, std::max<std::int64_t>(cutoff, 2));
  }
  return {pref * s.value(), pref * tail};
}

// Same kernel for the continuous Gamma measure. The x-integral is cut where
// e^{-(alpha+2)x} is below 1e-19 and, once the sin^2 oscillation is faster
// than the decay (z > 4), split at half-periods so each panel is smooth.
inline NuValue thorin_kernel(double alpha, double z, GammaMeasure,
                             const TruncationPolicy& policy = TruncationPolicy{}) {
  if (!(alpha > 1.0)) throw std::domain_error("thorin_kernel requires alpha > 1");
  if (!(z > 0.0)) throw std::domain_error("thorin_kernel requires z > 0");
  double omega = std::sqrt(0.5 * z);
  auto f = [alpha, omega](double x) {
    double sn = std::sin(x * omega);
    double den = -std::expm1(-2.0 * x);
    if (den == 0.0) return 0.0;  // x = 0 exactly; integrand limit is 0
    return 2.0 * sn * sn * std::exp(-(alpha + 2.0) * x) / den;
  };
  const double x_max = 44.0 / (alpha + 2.0) + 2.0;
  double value = 0.0, err = 0.0;
  std::int64_t evals = 0;
  if (z <= 4.0) {
    QuadResult q = quadrature::integrate(f, 0.0, x_max, policy.quad_rel_tol,
                                         policy.quad_max_subdiv);
    if (!q.converged)
      throw PrecisionError("thorin_kernel quadrature did not converge");
    value = q.value;
    err = q.abs_error_estimate;
    evals = q.evaluations;
  } else {
    double h = 3.14159265358979323846 / (2.0 * omega);  // half-period of sin^2
    KahanSum v, e;
    for (double a = 0.0; a < x_max; a += h) {
      double b = std::min(a + h, x_max);
      QuadResult q = quadrature::integrate(f, a, b, policy.quad_rel_tol, 40);
      v.add(q.value);
      e.add(q.abs_error_estimate);
      evals += q.evaluations;
    }
    value = v.value();
    err = e.value();
  }
  double pref = 1.0 / (3.14159265358979323846 * std::sqrt(2.0 * z));
  return {pref * value, pref * err};
}

// One violated sign condition in a complete-monotonicity scan.
struct CmViolation {
  int order;
  double t;
  double signed_difference;  // (-1)^order * forward difference, should be >= 0
  double tolerance;
};

struct CmReport {
  bool passed = true;
  int max_order = 0;
  std::size_t points_checked = 0;
  std::vector<CmViolation> violations;
};

// Finite-difference complete-monotonicity scan: at every grid point t_k with
// local step h_k = t_{k+1} - t_k (the geometric spacing), checks
// (-1)^j Delta_h^j f(t_k) >= -2^j * 1e-12 * |f(t_k)| for j = 0..max_order.
// The 2^j growth absorbs the roundoff amplification of j-fold differencing;
// a genuinely completely monotone f passes for every h > 0.
template <class F>
CmReport cm_check(F&& f, const std::vector<double>& grid, int max_order) {
  if (grid.size() < 2) throw std::invalid_argument("cm_check needs >= 2 grid points");
  if (max_order < 1 || max_order > 12)
    throw std::invalid_argument("cm_check supports max_order in [1, 12]");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] > 0.0) || !(grid[i] < grid[i + 1]))
      throw std::invalid_argument("cm_check grid must be positive and increasing");
  CmReport report;
  report.max_order = max_order;
  std::vector<double> d(max_order + 1);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double t = grid[k];
    double h = (k + 1 < grid.size()) ? grid[k + 1] - grid[k]
                                     : t * (grid[k] / grid[k - 1] - 1.0);
    for (int j = 0; j <= max_order; ++j) d[j] = f(t + j * h);
    double f0 = std::abs(d[0]);
    for (int j = 0; j <= max_order; ++j) {
      double value = d[0];
      double signed_diff = (j % 2 == 0) ? value : -value;
      double tol = std::ldexp(1e-12, j) * f0;
      if (signed_diff < -tol) {
        report.passed = false;
        report.violations.push_back({j, t, signed_diff, tol});
      }
      // difference in place: d[0] becomes Delta^{j+1} at t after this sweep
      for (int i = 0; i < max_order - j; ++i) d[i] = d[i + 1] - d[i];
    }
    ++report.points_checked;
  }
  return report;
}

}  // namespace xiggc::nucore
