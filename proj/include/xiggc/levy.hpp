#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "xiggc/nucore.hpp"
#include "xiggc/quadrature.hpp"
#include "xiggc/specfun.hpp"
#include "xiggc/types.hpp"

namespace xiggc::quadrature {

namespace detail {

// Exact remainder for the prime-power mass dropped beyond the cache cutoff.
// Against the kernel e^{-sigma^2 t/2} - 1 each atom integrates in closed form
// (bridge identity) to (Lambda/log n)(n^{-alpha} - Re n^{-alpha-sigma})
// - Re(sigma) Lambda n^{-alpha}; summed over ALL n this telescopes to
// log zeta(alpha) - Re log zeta(alpha+sigma) + Re(sigma) (zeta'/zeta)(alpha),
// every term computable to near machine precision without any prime sum.
// Subtracting the cached head leaves exactly the tail the quadrature misses.
// Requires Re(sigma) > 0 (principal branch; the t-integral only ever sees
// sigma^2, and the convergent branch is the one with positive real part).
inline double euler_tail_compensation(const nucore::ZetaAtomCache& cache,
                                      std::complex<double> sigma) {
  const double alpha = cache.alpha();
  const double d = sigma.real();
  const double s = sigma.imag();
  const auto& x = cache.positions();
  const auto& c = cache.weights();  // c_n = Lambda(n) n^{-alpha}
  KahanSum l_alpha, l_shift, a_head;
  for (std::size_t i = 0; i < x.size(); ++i) {
    l_alpha.add(c[i] / x[i]);
    double damp = c[i] * std::exp(-d * x[i]);
    l_shift.add((s == 0.0 ? damp : damp * std::cos(s * x[i])) / x[i]);
    a_head.add(c[i]);
  }
  double log_zeta_alpha = std::log(specfun::zeta(alpha));
  double re_log_zeta_shift;
  if (s == 0.0) {
    re_log_zeta_shift = std::log(specfun::zeta(alpha + d));
  } else {
    std::complex<double> z(alpha + d, s);
    re_log_zeta_shift = std::log(std::abs(specfun::zeta(z)));
  }
  double a_all = -specfun::zeta_log_deriv_em(alpha);
  return (log_zeta_alpha - l_alpha.value()) -
         (re_log_zeta_shift - l_shift.value()) -
         d * (a_all - a_head.value());
}

// Integrates kernel(t) * nu_xi(t) / t over (0, infinity) with the truncated
// Levy density. Split at t = 1: below, t = u^2 tames the t^{-1/2} profile
// (the u-integrand grows only like log u near 0); above, t = e^v turns the
// t^{-3/2} tail into a clean e^{-v/2} decay, so no raw truncation happens.
template <class Kernel>
QuadResult levy_kernel_quadrature(double alpha, Kernel&& kernel,
                                  const nucore::ZetaAtomCache& cache,
                                  const TruncationPolicy& policy) {
  auto nu = [&](double t) {
    return nucore::nu_gamma(alpha, t, policy).value +
           nucore::nu_zeta(t, cache).value + nucore::nu_zero(alpha, t);
  };
  auto below = [&](double u) {
    if (u <= 0.0) return 0.0;
    double t = u * u;
    return kernel(t) * nu(t) * 2.0 / u;
  };
  QuadResult qa = integrate(below, 0.0, 1.0, policy.quad_rel_tol,
                            policy.quad_max_subdiv);
  auto above = [&](double v) {
    if (v > 500.0) return 0.0;  // nu ~ t^{-1/2}: mass beyond e^500 is ~e^{-250}
    double t = std::exp(v);
    return kernel(t) * nu(t);
  };
  QuadResult qb = integrate_to_inf(above, 0.0, policy.quad_rel_tol,
                                   policy.quad_max_subdiv);
  QuadResult out;
  out.value = qa.value + qb.value;
  out.abs_error_estimate = qa.abs_error_estimate + qb.abs_error_estimate;
  out.evaluations = qa.evaluations + qb.evaluations;
  out.converged = qa.converged && qb.converged;
  return out;
}

}  // namespace detail

// Levy exponent integral of the reciprocal-xi representation:
// \int_0^infty (e^{-s^2 t/2} - 1) nu_xi(t) dt/t, quadrature over the
// truncated density plus the exact Euler-product tail remainder.
// Adding b_alpha * s to the negated result gives -log(xi(alpha)/xi(alpha+s)).
inline QuadResult levy_integral_detailed(double alpha, double s,
                                         const TruncationPolicy& policy,
                                         const nucore::ZetaAtomCache* shared =
                                             nullptr) {
  if (!(alpha > 1.0)) throw std::domain_error("levy_integral requires alpha > 1");
  if (!(s >= 0.0)) throw std::domain_error("levy_integral requires s >= 0");
  if (s == 0.0) return {0.0, 0.0, 0, true};
  const nucore::ZetaAtomCache* cache = shared;
  std::optional<nucore::ZetaAtomCache> local;
  if (!cache) {
    local.emplace(alpha, policy);
    cache = &*local;
  }
  auto kernel = [s](double t) { return std::expm1(-0.5 * s * s * t); };
  QuadResult q = detail::levy_kernel_quadrature(alpha, kernel, *cache, policy);
  q.value += detail::euler_tail_compensation(*cache, {s, 0.0});
  return q;
}

inline double levy_integral(double alpha, double s,
                            const TruncationPolicy& policy) {
  QuadResult q = levy_integral_detailed(alpha, s, policy);
  if (!q.converged)
    throw PrecisionError("levy_integral quadrature did not converge");
  return q.value;
}

// Averaged continuation kernel integral
// \int_0^infty (e^{-at} cos(bt) - 1) nu_xi(t) dt/t  with a = ((alpha-1/2)^2
// - s^2)/2, b = (alpha-1/2) s: the real average of the two complex-shift
// kernels e^{-(is -+ (1/2-alpha))^2 t/2} - 1. Convergence needs a > 0, i.e.
// |s| < alpha - 1/2. The same Euler tail remainder applies with the complex
// shift sigma = (alpha-1/2) + is (the branch with positive real part).
inline QuadResult continuation_exponent_detailed(
    double alpha, double s, const TruncationPolicy& policy,
    const nucore::ZetaAtomCache* shared = nullptr) {
  if (!(alpha > 1.0))
    throw std::domain_error("continuation_exponent requires alpha > 1");
  double d = alpha - 0.5;
  double as = std::abs(s);
  if (!(as < d))
    throw std::domain_error(
        "continuation integral diverges: require |s| < alpha - 1/2");
  const nucore::ZetaAtomCache* cache = shared;
  std::optional<nucore::ZetaAtomCache> local;
  if (!cache) {
    local.emplace(alpha, policy);
    cache = &*local;
  }
  const double a = 0.5 * (d * d - s * s);
  const double b = d * as;
  auto kernel = [a, b](double t) {
    double sn = std::sin(0.5 * b * t);
    return std::expm1(-a * t) * std::cos(b * t) - 2.0 * sn * sn;
  };
  QuadResult q = detail::levy_kernel_quadrature(alpha, kernel, *cache, policy);
  q.value += detail::euler_tail_compensation(*cache, {d, as});
  return q;
}

inline double continuation_exponent(double alpha, double s,
                                    const TruncationPolicy& policy) {
  QuadResult q = continuation_exponent_detailed(alpha, s, policy);
  if (!q.converged)
    throw PrecisionError("continuation_exponent quadrature did not converge");
  return q.value;
}

// Both sides of the bridge identity behind every per-atom reduction:
// (e^{-sx} + sx - 1)/x = \int_0^infty (1-e^{-s^2 t/2})(1-e^{-x^2/2t})
// dt/sqrt(2 pi t^3). Split at t = x/s, where the two exponential scales
// balance.
struct BridgeValues {
  double closed_form;
  double integral;
  std::int64_t evaluations;
};

inline BridgeValues bridge_kernel_values(double s, double x,
                                         double rel_tol = 1e-10) {
  if (!(s > 0.0) || !(x > 0.0))
    throw std::domain_error("bridge_kernel_check requires s > 0 and x > 0");
  const double closed = (std::expm1(-s * x) + s * x) / x;
  const double ts = x / s;
  const double inv_sqrt_2pi = 0.3989422804014326779;
  auto f = [s, x, inv_sqrt_2pi](double t) {
    double ks = -std::expm1(-0.5 * s * s * t);
    double kx = -std::expm1(-0.5 * x * x / t);
    return ks * kx * inv_sqrt_2pi / (t * std::sqrt(t));
  };
  auto below = [&](double u) {
    if (u <= 0.0) return 0.0;
    double t = ts * u * u;
    return f(t) * 2.0 * ts * u;
  };
  QuadResult qa = integrate(below, 0.0, 1.0, rel_tol, 4000);
  auto above = [&](double v) {
    if (v > 500.0) return 0.0;  // integrand tail falls like e^{-3v/2}
    double t = ts * std::exp(v);
    return f(t) * t;
  };
  QuadResult qb = integrate_to_inf(above, 0.0, rel_tol, 4000);
  if (!qa.converged || !qb.converged)
    throw PrecisionError("bridge_kernel_check quadrature did not converge");
  return {closed, qa.value + qb.value, qa.evaluations + qb.evaluations};
}

// Relative residual of quadrature against the closed form.
inline double bridge_kernel_check(double s, double x, double rel_tol = 1e-10) {
  BridgeValues v = bridge_kernel_values(s, x, rel_tol);
  return std::abs(v.integral - v.closed_form) / std::abs(v.closed_form);
}

}  // namespace xiggc::quadrature
