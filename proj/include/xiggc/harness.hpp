#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "xiggc/levy.hpp"
#include "xiggc/numtheory.hpp"
#include "xiggc/nucore.hpp"
#include "xiggc/quadrature.hpp"
#include "xiggc/sampler.hpp"
#include "xiggc/specfun.hpp"
#include "xiggc/types.hpp"
#include "xiggc/zeros.hpp"

namespace xiggc::harness {

// One executed identity check. Invariant: passed <=> rel_residual <=
// tolerance, where rel_residual falls back to the absolute residual when
// |lhs| < 1e-12 (ratio identities are ill-conditioned relatively near zeros
// of xi, so the metric switches there).
struct VerificationReport {
  std::string identity_id;
  std::vector<std::pair<std::string, double>> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::int64_t evaluations = 0;
  double wall_time_ms = 0.0;
};

namespace detail {

class StopWatch {
 public:
  double elapsed_ms() const {
    auto dt = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

inline void finalize(VerificationReport& report, double lhs, double rhs,
                     double tolerance) {
  report.lhs = lhs;
  report.rhs = rhs;
  report.tolerance = tolerance;
  report.abs_residual = std::abs(lhs - rhs);
  report.rel_residual = std::abs(lhs) < 1e-12
                            ? report.abs_residual
                            : report.abs_residual / std::abs(lhs);
  report.passed = report.rel_residual <= tolerance;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.inputs) inputs[key] = value;
  return nlohmann::ordered_json{{"identity_id", r.identity_id},
                                {"inputs", inputs},
                                {"lhs", r.lhs},
                                {"rhs", r.rhs},
                                {"abs_residual", r.abs_residual},
                                {"rel_residual", r.rel_residual},
                                {"tolerance", r.tolerance},
                                {"passed", r.passed},
                                {"evaluations", r.evaluations},
                                {"wall_time_ms", r.wall_time_ms}};
}

inline VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.identity_id = j.at("identity_id").get<std::string>();
  for (const auto& [key, value] : j.at("inputs").items())
    r.inputs.emplace_back(key, value.get<double>());
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.abs_residual = j.at("abs_residual").get<double>();
  r.rel_residual = j.at("rel_residual").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.passed = j.at("passed").get<bool>();
  r.evaluations = j.at("evaluations").get<std::int64_t>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

// xi(alpha)/xi(alpha+s) against exp(-b_alpha s + Levy integral): the main
// exponent representation. The two routes share nothing past plain zeta
// machinery: lhs multiplies special functions, rhs runs quadrature over the
// truncated Levy density plus the exact prime tail remainder. A shared atom
// cache may be passed when scanning a grid at fixed alpha.
inline VerificationReport verify_theorem1(
    double alpha, double s, const TruncationPolicy& policy,
    double tolerance = 1e-6, const nucore::ZetaAtomCache* cache = nullptr) {
  if (!(alpha > 1.0))
    throw std::domain_error("verify_theorem1 requires alpha > 1");
  if (!(s > 0.0)) throw std::domain_error("verify_theorem1 requires s > 0");
  detail::StopWatch watch;
  VerificationReport report;
  report.identity_id = "xi_ratio_exponent";
  report.inputs = {{"alpha", alpha}, {"s", s},
                   {"prime_cutoff", static_cast<double>(policy.prime_cutoff)}};
  double lhs = specfun::xi_real(alpha) / specfun::xi_real(alpha + s);
  QuadResult q = quadrature::levy_integral_detailed(alpha, s, policy, cache);
  if (!q.converged)
    throw PrecisionError("verify_theorem1: Levy quadrature did not converge");
  double rhs = std::exp(-specfun::b_alpha(alpha) * s + q.value);
  report.evaluations = q.evaluations;
  detail::finalize(report, lhs, rhs, tolerance);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

// log zeta(alpha+s)/zeta(alpha) against the truncated prime-power sum
// sum_n Lambda(n)/log n * n^{-alpha} (n^{-s} - 1). The dropped tail is
// bounded by min(s, 1/log N) * sum_{n>N} Lambda(n) n^{-alpha}; the check
// refuses to report when that bound alone exceeds the tolerance budget.
// Default tolerance reflects the tail at the default cutoff for alpha >= 2.
inline VerificationReport verify_euler_ratio(double alpha, double s,
                                             const TruncationPolicy& policy,
                                             double tolerance = 1e-4) {
  if (!(alpha > 1.0))
    throw std::domain_error("verify_euler_ratio requires alpha > 1");
  if (!(s >= 0.0)) throw std::domain_error("verify_euler_ratio requires s >= 0");
  detail::StopWatch watch;
  VerificationReport report;
  report.identity_id = "euler_product_log_ratio";
  report.inputs = {{"alpha", alpha}, {"s", s},
                   {"prime_cutoff", static_cast<double>(policy.prime_cutoff)}};
  double lhs = std::log(specfun::zeta(alpha + s) / specfun::zeta(alpha));
  nucore::ZetaAtomCache cache(alpha, policy);
  KahanSum sum;
  const auto& x = cache.positions();
  const auto& c = cache.weights();  // c_n = Lambda(n) n^{-alpha}
  for (std::size_t i = 0; i < x.size(); ++i)
    sum.add(c[i] * std::expm1(-s * x[i]) / x[i]);
  double tail_bound =
      std::min(s, 1.0 / std::log(static_cast<double>(policy.prime_cutoff))) *
      numtheory::lambda_tail_bound(alpha, policy.prime_cutoff);
  if (tail_bound > tolerance * std::max(std::abs(lhs), 1e-12))
    throw PrecisionError(
        "verify_euler_ratio: truncation tail bound exceeds tolerance");
  report.evaluations = static_cast<std::int64_t>(cache.size());
  detail::finalize(report, lhs, sum.value(), tolerance);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

namespace detail {

// (e^{-sx} + sx - 1) evaluated without cancellation: below s x = 1e-4 the
// alternating series in s x is exact to well under machine epsilon.
inline double exp_linear_remainder(double sx) {
  if (sx < 1e-4)
    return 0.5 * sx * sx * (1.0 - sx / 3.0 + sx * sx / 12.0);
  return std::expm1(-sx) + sx;
}

}  // namespace detail

// Gamma(1+(alpha+s)/2)/Gamma(1+alpha/2) e^{-s psi(1+alpha/2)/2} against
// exp of the integral of (e^{-sx}+sx-1) e^{-alpha x} / (x (e^{2x}-1)):
// the Gamma factor's exponent representation.
inline VerificationReport verify_gamma_ratio(double alpha, double s,
                                             const TruncationPolicy& policy,
                                             double tolerance = 1e-8) {
  if (!(alpha > 1.0))
    throw std::domain_error("verify_gamma_ratio requires alpha > 1");
  if (!(s >= 0.0)) throw std::domain_error("verify_gamma_ratio requires s >= 0");
  detail::StopWatch watch;
  VerificationReport report;
  report.identity_id = "gamma_ratio_exponent";
  report.inputs = {{"alpha", alpha}, {"s", s}};
  double log_lhs = specfun::gamma_ln(1.0 + 0.5 * (alpha + s)) -
                   specfun::gamma_ln(1.0 + 0.5 * alpha) -
                   s * 0.5 * specfun::digamma(1.0 + 0.5 * alpha);
  auto integrand = [alpha, s](double x) {
    if (x <= 0.0) return 0.25 * s * s;  // limit: num ~ s^2 x^2 / 2, den ~ 2x^2
    double num = detail::exp_linear_remainder(s * x);
    double den = std::expm1(2.0 * x);
    return num * std::exp(-alpha * x) / (x * den);
  };
  QuadResult q = quadrature::integrate_to_inf(integrand, 0.0,
                                              policy.quad_rel_tol,
                                              policy.quad_max_subdiv);
  if (!q.converged)
    throw PrecisionError("verify_gamma_ratio quadrature did not converge");
  report.evaluations = q.evaluations;
  detail::finalize(report, std::exp(log_lhs), std::exp(q.value), tolerance);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

// (alpha-1)/(alpha-1+s) against exp of the Levy integral taken over the
// pole component nu0 alone; the integral's closed form is the Frullani
// value log((alpha-1)/(alpha-1+s)), with no linear drift term.
inline VerificationReport verify_nu0_rep(double alpha, double s,
                                         const TruncationPolicy& policy =
                                             TruncationPolicy{},
                                         double tolerance = 1e-8) {
  if (!(alpha > 1.0))
    throw std::domain_error("verify_nu0_rep requires alpha > 1");
  if (!(s >= 0.0)) throw std::domain_error("verify_nu0_rep requires s >= 0");
  detail::StopWatch watch;
  VerificationReport report;
  report.identity_id = "pole_factor_exponent";
  report.inputs = {{"alpha", alpha}, {"s", s}};
  double lhs = (alpha - 1.0) / (alpha - 1.0 + s);
  double rhs = 1.0;
  std::int64_t evaluations = 0;
  if (s > 0.0) {
    auto f = [alpha, s](double t) {
      return std::expm1(-0.5 * s * s * t) * nucore::nu_zero(alpha, t) / t;
    };
    auto below = [&](double u) {
      if (u <= 0.0) return 0.0;
      double t = u * u;
      return f(t) * 2.0 * t / u;
    };
    QuadResult qa = quadrature::integrate(below, 0.0, 1.0, policy.quad_rel_tol,
                                          policy.quad_max_subdiv);
    auto above = [&](double v) {
      if (v > 500.0) return 0.0;
      double t = std::exp(v);
      return f(t) * t;
    };
    QuadResult qb = quadrature::integrate_to_inf(above, 0.0,
                                                 policy.quad_rel_tol,
                                                 policy.quad_max_subdiv);
    if (!qa.converged || !qb.converged)
      throw PrecisionError("verify_nu0_rep quadrature did not converge");
    rhs = std::exp(qa.value + qb.value);
    evaluations = qa.evaluations + qb.evaluations;
  }
  report.evaluations = evaluations;
  detail::finalize(report, lhs, rhs, tolerance);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

// Closed form (e^{-sx}+sx-1)/x against the subordination integral; the
// identity every per-atom Laplace reduction rests on.
inline VerificationReport verify_bridge(double s, double x,
                                        double tolerance = 1e-8) {
  detail::StopWatch watch;
  VerificationReport report;
  report.identity_id = "subordination_bridge";
  report.inputs = {{"s", s}, {"x", x}};
  quadrature::BridgeValues v = quadrature::bridge_kernel_values(s, x);
  report.evaluations = v.evaluations;
  detail::finalize(report, v.closed_form, v.integral, tolerance);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

// Frullani integral of (e^{-at} - e^{-bt})/t against log(b/a). Accepts
// a == b, where both sides are exactly zero.
inline VerificationReport verify_frullani(double a, double b,
                                          double tolerance = 1e-8) {
  if (!(a > 0.0) || !(b >= a))
    throw std::domain_error("verify_frullani requires 0 < a <= b");
  detail::StopWatch watch;
  VerificationReport report;
  report.identity_id = "frullani_log_ratio";
  report.inputs = {{"a", a}, {"b", b}};
  double lhs = std::log(b / a);
  auto f = [a, b](double t) {
    if (t <= 0.0) return b - a;
    return std::exp(-a * t) * -std::expm1(-(b - a) * t) / t;
  };
  QuadResult qa = quadrature::integrate(f, 0.0, 1.0 / a, 1e-10, 4000);
  QuadResult qb = quadrature::integrate_to_inf(f, 1.0 / a, 1e-10, 4000);
  if (!qa.converged || !qb.converged)
    throw PrecisionError("verify_frullani quadrature did not converge");
  report.evaluations = qa.evaluations + qb.evaluations;
  detail::finalize(report, lhs, qa.value + qb.value, tolerance);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

// xi(1/2)/xi(1/2+s) against the truncated zero product with tail correction.
inline VerificationReport verify_hadamard(double s, std::int64_t n_zeros,
                                          const zeros::ZerosTable& table,
                                          double tolerance = 1e-3) {
  if (!(std::abs(s) <= 10.0))
    throw std::domain_error("verify_hadamard requires |s| <= 10");
  detail::StopWatch watch;
  VerificationReport report;
  report.identity_id = "hadamard_zero_product";
  report.inputs = {{"s", s}, {"n_zeros", static_cast<double>(n_zeros)}};
  double lhs = specfun::xi_real(0.5) / specfun::xi_real(0.5 + s);
  double rhs = zeros::hadamard_ratio(s, table, n_zeros, true);
  report.evaluations = n_zeros;
  detail::finalize(report, lhs, rhs, tolerance);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

// xi(1/2+is) = xi(1/2-is) through xi_critical evaluated both ways at every
// grid point. The report carries the worst point; its residual switches to
// absolute where |xi| < 1e-12 (near zeros on the line).
inline VerificationReport verify_symmetry(const std::vector<double>& s_grid,
                                          double tolerance = 1e-10) {
  if (s_grid.empty())
    throw std::invalid_argument("verify_symmetry requires a nonempty grid");
  detail::StopWatch watch;
  VerificationReport report;
  report.identity_id = "critical_line_symmetry";
  double worst = -1.0;
  double worst_s = s_grid.front(), worst_plus = 0.0, worst_minus = 0.0;
  for (double s : s_grid) {
    double plus = specfun::xi_critical(s);
    double minus = specfun::xi_critical(-s);
    double diff = std::abs(plus - minus);
    double effective = std::abs(plus) < 1e-12 ? diff : diff / std::abs(plus);
    if (effective > worst) {
      worst = effective;
      worst_s = s;
      worst_plus = plus;
      worst_minus = minus;
    }
  }
  report.inputs = {{"grid_points", static_cast<double>(s_grid.size())},
                   {"worst_s", worst_s}};
  report.evaluations = static_cast<std::int64_t>(2 * s_grid.size());
  detail::finalize(report, worst_plus, worst_minus, tolerance);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

// xi(1/2)/xi(1/2+is) against c_alpha exp(I(alpha, s)) where I averages the
// two +-is branch kernels of the analytically continued exponent formula and
// c_alpha = exp(-b_alpha (1/2-alpha)) xi(1/2)/xi(alpha). Implemented exactly
// as displayed. Note the averaged integral depends on the continuation shift
// w = 1/2 - alpha + is only through w^2, and the exponent identity is proven
// on the real axis, which lies in the opposite convergence cone of
// Re(w^2) > 0 from w; evaluating the even integral at w therefore lands on
// the negated shift, and the right side comes out as
// xi(1/2) exp(2 b_alpha (alpha - 1/2)) / |xi(2 alpha - 1/2 - is)|, the ratio
// at the point reflected about alpha (pinned to quadrature accuracy by
// VerifyContinuation.MismatchEqualsReflectedPointRatio). The check reports
// what the formula actually produces. Convergence of the t-integral
// requires |s| < alpha - 1/2.
inline VerificationReport verify_continuation(double alpha, double s,
                                              const TruncationPolicy& policy,
                                              double tolerance = 1e-5) {
  if (!(alpha > 1.0))
    throw std::domain_error("verify_continuation requires alpha > 1");
  if (!(std::abs(s) < alpha - 0.5))
    throw std::domain_error(
        "verify_continuation requires |s| < alpha - 1/2");
  detail::StopWatch watch;
  VerificationReport report;
  report.identity_id = "continued_exponent_formula";
  report.inputs = {{"alpha", alpha}, {"s", s},
                   {"prime_cutoff", static_cast<double>(policy.prime_cutoff)}};
  double lhs = specfun::xi_real(0.5) / specfun::xi_critical(s);
  QuadResult q = quadrature::continuation_exponent_detailed(alpha, s, policy);
  if (!q.converged)
    throw PrecisionError(
        "verify_continuation quadrature did not converge");
  double c_alpha = std::exp(-specfun::b_alpha(alpha) * (0.5 - alpha)) *
                   specfun::xi_real(0.5) / specfun::xi_real(alpha);
  double rhs = c_alpha * std::exp(q.value);
  report.evaluations = q.evaluations;
  detail::finalize(report, lhs, rhs, tolerance);
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

// Empirical Laplace transform of sampled H against the truncated zero
// product (no tail correction, same truncation) across an s-grid. A point
// misses when the estimate sits more than three standard errors from the
// product; the report's residual is the miss fraction and the tolerance the
// allowed fraction (one outlier per twenty points), so the usual
// passed <=> rel_residual <= tolerance invariant carries the statistical
// acceptance rule.
inline VerificationReport verify_sampling(const zeros::ZerosTable& table,
                                          std::int64_t n_zeros,
                                          std::int64_t n_samples,
                                          const std::vector<double>& s_grid,
                                          std::uint64_t seed) {
  if (s_grid.empty())
    throw std::invalid_argument("verify_sampling requires a nonempty grid");
  detail::StopWatch watch;
  VerificationReport report;
  report.identity_id = "ggc_sampling_transform";
  report.inputs = {{"n_zeros", static_cast<double>(n_zeros)},
                   {"n_samples", static_cast<double>(n_samples)},
                   {"seed", static_cast<double>(seed)},
                   {"grid_points", static_cast<double>(s_grid.size())}};
  DiscreteThorinMeasure measure = zeros::measure_from_zeros(table, n_zeros);
  sampler::SampleBatch batch = sampler::sample_ggc(measure, n_samples, seed);
  std::int64_t misses = 0;
  double worst_gap = -1.0;
  double worst_product = 1.0, worst_estimate = 1.0;
  for (double s : s_grid) {
    sampler::LtEstimate e = sampler::empirical_lt(batch, s);
    double product = zeros::hadamard_ratio(s, table, n_zeros, false);
    double gap = std::abs(e.estimate - product);
    if (gap > 3.0 * e.std_error) ++misses;
    double scaled = e.std_error > 0.0 ? gap / e.std_error : 0.0;
    if (scaled > worst_gap) {
      worst_gap = scaled;
      worst_product = product;
      worst_estimate = e.estimate;
    }
  }
  report.lhs = worst_product;
  report.rhs = worst_estimate;
  report.abs_residual = std::abs(worst_product - worst_estimate);
  report.rel_residual =
      static_cast<double>(misses) / static_cast<double>(s_grid.size());
  report.tolerance = 0.05;
  report.passed = report.rel_residual <= report.tolerance;
  report.evaluations = n_samples * static_cast<std::int64_t>(s_grid.size());
  report.wall_time_ms = watch.elapsed_ms();
  return report;
}

// Runs every check over its default grid. Pass/fail aggregation is left to
// the caller (the CLI folds it into the exit code).
inline std::vector<VerificationReport> run_suite(
    const TruncationPolicy& policy, const zeros::ZerosTable& table,
    std::uint64_t seed = 20260819) {
  std::vector<VerificationReport> reports;
  for (double alpha : {1.5, 2.0, 3.0}) {
    nucore::ZetaAtomCache cache(alpha, policy);
    for (double s : {0.1, 0.5, 1.0, 2.0})
      reports.push_back(verify_theorem1(alpha, s, policy, 1e-6, &cache));
  }
  for (double alpha : {2.0, 2.5, 3.0})
    for (double s : {0.5, 1.0})
      reports.push_back(verify_euler_ratio(alpha, s, policy));
  for (double alpha : {1.5, 2.0, 3.0})
    for (double s : {0.5, 1.0})
      reports.push_back(verify_gamma_ratio(alpha, s, policy));
  for (double alpha : {1.5, 2.0, 3.0})
    for (double s : {0.5, 2.0})
      reports.push_back(verify_nu0_rep(alpha, s, policy));
  reports.push_back(verify_frullani(1.0, 2.718281828459045));
  reports.push_back(verify_frullani(2.0, 2.0));
  reports.push_back(verify_frullani(0.5, 8.0));
  reports.push_back(verify_frullani(1.0, 2.0));
  reports.push_back(verify_frullani(0.25, 1.0));
  reports.push_back(verify_frullani(3.0, 10.0));
  {
    std::vector<double> grid = geometric_grid(0.25, 4.0, 5);
    for (double s : grid)
      for (double x : grid) reports.push_back(verify_bridge(s, x));
  }
  for (double s : {0.5, 1.0, 2.0})
    reports.push_back(verify_hadamard(s, 100, table));
  reports.push_back(verify_symmetry({1.0, 3.0, 7.0, 14.1347}));
  for (auto [alpha, s] : {std::pair{2.0, 0.5}, {3.0, 1.0}, {3.0, 2.0}})
    reports.push_back(verify_continuation(alpha, s, policy));
  reports.push_back(
      verify_sampling(table, 100, 100000, geometric_grid(0.25, 4.0, 20), seed));
  return reports;
}

}  // namespace xiggc::harness
