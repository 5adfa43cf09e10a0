#include "xiggc/nucore.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "xiggc/levy.hpp"
#include "xiggc/quadrature.hpp"
#include "xiggc/specfun.hpp"

namespace nc = xiggc::nucore;
namespace qd = xiggc::quadrature;
namespace sf = xiggc::specfun;

namespace {

xiggc::TruncationPolicy tight_policy(std::int64_t cutoff = 10000) {
  xiggc::TruncationPolicy p;
  p.prime_cutoff = cutoff;
  return p;
}

TEST(GeometricGrid, EndpointsExactAndRatioConstant) {
  auto g = xiggc::geometric_grid(0.01, 1000.0, 20);
  ASSERT_EQ(g.size(), 20u);
  EXPECT_EQ(g.front(), 0.01);
  EXPECT_EQ(g.back(), 1000.0);
  double r = g[1] / g[0];
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    EXPECT_NEAR(g[i + 1] / g[i], r, 1e-12 * r);
  EXPECT_THROW(xiggc::geometric_grid(0.0, 1.0, 5), std::invalid_argument);
  EXPECT_THROW(xiggc::geometric_grid(1.0, 2.0, 1), std::invalid_argument);
}

TEST(ZetaAtomCache, WeightedSumMatchesBruteForceAcrossRegimes) {
  nc::ZetaAtomCache cache(2.0, 3000);
  // brute force without saturation or series shortcuts
  auto brute = [&](double t) {
    double s = 0.0;
    for (std::size_t i = 0; i < cache.size(); ++i) {
      double x = cache.positions()[i];
      s += cache.weights()[i] * -std::expm1(-x * x / (2.0 * t));
    }
    return s;
  };
  // spans saturation-only, mixed, sweep-only and series regimes
  for (double t : {1e-4, 1e-2, 0.5, 2.0, 10.0, 60.0, 64.1, 200.0, 1e4}) {
    double ref = brute(t);
    EXPECT_NEAR(cache.weighted_sum(t), ref, 2e-14 * ref) << "t=" << t;
  }
}

TEST(ZetaAtomCache, SeriesBranchAgreesWithSweepAtItsThreshold) {
  // at t = x_max^2 the implementation switches to the moment series; the
  // expm1 sweep evaluated at the same t is the reference
  nc::ZetaAtomCache cache(1.5, 2000);
  double t = cache.positions().back() * cache.positions().back();
  double sweep = 0.0;
  for (std::size_t i = 0; i < cache.size(); ++i) {
    double x = cache.positions()[i];
    sweep += cache.weights()[i] * -std::expm1(-x * x / (2.0 * t));
  }
  EXPECT_NEAR(cache.weighted_sum(t), sweep, 1e-13 * sweep);
}

TEST(ZetaAtomCache, SumAllIsTruncatedZetaLogDeriv) {
  nc::ZetaAtomCache cache(2.0, 10000);
  auto ts = sf::zeta_log_deriv_series(2.0, tight_policy());
  EXPECT_NEAR(cache.sum_all(), -ts.value, 1e-14);
  EXPECT_EQ(cache.tail_bound(), xiggc::numtheory::lambda_tail_bound(2.0, 10000));
}

TEST(NuZeta, MatchesHighPrecisionTruncatedReference) {
  // mpmath with the identical cutoff-1000 atom set
  nc::ZetaAtomCache c2(2.0, 1000);
  EXPECT_NEAR(nc::nu_zeta(1.0, c2).value, 0.12811971406856236665, 1e-14);
  nc::ZetaAtomCache c15(1.5, 1000);
  EXPECT_NEAR(nc::nu_zeta(5.0, c15).value, 0.098161959795933398118, 1e-14);
}

TEST(NuZeta, ConvenienceOverloadThrowsOnlyWhenAsked) {
  auto p = tight_policy(100);
  EXPECT_NO_THROW(nc::nu_zeta(2.0, 1.0, p));
  // cutoff 100 at alpha=2: tail bound ~ 2e-2, value ~ 0.128: 1e-6 rel unattainable
  EXPECT_THROW(nc::nu_zeta(2.0, 1.0, p, 1e-6), xiggc::PrecisionError);
}

TEST(NuGamma, MatchesIndependentOracles) {
  auto p = tight_policy();
  EXPECT_NEAR(nc::nu_gamma(2.0, 1.0, p).value, 0.0089766513279403864515, 1e-12);
  EXPECT_NEAR(nc::nu_gamma(1.5, 0.5, p).value, 0.030599202723916415966, 1e-12);
}

TEST(NuGamma, LargeTScalingConstant) {
  // t^{3/2} nu_gamma(t) -> (1/(2 sqrt(2 pi))) \int x^2 e^{-(a+2)x}/(1-e^{-2x}) dx
  auto p = tight_policy();
  double v2 = nc::nu_gamma(2.0, 1e6, p).value * 1e9;
  EXPECT_NEAR(v2, 0.010076130214667498978, 1e-5 * v2);
  double v3 = nc::nu_gamma(3.0, 1e6, p).value * 1e9;
  EXPECT_NEAR(v3, 0.0058894864376255311427, 1e-5 * v3);
}

TEST(NuGamma, ErrorEstimateWithinPolicy) {
  auto p = tight_policy();
  auto v = nc::nu_gamma(2.0, 0.3, p);
  EXPECT_LE(v.error_bound, 10 * p.quad_rel_tol * v.value);
}

TEST(NuZero, ClosedFormAgainstErfcxOracles) {
  EXPECT_NEAR(nc::nu_zero(2.0, 2.0), 0.21379178807790350221, 1e-15);
  EXPECT_NEAR(nc::nu_zero(1.5, 1.0), 0.34961883472039806983, 1e-15);
  // t -> 0+ limit is 1/2
  EXPECT_NEAR(nc::nu_zero(3.0, 1e-14), 0.5, 1e-7);
  EXPECT_THROW(nc::nu_zero(1.0, 1.0), std::domain_error);
}

TEST(NuXi, IsSumOfComponents) {
  auto p = tight_policy();
  nc::ZetaAtomCache cache(2.0, p.prime_cutoff);
  double t = 0.7;
  auto whole = nc::nu_xi(t, cache, p);
  double parts = nc::nu_gamma(2.0, t, p).value + nc::nu_zeta(t, cache).value +
                 nc::nu_zero(2.0, t);
  EXPECT_NEAR(whole.value, parts, 1e-15 * parts);
}

TEST(Z0Density, NormalizesToOne) {
  // x = u^2 removes the x^{-1/2} profile: the u-integrand is a pure arctan
  // kernel 4(alpha-1)/(pi sqrt(2) ((alpha-1)^2 + 2u^2))
  const double at_zero = 4.0 / (3.14159265358979323846 * std::sqrt(2.0));
  auto q = qd::integrate_to_inf(
      [at_zero](double u) {
        if (u == 0.0) return at_zero;  // limit of 2u z0(u^2) as u -> 0
        return 2.0 * u * nc::z0_density(2.0, u * u);
      },
      0.0, 1e-12, 4000);
  EXPECT_NEAR(q.value, 1.0, 1e-11);
}

TEST(Z0Density, LaplaceTransformIsTwiceNuZero) {
  // the printed density is a probability density, so its LT at 0 is 1, while
  // nu_zero(0+) = 1/2: the transform must be 2 nu_zero, not nu_zero
  double alpha = 2.0, t = 0.7;
  auto q = qd::integrate_to_inf(
      [alpha, t](double u) {
        if (u == 0.0) return 0.0;
        double x = u * u;
        return 2.0 * u * std::exp(-t * x) * nc::z0_density(alpha, x);
      },
      0.0, 1e-12, 4000);
  double expect = 2.0 * nc::nu_zero(alpha, t);
  EXPECT_NEAR(q.value, expect, 1e-10 * expect);
}

TEST(ThorinKernelAtomic, VanishesWhereSinglAtomPhaseIsHarmonic) {
  xiggc::AtomicMeasure one;
  double x = std::log(2.0);
  one.atoms.push_back({x, x});
  double pi = 3.14159265358979323846;
  for (int k = 1; k <= 3; ++k) {
    double z = 2.0 * k * k * pi * pi / (x * x);
    auto u = nc::thorin_kernel(2.0, z, one);
    EXPECT_NEAR(u.value, 0.0, 1e-16);
  }
}

TEST(ThorinKernelAtomic, PerAtomLaplaceTransformClosesExactly) {
  // \int_0^inf e^{-tz} U_atom(z) dz = w (1-e^{-x^2/2t}) / sqrt(2 pi t)
  xiggc::AtomicMeasure one;
  double x = std::log(3.0);
  one.atoms.push_back({x, x});
  double t = 0.8;
  auto f = [&](double v) {
    double z = v * v;
    if (z == 0.0) return 0.0;
    return 2.0 * v * std::exp(-t * z) * nc::thorin_kernel(2.0, z, one).value;
  };
  double vmax = std::sqrt(45.0 / t);
  auto q = qd::integrate(f, 0.0, vmax, 1e-11, 4000);
  double damped = x * std::exp(-2.0 * x);
  double closed = damped * -std::expm1(-x * x / (2.0 * t)) /
                  std::sqrt(2.0 * 3.14159265358979323846 * t);
  EXPECT_NEAR(q.value, closed, 1e-10 * closed);
}

TEST(ThorinKernelGamma, MatchesIndependentOracles) {
  auto p = tight_policy();
  EXPECT_NEAR(nc::thorin_kernel(2.0, 1.0, nc::GammaMeasure{}, p).value,
              0.010435609901764131261, 1e-11);
  EXPECT_NEAR(nc::thorin_kernel(2.0, 9.0, nc::GammaMeasure{}, p).value,
              0.019884366931928959831, 1e-11);
  EXPECT_NEAR(nc::thorin_kernel(3.0, 40.0, nc::GammaMeasure{}, p).value,
              0.015742666296392945445, 1e-10);
}

TEST(ThorinKernelGamma, LaplaceTransformReproducesNuGamma) {
  auto p = tight_policy();
  p.quad_rel_tol = 1e-9;
  double alpha = 2.0, t = 1.0;
  auto f = [&](double v) {
    double z = v * v;
    if (z == 0.0) return 0.0;
    return 2.0 * v * std::exp(-t * z) *
           nc::thorin_kernel(alpha, z, nc::GammaMeasure{}, p).value;
  };
  double vmax = std::sqrt(45.0 / t);
  auto q = qd::integrate(f, 0.0, vmax, 1e-8, 4000);
  double nu = nc::nu_gamma(alpha, t, tight_policy()).value;
  EXPECT_NEAR(q.value, nu, 1e-6 * nu);
}

TEST(CmCheck, ExponentialPassesToOrderEight) {
  auto grid = xiggc::geometric_grid(0.01, 100.0, 20);
  auto r = nc::cm_check([](double t) { return std::exp(-t); }, grid, 8);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.points_checked, 20u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(CmCheck, OscillationFailsAtOrderTwo) {
  auto grid = xiggc::geometric_grid(1.0, 30.0, 12);
  auto r = nc::cm_check([](double t) { return std::sin(t) + 2.0; }, grid, 4);
  EXPECT_FALSE(r.passed);
  bool low_order_hit = false;
  for (const auto& v : r.violations)
    if (v.order <= 2) low_order_hit = true;
  EXPECT_TRUE(low_order_hit);
}

TEST(CmCheck, NuZeroIsCompletelyMonotone) {
  auto grid = xiggc::geometric_grid(0.1, 50.0, 20);
  auto r = nc::cm_check([](double t) { return nc::nu_zero(2.0, t); }, grid, 8);
  EXPECT_TRUE(r.passed) << r.violations.size() << " violations";
}

TEST(CmCheck, RejectsBadArguments) {
  std::vector<double> g{1.0, 2.0};
  EXPECT_THROW(nc::cm_check([](double) { return 1.0; }, g, 0),
               std::invalid_argument);
  EXPECT_THROW(nc::cm_check([](double) { return 1.0; }, {1.0}, 4),
               std::invalid_argument);
  EXPECT_THROW(nc::cm_check([](double) { return 1.0; }, {2.0, 1.0}, 4),
               std::invalid_argument);
}

TEST(LevyIntegral, ZeroShiftIsExactlyZero) {
  EXPECT_EQ(qd::levy_integral(2.0, 0.0, tight_policy()), 0.0);
}

TEST(LevyIntegral, MonotoneDecreasingInShift) {
  auto p = tight_policy(2000);
  double prev = 0.0;
  for (double s : {0.5, 1.0, 2.0}) {
    double v = qd::levy_integral(2.0, s, p);
    EXPECT_LT(v, prev) << "s=" << s;
    prev = v;
  }
}

TEST(LevyIntegral, NuZeroComponentHasFrullaniClosedForm) {
  // \int (e^{-s^2 t/2}-1) nu0(t) dt/t = log((alpha-1)/(alpha-1+s)): -log 2
  double alpha = 2.0, s = 1.0;
  auto below = [&](double u) {
    if (u <= 0.0) return 0.0;
    double t = u * u;
    return std::expm1(-0.5 * s * s * t) * nc::nu_zero(alpha, t) * 2.0 / u;
  };
  auto above = [&](double v) {
    if (v > 500.0) return 0.0;
    double t = std::exp(v);
    return std::expm1(-0.5 * s * s * t) * nc::nu_zero(alpha, t);
  };
  auto qa = qd::integrate(below, 0.0, 1.0, 1e-11, 4000);
  auto qb = qd::integrate_to_inf(above, 0.0, 1e-11, 4000);
  EXPECT_NEAR(qa.value + qb.value, -0.69314718055994530942, 1e-8);
}

TEST(LevyIntegral, ReproducesXiRatioExponent) {
  // levy = log(xi(a)/xi(a+s)) + b_a s, frozen from closed-form evaluation
  auto p = tight_policy();
  EXPECT_NEAR(qd::levy_integral(1.5, 1.0, p), -2.0229032428223060913, 5e-9);
  EXPECT_NEAR(qd::levy_integral(2.0, 0.5, p), -0.50569982525972738741, 5e-9);
  EXPECT_NEAR(qd::levy_integral(3.0, 2.0, p), -1.0881547203631481691, 5e-9);
}

TEST(LevyIntegral, CutoffInsensitiveThanksToExactTail) {
  // the Euler-product remainder makes the prime cutoff irrelevant
  double lo = qd::levy_integral(1.5, 1.0, tight_policy(2000));
  double hi = qd::levy_integral(1.5, 1.0, tight_policy(50000));
  EXPECT_NEAR(lo, hi, 3e-9);
}

TEST(LevyIntegral, RejectsBadArguments) {
  EXPECT_THROW(qd::levy_integral(1.0, 1.0, tight_policy()), std::domain_error);
  EXPECT_THROW(qd::levy_integral(2.0, -1.0, tight_policy()), std::domain_error);
}

TEST(ContinuationExponent, MatchesReflectedClosedForm) {
  // the t-integral sees the shift only through sigma^2, so it equals the
  // Re(sigma) > 0 branch: Re log(xi(a)/xi(2a-1/2-is)) + b_a (a-1/2).
  // Frozen closed-form values prove which branch the integral computes.
  auto p = tight_policy();
  EXPECT_NEAR(qd::continuation_exponent(2.0, 0.5, p), -1.5454414597702143367,
              2e-8);
  EXPECT_NEAR(qd::continuation_exponent(3.0, 1.0, p), -1.3663208365718395558,
              2e-8);
}

TEST(ContinuationExponent, ZeroShiftDegeneratesToRealLevy) {
  auto p = tight_policy(2000);
  double d = 1.5;
  EXPECT_NEAR(qd::continuation_exponent(2.0, 0.0, p),
              qd::levy_integral(2.0, d, p), 3e-9);
}

TEST(ContinuationExponent, RejectsOutsideConvergenceStrip) {
  EXPECT_THROW(qd::continuation_exponent(2.0, 1.6, tight_policy()),
               std::domain_error);
  EXPECT_THROW(qd::continuation_exponent(2.0, 1.5, tight_policy()),
               std::domain_error);
}

TEST(BridgeKernel, ClosedFormExamples) {
  // closed form at (1,1) is e^{-1}, at (2,0.5) is 2 e^{-1}
  EXPECT_NEAR((std::expm1(-1.0) + 1.0) / 1.0, 0.36787944117144232160, 1e-16);
  EXPECT_NEAR((std::expm1(-1.0) + 1.0) / 0.5, 0.73575888234288464319, 1e-15);
  EXPECT_LT(qd::bridge_kernel_check(1.0, 1.0), 1e-10);
  EXPECT_LT(qd::bridge_kernel_check(2.0, 0.5), 1e-10);
}

TEST(BridgeKernel, ScaleInvariantFamily) {
  // (s,x) -> (cs, x/c) rescales the identity by c; both members check out
  EXPECT_LT(qd::bridge_kernel_check(0.7, 2.2), 1e-9);
  EXPECT_LT(qd::bridge_kernel_check(2.1, 2.2 / 3.0), 1e-9);
  double c = 3.0;
  double lhs1 = (std::expm1(-0.7 * 2.2) + 0.7 * 2.2) / 2.2;
  double lhs2 = (std::expm1(-2.1 * 2.2 / 3.0) + 2.1 * 2.2 / 3.0) / (2.2 / 3.0);
  EXPECT_NEAR(lhs2, c * lhs1, 1e-14 * lhs2);
}

TEST(BridgeKernel, RejectsNonPositiveArguments) {
  EXPECT_THROW(qd::bridge_kernel_check(0.0, 1.0), std::domain_error);
  EXPECT_THROW(qd::bridge_kernel_check(1.0, -2.0), std::domain_error);
}

}  // namespace
