#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <type_traits>

#include "xiggc/numtheory.hpp"
#include "xiggc/types.hpp"

namespace xiggc::specfun {

inline constexpr double euler_gamma = 0.5772156649015328606;
inline constexpr double ln_pi = 1.1447298858494001741;
inline constexpr double ln_2 = 0.6931471805599453094;

// Constants of the completed zeta function xi(s) = (s-1) pi^{-s/2} Gamma(1+s/2) zeta(s):
// xi(0) = xi(1) = 1/2, and the logarithmic derivative at 0 equals
// b0 = log(4 pi)/2 - 1 - euler_gamma/2.
struct XiConstants {
  double xi_zero = 0.5;
  double b0 = -0.0230957089661210338;
  double euler_gamma = 0.5772156649015328606;
};

inline constexpr XiConstants xi_constants{};

namespace detail {

// 13-term Lanczos rational, g = 6.024680040776729583740234375.
// Max experimental error 1.196e-17 evaluated in double.
inline constexpr double lanczos_g = 6.024680040776729583740234375;

template <class T>
T lanczos_sum(const T& z) {
  static const double num[13] = {
      23531376880.410759688572007674451636754734846804940,
      42919803642.649098768957899047001988850926355848959,
      35711959237.355668049440185451547166705960488635843,
      17921034426.037209699919755754458931112671403265390,
      6039542586.3520280050642916443603408145953504968225,
      1439720407.3117216736632230727949123939715485786772,
      248874557.86205415651146038641322942321632125127801,
      31426415.585400194380614231628318205362874684987640,
      2876370.6289353724412254090516208496135991145378768,
      186056.26539522349504029498971604569928220784236328,
      8071.6720023658162106380029022722506138218516325024,
      210.82427775157934587250973392071336271166969580291,
      2.5066282746310002701649081771338373386264310793408};
  static const double den[13] = {
      0.0, 39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0,
      13339535.0, 2637558.0, 357423.0, 32670.0, 1925.0, 66.0, 1.0};
  T p = T(num[12]);
  T q = T(den[12]);
  for (int i = 11; i >= 0; --i) {
    p = p * z + T(num[i]);
    q = q * z + T(den[i]);
  }
  return p / q;
}

}  // namespace detail

// log Gamma(x) for x > 0, via the 13-term Lanczos rational. Relative error
// a few 1e-15 away from the zeros of log Gamma; returns exactly 0 at 1 and 2.
inline double gamma_ln(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_ln requires x > 0");
  if (x == 1.0 || x == 2.0) return 0.0;
  double t = x + detail::lanczos_g - 0.5;
  return std::log(detail::lanczos_sum(x)) + (x - 0.5) * std::log(t) - t;
}

// Principal-branch log Gamma on the right half plane (used on the critical
// line, where the arguments keep Re z >= 1). Same Lanczos rational evaluated
// in complex arithmetic.
inline std::complex<double> gamma_ln(std::complex<double> z) {
  if (!(z.real() > 0.0))
    throw std::domain_error("complex gamma_ln requires Re z > 0");
  std::complex<double> t = z + (detail::lanczos_g - 0.5);
  return std::log(detail::lanczos_sum(z)) + (z - 0.5) * std::log(t) - t;
}

// digamma(x) for x > 0: recurrence up to x >= 12, then the asymptotic series
// with Bernoulli coefficients through B14 (next term is below 1e-17 there).
inline double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma requires x > 0");
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  static const double c[7] = {1.0 / 12.0,   -1.0 / 120.0,    1.0 / 252.0,
                              -1.0 / 240.0, 1.0 / 132.0,     -691.0 / 32760.0,
                              1.0 / 12.0};
  double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double pw = inv2;
  for (int k = 0; k < 7; ++k) {
    series += c[k] * pw;
    pw *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - series;
}

// Complementary error function; the standard library implementation is
// accurate to a few ulp over the needed range.
inline double erfc(double x) { return std::erfc(x); }

// Scaled complement erfcx(x) = e^{x^2} erfc(x), overflow-free for all x >= 0.
// Small x: direct product (e^{x^2} representable). Large x: the classical
// continued fraction, evaluated by the modified Lentz scheme.
inline double erfcx(double x) {
  if (!(x >= 0.0)) throw std::domain_error("erfcx requires x >= 0");
  if (x < 4.5) return std::exp(x * x) * std::erfc(x);
  const double tiny = 1e-300;
  double f = x, C = x, D = 0.0;
  for (int n = 1; n <= 300; ++n) {
    double a = 0.5 * n;
    D = x + a * D;
    if (D == 0.0) D = tiny;
    C = x + a / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return 1.0 / (1.7724538509055160273 * f);  // 1 / (sqrt(pi) * f)
}

namespace detail {

// Euler-Maclaurin machinery for zeta and zeta' at real s > 1:
// zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//           + sum_{k=1}^{8} B_{2k}/(2k)! (s)(s+1)...(s+2k-2) N^{-s-2k+1}.
// With N = 24 the first omitted term stays below 1e-24 relative for all s > 1.
inline constexpr int em_n = 24;
inline constexpr int em_terms = 8;
// B_{2k}/(2k)! for k = 1..8
inline constexpr double em_coeff[8] = {
    8.3333333333333333333e-02,  -1.3888888888888888889e-03,
    3.3068783068783068783e-05,  -8.2671957671957671958e-07,
    2.0876756987868098979e-08,  -5.2841901386874931848e-10,
    1.3382536530684678833e-11,  -3.3896802963225828668e-13};

struct EmPair {
  double zeta;
  double deriv;  // zeta'(s)
};

inline EmPair zeta_em_pair(double s) {
  const double n = static_cast<double>(em_n);
  const double ln_n = std::log(n);
  KahanSum sum, dsum;
  sum.add(1.0);
  for (int k = 2; k < em_n; ++k) {
    double lk = std::log(static_cast<double>(k));
    double term = std::exp(-s * lk);
    sum.add(term);
    dsum.add(-lk * term);
  }
  double npow = std::exp(-s * ln_n);  // N^{-s}
  double integral = npow * n / (s - 1.0);
  sum.add(integral);
  dsum.add(-integral * (ln_n + 1.0 / (s - 1.0)));
  sum.add(0.5 * npow);
  dsum.add(-0.5 * ln_n * npow);
  // correction terms: c_k * P_k(s) * N^{-s-2k+1}, P_k(s) = s(s+1)...(s+2k-2)
  double p = s;          // running product
  double dp_over_p = 1.0 / s;  // sum of reciprocals, P'/P
  double scale = npow / n;     // N^{-s-1}
  for (int k = 1; k <= em_terms; ++k) {
    double term = em_coeff[k - 1] * p * scale;
    sum.add(term);
    dsum.add(term * (dp_over_p - ln_n));
    if (k < em_terms) {
      p *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
      dp_over_p += 1.0 / (s + 2.0 * k - 1.0) + 1.0 / (s + 2.0 * k);
      scale /= n * n;
    }
  }
  return {sum.value(), dsum.value()};
}

}  // namespace detail

// Riemann zeta at real alpha > 1 (guarded at 1 + 1e-9), Euler-Maclaurin with
// eight Bernoulli correction terms; relative error below 1e-13 everywhere.
inline double zeta(double alpha) {
  if (!(alpha >= 1.0 + 1e-9))
    throw std::domain_error("zeta requires alpha >= 1 + 1e-9");
  return detail::zeta_em_pair(alpha).zeta;
}

// zeta'(alpha) for alpha > 1, by term-wise analytic differentiation of the
// same Euler-Maclaurin formula (no truncated prime sums involved).
inline double zeta_deriv(double alpha) {
  if (!(alpha >= 1.0 + 1e-9))
    throw std::domain_error("zeta_deriv requires alpha >= 1 + 1e-9");
  return detail::zeta_em_pair(alpha).deriv;
}

// zeta'/zeta(alpha) at full working precision (Euler-Maclaurin route).
inline double zeta_log_deriv_em(double alpha) {
  auto p = detail::zeta_em_pair(alpha);
  return p.deriv / p.zeta;
}

namespace detail {

// Alternating-series acceleration of Cohen-Rodriguez Villegas-Zagier for the
// Dirichlet eta function. The scheme converges like (3+sqrt(8))^{-n}; on the
// critical line the bound carries an extra e^{pi |t| / 2}, which sets the
// term count below.
inline int eta_terms(double abs_im) {
  double need = 17.0 * 2.302585092994046 + abs_im * 1.5707963267948966;
  int n = static_cast<int>(need / 1.7627471740390861) + 12;
  return n < 40 ? 40 : n;
}

template <class T>
T eta_cvz(const T& s, int n) {
  double d = std::pow(3.0 + 2.0 * 1.4142135623730951, n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d;
  KahanSum re, im;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    T a = std::exp(-s * std::log(static_cast<double>(k + 1)));
    if constexpr (std::is_same_v<T, double>) {
      re.add(c * a);
    } else {
      re.add(c * a.real());
      im.add(c * a.imag());
    }
    b *= static_cast<double>(k + n) * static_cast<double>(k - n) /
         ((k + 0.5) * (k + 1.0));
  }
  if constexpr (std::is_same_v<T, double>) {
    return re.value() / d;
  } else {
    return T(re.value() / d, im.value() / d);
  }
}

inline double eta(double sigma) { return eta_cvz(sigma, eta_terms(0.0)); }

inline std::complex<double> eta(std::complex<double> s) {
  return eta_cvz(s, eta_terms(std::abs(s.imag())));
}

// (s-1)/(1 - 2^{1-s}) without the removable singularity at s = 1:
// with u = (1-s) ln 2 this is u / (ln2 * expm1(u)).
inline double pole_ratio(double sigma) {
  double u = (1.0 - sigma) * ln_2;
  if (u == 0.0) return 1.0 / ln_2;
  return u / (ln_2 * std::expm1(u));
}

}  // namespace detail

// Completed zeta function xi(s) = (s-1) pi^{-s/2} Gamma(1+s/2) zeta(s) at
// real s, entire with xi(s) = xi(1-s). Negative arguments reflect; on [0, 2)
// the pole of zeta is cancelled analytically through the eta series, so the
// evaluation is smooth across s = 1; beyond 2 the Euler-Maclaurin zeta is
// used directly.
inline double xi_real(double sigma) {
  if (!std::isfinite(sigma)) throw std::domain_error("xi_real requires finite sigma");
  if (sigma < 0.0) sigma = 1.0 - sigma;
  double g = std::exp(gamma_ln(1.0 + 0.5 * sigma));
  double pis = std::exp(-0.5 * sigma * ln_pi);
  if (sigma < 2.0)
    return detail::eta(sigma) * detail::pole_ratio(sigma) * pis * g;
  return (sigma - 1.0) * zeta(sigma) * pis * g;
}

// zeta at a complex point through the eta series. The alternating series
// converges everywhere relevant; the 1 - 2^{1-z} division is only ill-posed
// near z = 1, far from the Re z >= 1.1 domain accepted here.
inline std::complex<double> zeta(std::complex<double> z) {
  if (!(z.real() >= 1.1))
    throw std::domain_error("complex zeta path requires Re z >= 1.1");
  std::complex<double> denom = 1.0 - std::exp((1.0 - z) * ln_2);
  return detail::eta(z) / denom;
}

// xi at a complex point with Re z >= 1.1 (off the zeta pole and zero set).
inline std::complex<double> xi_complex(std::complex<double> z) {
  std::complex<double> g = std::exp(gamma_ln(1.0 + 0.5 * z));
  std::complex<double> pis = std::exp(-0.5 * z * ln_pi);
  return (z - 1.0) * zeta(z) * pis * g;
}

// xi on the critical line: value and the natural magnitude scale of the
// assembled product (used to judge how small the imaginary residual of a
// nominally real result must be).
struct XiCriticalValue {
  std::complex<double> value;
  double scale;  // |s-1| pi^{-1/4} |Gamma(1+z/2)|, the prefactor magnitude
};

inline XiCriticalValue xi_critical_full(double s) {
  if (!(std::abs(s) <= 200.0))
    throw std::domain_error("xi_critical supports |s| <= 200");
  std::complex<double> z(0.5, s);
  std::complex<double> u = (1.0 - z) * ln_2;
  std::complex<double> denom = -(std::exp(u) - 1.0);  // 1 - 2^{1-z}
  std::complex<double> lg = gamma_ln(1.0 + 0.5 * z);
  std::complex<double> pref = std::exp(lg - 0.5 * z * ln_pi);
  std::complex<double> val = detail::eta(z) * (z - 1.0) / denom * pref;
  double scale = std::abs(z - 1.0) * std::exp(lg.real() - 0.125 * ln_pi);
  return {val, scale};
}

// xi(1/2 + i s), which is real for real s. The imaginary part of the
// assembled complex product must vanish to rounding; the check is relative
// to the value with an absolute floor tied to the prefactor magnitude so
// that points near zeros of zeta (where the value itself collapses) do not
// trip it spuriously.
inline double xi_critical(double s) {
  XiCriticalValue v = xi_critical_full(s);
  double tol = 1e-9 * std::max(std::abs(v.value), 1e-3 * v.scale);
  if (std::abs(v.value.imag()) > tol)
    throw PrecisionError("xi_critical imaginary residual exceeds threshold");
  return v.value.real();
}

// Truncated sum with a certified bound on what was dropped.
struct TruncatedSum {
  double value;
  double tail_bound;
};

// zeta'/zeta(alpha) = -sum_{n >= 2} Lambda(n) n^{-alpha}, truncated at the
// policy's prime cutoff. The dropped tail is bounded by
// 1.04 alpha/(alpha-1) N^{1-alpha} (partial summation against psi(x) <= 1.04x).
inline TruncatedSum zeta_log_deriv_series(double alpha, const AtomicMeasure& atoms,
                                          std::int64_t cutoff) {
  if (!(alpha > 1.0)) throw std::domain_error("zeta_log_deriv requires alpha > 1");
  KahanSum s;
  for (const auto& a : atoms.atoms) s.add(a.w * std::exp(-alpha * a.x));
  return {-s.value(), numtheory::lambda_tail_bound(alpha, cutoff)};
}

inline TruncatedSum zeta_log_deriv_series(double alpha, const TruncationPolicy& policy) {
  AtomicMeasure atoms = numtheory::mu_zeta_atoms(alpha, policy.prime_cutoff);
  return zeta_log_deriv_series(alpha, atoms, policy.prime_cutoff);
}

inline double zeta_log_deriv(double alpha, const TruncationPolicy& policy) {
  return zeta_log_deriv_series(alpha, policy).value;
}

// Logarithmic derivative of xi at real alpha > 1:
// xi'/xi(alpha) = 1/(alpha-1) - log(pi)/2 + zeta'/zeta(alpha) + digamma(1+alpha/2)/2.
// The zeta'/zeta term uses the Euler-Maclaurin route, so no truncation error
// enters here.
inline double xi_log_deriv(double alpha) {
  if (!(alpha > 1.0)) throw std::domain_error("xi_log_deriv requires alpha > 1");
  return 1.0 / (alpha - 1.0) - 0.5 * ln_pi + zeta_log_deriv_em(alpha) +
         0.5 * digamma(1.0 + 0.5 * alpha);
}

// Same quantity with the prime-sum route for zeta'/zeta; carries the
// truncation bound so callers can certify their own tolerance.
inline TruncatedSum xi_log_deriv_truncated(double alpha, const TruncationPolicy& policy) {
  TruncatedSum z = zeta_log_deriv_series(alpha, policy);
  double v = 1.0 / (alpha - 1.0) - 0.5 * ln_pi + z.value +
             0.5 * digamma(1.0 + 0.5 * alpha);
  return {v, z.tail_bound};
}

// Drift coefficient of the exponent representation: b_alpha = xi'/xi(alpha) - 1/(alpha-1).
inline double b_alpha(double alpha) {
  return -0.5 * ln_pi + zeta_log_deriv_em(alpha) + 0.5 * digamma(1.0 + 0.5 * alpha);
}

}  // namespace xiggc::specfun
