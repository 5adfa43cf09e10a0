#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "xiggc/types.hpp"

namespace xiggc::numtheory {

// Primality flags for 0..limit by Eratosthenes. vector<bool> keeps the
// footprint at limit/8 bytes, so the 1e8 ceiling costs ~12.5 MB.
inline std::vector<bool> sieve(std::int64_t limit) {
  if (limit < 0 || limit > 100000000)
    throw std::invalid_argument("sieve limit out of [0, 1e8]");
  std::vector<bool> is_prime(static_cast<std::size_t>(limit) + 1, true);
  if (limit >= 0) is_prime[0] = false;
  if (limit >= 1) is_prime[1] = false;
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    if (!is_prime[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t q = p * p; q <= limit; q += p)
      is_prime[static_cast<std::size_t>(q)] = false;
  }
  return is_prime;
}

namespace detail {

// k^r with saturation; returns -1 on overflow past 2^62.
inline std::int64_t ipow_checked(std::int64_t k, int r) {
  std::int64_t acc = 1;
  const std::int64_t cap = std::int64_t{1} << 62;
  for (int i = 0; i < r; ++i) {
    if (acc > cap / k) return -1;
    acc *= k;
  }
  return acc;
}

inline bool is_prime_trial(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

// von Mangoldt Lambda(n): log p when n = p^r for prime p, else 0.
// The prime-power test extracts candidate integer roots k ~ n^{1/r} for
// descending r and re-checks k^r == n exactly in integer arithmetic; the
// largest working r gives the smallest base, which is prime iff n is a
// prime power.
inline double von_mangoldt(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("von_mangoldt requires n >= 1");
  if (n < 2) return 0.0;
  int max_r = 0;
  while ((std::int64_t{1} << (max_r + 1)) <= n) ++max_r;
  for (int r = max_r; r >= 2; --r) {
    std::int64_t k = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / r)));
    for (std::int64_t cand = std::max<std::int64_t>(2, k - 1); cand <= k + 1; ++cand) {
      if (detail::ipow_checked(cand, r) == n)
        return detail::is_prime_trial(cand) ? std::log(static_cast<double>(cand)) : 0.0;
    }
  }
  return detail::is_prime_trial(n) ? std::log(static_cast<double>(n)) : 0.0;
}

// Atomic prime-power measure: one atom at x = log n with weight Lambda(n)
// for every prime power n = p^r <= cutoff (zero-weight n omitted). Atoms are
// sorted by position. `alpha` is part of the call signature for symmetry
// with the density evaluators but does not enter the stored measure: the
// e^{-alpha x} damping is applied by consumers.
inline AtomicMeasure mu_zeta_atoms(double alpha, std::int64_t cutoff) {
  (void)alpha;
  if (cutoff < 2) throw std::invalid_argument("mu_zeta_atoms requires cutoff >= 2");
  std::vector<bool> is_prime = sieve(cutoff);
  std::vector<std::pair<std::int64_t, double>> raw;  // (n, log p)
  raw.reserve(80000);
  for (std::int64_t p = 2; p <= cutoff; ++p) {
    if (!is_prime[static_cast<std::size_t>(p)]) continue;
    double logp = std::log(static_cast<double>(p));
    for (std::int64_t q = p; q <= cutoff; q *= p) {
      raw.emplace_back(q, logp);
      if (q > cutoff / p) break;  // next q would overflow past cutoff anyway
    }
  }
  std::sort(raw.begin(), raw.end());
  AtomicMeasure m;
  m.atoms.reserve(raw.size());
  for (const auto& [n, w] : raw)
    m.atoms.push_back({std::log(static_cast<double>(n)), w});
  return m;
}

// Chebyshev psi(x) = sum_{n <= x} Lambda(n), by direct sieve-backed sum.
inline double chebyshev_psi(std::int64_t x) {
  if (x < 1) return 0.0;
  AtomicMeasure m = mu_zeta_atoms(0.0, std::max<std::int64_t>(2, x));
  KahanSum s;
  for (const auto& a : m.atoms) s.add(a.w);
  return s.value();
}

// Certified bound on the dropped tail sum_{n > cutoff} Lambda(n) n^{-alpha},
// from psi(x) <= 1.04 x and partial summation. Requires alpha > 1.
inline double lambda_tail_bound(double alpha, std::int64_t cutoff) {
  if (!(alpha > 1.0)) throw std::domain_error("lambda tail bound requires alpha > 1");
  return 1.04 * alpha / (alpha - 1.0) *
         std::pow(static_cast<double>(cutoff), 1.0 - alpha);
}

}  // namespace xiggc::numtheory
