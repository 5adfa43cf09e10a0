#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "xiggc/types.hpp"

namespace xiggc::sampler {

namespace detail {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer. Counter-based use below makes every draw a pure
// function of (seed, atom index, sample index), so batches are reproducible
// under any evaluation order.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// Uniform in (0,1), never returning either endpoint: top 53 bits + half-ulp.
inline double uniform01(std::uint64_t r) {
  return (static_cast<double>(r >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace detail

// One Monte-Carlo realization batch of H = sum_j w_j Exp(z_j) (+ constant).
// Invariant: same (measure, n, seed, tail_mean) reproduces values bit for bit.
struct SampleBatch {
  std::uint64_t seed = 0;
  std::int64_t n = 0;
  double tail_mean = 0.0;
  std::vector<double> values;
};

// Draws n samples of the GGC variable defined by the atomic Thorin measure:
// each sample is sum_j w_j * E_{j,i} with E_{j,i} ~ Exp(z_j), plus the
// deterministic tail-mean constant the caller supplies to compensate a
// truncated atom list (0 when comparing against the truncated product).
// Substream rule: atom j draws from counter stream mix64(base_j + (i+1)*g),
// base_j = mix64(seed + (j+1)*g), g the SplitMix64 golden gamma.
inline SampleBatch sample_ggc(const DiscreteThorinMeasure& measure,
                              std::int64_t n, std::uint64_t seed,
                              double tail_mean = 0.0) {
  if (n < 1) throw std::invalid_argument("sample_ggc requires n >= 1");
  if (measure.atoms.empty())
    throw std::invalid_argument("sample_ggc requires at least one atom");
  if (!(tail_mean >= 0.0))
    throw std::invalid_argument("sample_ggc requires tail_mean >= 0");
  measure.validate();
  SampleBatch batch;
  batch.seed = seed;
  batch.n = n;
  batch.tail_mean = tail_mean;
  batch.values.assign(static_cast<std::size_t>(n), tail_mean);
  for (std::size_t j = 0; j < measure.atoms.size(); ++j) {
    const DiscreteThorinMeasure::Atom& atom = measure.atoms[j];
    std::uint64_t base =
        detail::mix64(seed + (static_cast<std::uint64_t>(j) + 1) *
                                 detail::golden_gamma);
    double scale = atom.w / atom.z;
    for (std::int64_t i = 0; i < n; ++i) {
      std::uint64_t r =
          detail::mix64(base + (static_cast<std::uint64_t>(i) + 1) *
                                   detail::golden_gamma);
      batch.values[static_cast<std::size_t>(i)] -=
          scale * std::log(detail::uniform01(r));
    }
  }
  return batch;
}

struct LtEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

// Empirical Laplace transform mean(exp(-s^2 H_i)) with its standard error,
// for comparison against the analytic product over the same atoms.
inline LtEstimate empirical_lt(const SampleBatch& batch, double s) {
  if (!(s >= 0.0)) throw std::domain_error("empirical_lt requires s >= 0");
  if (batch.values.empty())
    throw std::invalid_argument("empirical_lt requires a nonempty batch");
  double s2 = s * s;
  KahanSum sum;
  for (double h : batch.values) sum.add(std::exp(-s2 * h));
  double n = static_cast<double>(batch.values.size());
  double mean = sum.value() / n;
  if (batch.values.size() == 1) return {mean, 0.0};
  KahanSum sq;
  for (double h : batch.values) {
    double d = std::exp(-s2 * h) - mean;
    sq.add(d * d);
  }
  double variance = sq.value() / (n - 1.0);
  return {mean, std::sqrt(variance / n)};
}

}  // namespace xiggc::sampler
