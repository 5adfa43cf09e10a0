#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xiggc/types.hpp"

namespace xiggc::zeros {

inline constexpr double two_pi = 6.28318530717958647692;

// Ordinates tau_k of the nontrivial zeros 1/2 + i*tau_k, strictly ascending.
// Always loaded from an external table, never computed here.
struct ZerosTable {
  std::vector<double> ordinates;
  std::string source_path;

  std::int64_t count() const {
    return static_cast<std::int64_t>(ordinates.size());
  }
};

// Parses one positive decimal per line; '#'-prefixed lines and blank lines
// are skipped; CRLF tolerated. Rejects non-numeric, non-positive, and
// non-ascending entries with the offending 1-based line number, and requires
// the first ordinate to be the known 14.13... (guards against importing a
// file that does not start at the first zero).
inline ZerosTable load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open zeros file: " + path);
  ZerosTable table;
  table.source_path = path;
  std::string line;
  long line_no = 0;
  long first_value_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t parsed = 0;
    double value = 0.0;
    try {
      value = std::stod(line.substr(start), &parsed);
    } catch (const std::exception&) {
      throw ZerosFormatError("not a decimal number", line_no);
    }
    std::size_t rest = line.find_first_not_of(" \t", start + parsed);
    if (rest != std::string::npos)
      throw ZerosFormatError("trailing characters after number", line_no);
    if (!std::isfinite(value) || value <= 0.0)
      throw ZerosFormatError("ordinate must be a positive finite real",
                             line_no);
    if (!table.ordinates.empty() && value <= table.ordinates.back())
      throw ZerosFormatError("ordinates must be strictly ascending", line_no);
    if (table.ordinates.empty()) first_value_line = line_no;
    table.ordinates.push_back(value);
  }
  if (table.ordinates.empty())
    throw ZerosFormatError("file contains no ordinates", line_no);
  if (!(table.ordinates.front() > 14.0 && table.ordinates.front() < 15.0))
    throw ZerosFormatError("first ordinate outside (14, 15); table must "
                           "start at the first zero",
                           first_value_line);
  return table;
}

// Main term of the zero-counting function: (T/2pi)log(T/2pi) - T/2pi + 7/8.
// Used only for truncation tail estimates, so the oscillating remainder
// (bounded by ~2 over the bundled range) is acceptable.
inline double zero_count_estimate(double T) {
  if (!(T > 20.0)) throw std::domain_error("zero_count_estimate requires T > 20");
  double x = T / two_pi;
  return x * std::log(x) - x + 0.875;
}

// Estimated sum of tau^-2 over zeros above tau_n, integrating t^-2 against
// the counting density log(t/2pi)/2pi:  (log(tau_n/2pi) + 1) / (2pi tau_n).
inline double inverse_square_tail(double tau_n) {
  if (!(tau_n > 20.0))
    throw std::domain_error("inverse_square_tail requires tau_n > 20");
  return (std::log(tau_n / two_pi) + 1.0) / (two_pi * tau_n);
}

// Truncated Hadamard product prod_{k<=N} tau_k^2/(tau_k^2 + s^2); with
// tail_correct the omitted factors are compensated by
// exp(-s^2 * inverse_square_tail(tau_N)).
inline double hadamard_ratio(double s, const ZerosTable& table,
                             std::int64_t n_zeros, bool tail_correct) {
  if (n_zeros < 0 || n_zeros > table.count())
    throw std::out_of_range("hadamard_ratio: n_zeros exceeds table size");
  double product = 1.0;
  for (std::int64_t k = 0; k < n_zeros; ++k) {
    double t2 = table.ordinates[static_cast<std::size_t>(k)];
    t2 *= t2;
    product *= t2 / (t2 + s * s);
  }
  if (tail_correct && n_zeros > 0) {
    double tau_n = table.ordinates[static_cast<std::size_t>(n_zeros - 1)];
    product *= std::exp(-s * s * inverse_square_tail(tau_n));
  }
  return product;
}

// GGC Laplace exponent phi(s) = sum w_j log(1 + s/z_j). With atoms z = tau^2,
// w = 1 and argument s^2, exp(-phi) equals the uncorrected Hadamard product.
inline double ggc_exponent(const DiscreteThorinMeasure& measure, double s) {
  if (!(s >= 0.0)) throw std::domain_error("ggc_exponent requires s >= 0");
  KahanSum sum;
  for (const DiscreteThorinMeasure::Atom& a : measure.atoms)
    sum.add(a.w * std::log1p(s / a.z));
  return sum.value();
}

// Thorin measure of the truncated zero set: unit mass at each tau_k^2.
inline DiscreteThorinMeasure measure_from_zeros(const ZerosTable& table,
                                                std::int64_t n_zeros) {
  if (n_zeros < 1 || n_zeros > table.count())
    throw std::out_of_range("measure_from_zeros: n_zeros out of range");
  DiscreteThorinMeasure measure;
  measure.atoms.reserve(static_cast<std::size_t>(n_zeros));
  for (std::int64_t k = 0; k < n_zeros; ++k) {
    double tau = table.ordinates[static_cast<std::size_t>(k)];
    measure.atoms.push_back({tau * tau, 1.0});
  }
  measure.validate();
  return measure;
}

}  // namespace xiggc::zeros
