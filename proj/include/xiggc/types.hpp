#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xiggc {

// Thrown when a requested accuracy cannot be certified (e.g. a series tail
// bound exceeds the tolerance the caller asked for).
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown by the zeros-table parser; `line` is the 1-based offending line.
class ZerosFormatError : public std::runtime_error {
 public:
  ZerosFormatError(const std::string& msg, long line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
  long line;
};

// Shared truncation/accuracy knobs. One instance is threaded through every
// operation that truncates a prime sum or runs adaptive quadrature, so paired
// computations (e.g. a Levy density and its Thorin kernel) cut off at the
// same index and their truncation errors cancel in consistency checks.
struct TruncationPolicy {
  std::int64_t prime_cutoff = 100000;  // include Lambda(n) for n <= cutoff
  double quad_rel_tol = 1e-10;         // adaptive quadrature relative target
  int quad_max_subdiv = 4000;          // interval splits before giving up
  int cm_max_order = 8;                // finite-difference order bound
  int zero_count = 100;                // zeros used by Hadamard/sampling ops

  void validate() const {
    if (prime_cutoff < 2 || prime_cutoff > 100000000)
      throw std::invalid_argument("prime_cutoff out of [2, 1e8]");
    if (!(quad_rel_tol >= 1e-14 && quad_rel_tol <= 1e-2))
      throw std::invalid_argument("quad_rel_tol out of [1e-14, 1e-2]");
    if (quad_max_subdiv < 1)
      throw std::invalid_argument("quad_max_subdiv must be positive");
    if (cm_max_order < 1 || cm_max_order > 12)
      throw std::invalid_argument("cm_max_order out of [1, 12]");
    if (zero_count < 1)
      throw std::invalid_argument("zero_count must be positive");
  }
};

// Result of one adaptive quadrature run. `converged` is false when the
// subdivision budget ran out; the partial value is still reported.
struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = true;
};

// Purely atomic measure on (0, infinity): positions strictly increasing,
// weights strictly positive. Used for the prime-power measure, where the
// atom at log n carries weight Lambda(n); exponential damping e^{-alpha x}
// is applied by consumers, never stored.
struct AtomicMeasure {
  struct Atom {
    double x;  // position
    double w;  // weight
  };
  std::vector<Atom> atoms;

  void validate() const {
    double prev = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (!(atoms[i].x > prev))
        throw std::invalid_argument("atom positions must be positive and strictly increasing");
      if (!(atoms[i].w > 0.0))
        throw std::invalid_argument("atom weights must be positive");
      prev = atoms[i].x;
    }
  }
};

// Discrete Thorin measure: atoms at z_j > 0 with weights w_j > 0.
// For the xi-function instance, z_j = tau_j^2 (squared zero ordinates)
// with unit weights. sum w_j / z_j is the mean of the induced GGC variable.
struct DiscreteThorinMeasure {
  struct Atom {
    double z;
    double w;
  };
  std::vector<Atom> atoms;

  void validate() const {
    for (const Atom& a : atoms)
      if (!(a.z > 0.0) || !(a.w > 0.0))
        throw std::invalid_argument("Thorin atoms require z > 0 and w > 0");
  }

  double mean() const {
    double m = 0.0;
    for (const Atom& a : atoms) m += a.w / a.z;
    return m;
  }
};

// n points from a to b inclusive with constant ratio; the workhorse grid for
// scans over scale-like parameters (t, s, z).
inline std::vector<double> geometric_grid(double a, double b, int n) {
  if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("geometric_grid requires 0 < a < b");
  if (n < 2) throw std::invalid_argument("geometric_grid requires n >= 2");
  std::vector<double> g(n);
  double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(la + (lb - la) * i / (n - 1));
  g.front() = a;
  g.back() = b;
  return g;
}

// Compensated accumulator (Kahan). All long series in the library sum
// through this so results are reproducible to the last bit across runs.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace xiggc
