#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "mfa/errors.hpp"

namespace mfa {

inline constexpr double kDefaultTol = 1e-13;

// max_i x_i + log sum_i exp(x_i - max); -inf entries drop out.
inline double log_sum_exp(std::span<const double> xs) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double x : xs) mx = std::max(mx, x);
  if (!std::isfinite(mx)) return mx;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - mx);
  return mx + std::log(acc);
}

inline double sup_norm(std::span<const double> xs) {
  double mx = 0.0;
  for (double x : xs) mx = std::max(mx, std::abs(x));
  return mx;
}

inline double sup_dist(std::span<const double> a, std::span<const double> b) {
  double mx = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) mx = std::max(mx, std::abs(a[i] - b[i]));
  return mx;
}

// -sum p log p in nats; zero entries contribute nothing.
inline double entropy_nat(std::span<const double> p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

// -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0.
inline double binary_entropy_bits(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -(x * std::log2(x) + (1.0 - x) * std::log2(1.0 - x));
}

inline double mean_of(std::span<const double> xs) {
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

inline double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = mean_of(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - mu) * (x - mu);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

// Row-major n x n linear solve by Gaussian elimination with partial pivoting.
// A and b are consumed.
inline std::vector<double> solve_linear(std::vector<double> A, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(A[r * n + col]) > std::abs(A[piv * n + col])) piv = r;
    if (A[piv * n + col] == 0.0) throw SolverFailureError("singular linear system");
    if (piv != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
      std::swap(b[piv], b[col]);
    }
    const double d = A[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = A[r * n + col] / d;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t ri = n; ri-- > 0;) {
    double acc = b[ri];
    for (std::size_t c = ri + 1; c < n; ++c) acc -= A[ri * n + c] * x[c];
    x[ri] = acc / A[ri * n + ri];
  }
  return x;
}

// Bracketed root finding, Brent style (inverse quadratic / secant with
// bisection safeguard). Requires f(a) and f(b) of opposite sign (or zero).
// Convergence is xtol plus a few ulps of the current estimate, so huge
// initial brackets still resolve small roots fully.
template <class F>
double brent_root(F&& f, double a, double b, double xtol, int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw InvalidInputError("brent_root: no sign change in bracket");
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa, d = b - a;
  bool mflag = true;
  const auto done = [&] {
    return std::abs(b - a) <= xtol + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
  };
  for (int it = 0; it < max_iter; ++it) {
    if (fb == 0.0 || done()) return b;
    double s;
    if (fa != fc && fb != fc) {
      s = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);
    }
    const double lo = (3.0 * a + b) / 4.0;
    const bool outside = (s < std::min(lo, b)) || (s > std::max(lo, b));
    if (outside || (mflag && std::abs(s - b) >= 0.5 * std::abs(b - c)) ||
        (!mflag && std::abs(s - b) >= 0.5 * std::abs(c - d)) ||
        (mflag && std::abs(b - c) < xtol) || (!mflag && std::abs(c - d) < xtol)) {
      s = 0.5 * (a + b);
      mflag = true;
    } else {
      mflag = false;
    }
    const double fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if (fa * fs < 0.0) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::abs(fa) < std::abs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  return b;
}

// splitmix64 finalizer; used to derive independent per-stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(master + 0x9E3779B97F4A7C15ull * (stream + 1));
}

// 53-bit uniform in [0, 1); avoids the implementation-defined
// std::uniform_real_distribution so that runs are reproducible everywhere.
inline double canonical_u01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace mfa
