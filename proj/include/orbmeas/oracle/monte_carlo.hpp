#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "orbmeas/errors.hpp"
#include "orbmeas/oracle/haar.hpp"
#include "orbmeas/oracle/jacobi.hpp"
#include "orbmeas/oracle/rng.hpp"
#include "orbmeas/operators.hpp"
#include "orbmeas/polynomial.hpp"

namespace orbmeas::oracle {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct ComparisonReport {
  double exact = 0.0;
  McEstimate estimate;
  double zscore = 0.0;
  bool pass = false;
  double threshold = 4.0;
};

/// Samples per RNG stream. Part of the reproducibility contract: results
/// depend on (seed, samples, chunk size) only, never on the thread count.
inline constexpr std::uint64_t kChunkSize = 4096;

struct SamplingOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

// Welford accumulator with Chan's pairwise merge.
struct RunningStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  void merge(const RunningStats& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double n1 = static_cast<double>(count), n2 = static_cast<double>(o.count);
    const double d = o.mean - mean;
    const double n = n1 + n2;
    mean += d * n2 / n;
    m2 += o.m2 + d * d * n1 * n2 / n;
    count += o.count;
  }
};

// Runs `sample(rng, out)` `opts.samples` times, where `out` receives one
// value per observable; chunks are merged in index order.
template <class Sampler>
std::vector<McEstimate> run_chunks(std::size_t observables, const SamplingOptions& opts, Sampler sample) {
  if (opts.samples < 2) throw DomainError("Monte-Carlo estimates need at least 2 samples");
  const std::uint64_t chunks = (opts.samples + kChunkSize - 1) / kChunkSize;
  std::vector<std::vector<RunningStats>> partial(chunks, std::vector<RunningStats>(observables));

  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    std::vector<double> values(observables);
    for (std::uint64_t c = first; c < chunks; c += stride) {
      Rng rng(chunk_seed(opts.seed, c));
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t end = std::min(opts.samples, begin + kChunkSize);
      for (std::uint64_t s = begin; s < end; ++s) {
        sample(rng, values);
        for (std::size_t k = 0; k < observables; ++k) partial[c][k].add(values[k]);
      }
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  std::vector<McEstimate> out(observables);
  for (std::size_t k = 0; k < observables; ++k) {
    RunningStats total;
    for (const auto& chunk : partial) total.merge(chunk[k]);
    const double n = static_cast<double>(total.count);
    const double var = total.count > 1 ? total.m2 / (n - 1.0) : 0.0;
    out[k] = McEstimate{total.mean, std::sqrt(std::max(var, 0.0) / n), total.count, opts.seed};
  }
  return out;
}

inline std::vector<double> to_doubles(const Point& p) {
  std::vector<double> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i].get_d();
  return v;
}

inline void check_traceless(int n, const Point& a) {
  if (n < 2 || n > 8) throw DomainError("oracle supports 2 <= n <= 8");
  if (a.size() != static_cast<std::size_t>(n)) throw DimensionMismatch(static_cast<std::size_t>(n), a.size());
  if (a.sum() != 0) throw TraceNotZero();
}

inline std::vector<CompiledPolynomial> compile_all(int n, std::span<const Polynomial> fs) {
  std::vector<CompiledPolynomial> out;
  for (const auto& f : fs) {
    if (f.nvars() != static_cast<std::size_t>(n)) throw DimensionMismatch(static_cast<std::size_t>(n), f.nvars());
    out.emplace_back(f);
  }
  return out;
}

// Eigenvalue order must not matter on the sample space, which lies in the
// sum-zero hyperplane: for each adjacent transposition s, g∘s − g has to be
// divisible by x1 + … + xn.
inline bool order_insensitive(const Polynomial& g) {
  const std::size_t n = g.nvars();
  Point ones(n);
  for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Polynomial diff = -g;
    for (const auto& [m, c] : g.terms()) {
      MultiIndex s = m;
      s.set(i, m[i + 1]);
      s.set(i + 1, m[i]);
      diff.add_term(s, c);
    }
    if (diff.is_zero()) continue;
    try {
      divide_linear(diff, ones);
    } catch (const NotDivisible&) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Moments of the diagonal of U diag(a) U* with U Haar on U(n), i.e. of the
/// projected orbital measure μ_a. One sample stream is shared by all `fs`.
inline std::vector<McEstimate> mc_projection_moments(int n, const Point& a, std::span<const Polynomial> fs,
                                                     const SamplingOptions& opts) {
  detail::check_traceless(n, a);
  const auto compiled = detail::compile_all(n, fs);
  const std::vector<double> ad = detail::to_doubles(a);
  return detail::run_chunks(compiled.size(), opts, [&](Rng& rng, std::vector<double>& out) {
    const ComplexMatrix u = haar_unitary(n, rng);
    double diag[8];
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += ad[k] * std::norm(u(i, k));
      diag[i] = s;
    }
    const std::span<const double> x(diag, static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < compiled.size(); ++k) out[k] = compiled[k](x);
  });
}

inline McEstimate mc_projection_moment(int n, const Point& a, const Polynomial& f, const SamplingOptions& opts) {
  return mc_projection_moments(n, a, std::span<const Polynomial>(&f, 1), opts).front();
}

/// Moments of the sorted spectrum of U diag(a) U* + V diag(b) V*, realizing
/// the radial part ν_{a,b}. Observables must not depend on eigenvalue order
/// (NotSymmetric otherwise).
inline std::vector<McEstimate> mc_convolution_moments(int n, const Point& a, const Point& b,
                                                      std::span<const Polynomial> gs, const SamplingOptions& opts) {
  detail::check_traceless(n, a);
  detail::check_traceless(n, b);
  for (const auto& g : gs)
    if (g.nvars() == static_cast<std::size_t>(n) && !detail::order_insensitive(g)) throw NotSymmetric();
  const auto compiled = detail::compile_all(n, gs);
  const std::vector<double> ad = detail::to_doubles(a), bd = detail::to_doubles(b);
  return detail::run_chunks(compiled.size(), opts, [&](Rng& rng, std::vector<double>& out) {
    const ComplexMatrix u = haar_unitary(n, rng);
    const ComplexMatrix v = haar_unitary(n, rng);
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::complex<double> s = 0.0;
        for (int k = 0; k < n; ++k) s += ad[k] * u(i, k) * std::conj(u(j, k)) + bd[k] * v(i, k) * std::conj(v(j, k));
        m(i, j) = s;
        m(j, i) = std::conj(s);
      }
    for (int i = 0; i < n; ++i) m(i, i) = m(i, i).real();
    std::vector<double> eig = hermitian_eigenvalues(m);
    std::sort(eig.begin(), eig.end());
    for (std::size_t k = 0; k < compiled.size(); ++k) out[k] = compiled[k](eig);
  });
}

inline McEstimate mc_convolution_moment(int n, const Point& a, const Point& b, const Polynomial& g,
                                        const SamplingOptions& opts) {
  return mc_convolution_moments(n, a, b, std::span<const Polynomial>(&g, 1), opts).front();
}

/// z = (exact − mean) / stderr; pass iff |z| ≤ threshold. A zero standard
/// error passes iff |exact − mean| < 1e-9.
inline ComparisonReport compare_estimate(const Rational& exact, const McEstimate& est, double threshold = 4.0) {
  if (est.std_error < 0.0) throw DomainError("negative standard error");
  ComparisonReport r;
  r.exact = exact.get_d();
  r.estimate = est;
  r.threshold = threshold;
  if (est.std_error > 0.0) {
    r.zscore = (r.exact - est.mean) / est.std_error;
    r.pass = std::abs(r.zscore) <= threshold;
  } else {
    r.zscore = 0.0;
    r.pass = std::abs(r.exact - est.mean) < 1e-9;
  }
  return r;
}

}  // namespace orbmeas::oracle
