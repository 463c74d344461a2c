#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "orbmeas/orbmeas.hpp"

namespace orbmeas::testing {

/// Small deterministic generator for exact test inputs.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 5, int max_den = 4) {
    return ratio(integer(-span, span), integer(1, max_den));
  }

  Rational nonzero_rational(int span = 5, int max_den = 4) {
    Rational q;
    do q = rational(span, max_den);
    while (q == 0);
    return q;
  }

  Point point(std::size_t n, int span = 5, int max_den = 4) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = rational(span, max_den);
    return p;
  }

  Point nonzero_point(std::size_t n) {
    Point p;
    do p = point(n);
    while (p.is_zero());
    return p;
  }

  MultiIndex multi_index(std::size_t n, int max_degree) {
    MultiIndex m(n);
    int budget = integer(0, max_degree);
    for (std::size_t i = 0; i < n && budget > 0; ++i) {
      const int e = (i + 1 == n) ? budget : integer(0, budget);
      m.set(i, static_cast<unsigned>(e));
      budget -= e;
    }
    shuffle_exponents(m);
    return m;
  }

  /// Up to `terms` random monomials of degree ≤ max_degree.
  Polynomial polynomial(std::size_t n, int max_degree, int terms = 6) {
    Polynomial f(n);
    for (int t = 0; t < terms; ++t) f.add_term(multi_index(n, max_degree), nonzero_rational());
    return f;
  }

  Polynomial nonzero_polynomial(std::size_t n, int max_degree, int terms = 6) {
    Polynomial f(n);
    while (f.is_zero()) f = polynomial(n, max_degree, terms);
    return f;
  }

  /// Random point of the Cartan realization with Δ(a) ≠ 0.
  Point regular_point(const RootSystem& rs) {
    for (;;) {
      Point a = point(rs.ambient_dim(), 9, 3);
      if (rs.sum_zero_realization()) {
        const Rational mean = a.sum() / Rational(static_cast<long>(rs.ambient_dim()));
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= mean;
      }
      if (evaluate(rs.delta(), a) != 0) return a;
    }
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  void shuffle_exponents(MultiIndex& m) {
    std::vector<unsigned> e(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i];
    std::shuffle(e.begin(), e.end(), rng_);
    for (std::size_t i = 0; i < m.size(); ++i) m.set(i, e[i]);
  }

  std::mt19937_64 rng_;
};

/// Every root system the library builds.
inline std::vector<RootSystem> all_root_systems() {
  std::vector<RootSystem> out;
  for (int r = 1; r <= 5; ++r) out.push_back(build_root_system(Family::A, r));
  for (int r = 1; r <= 3; ++r) out.push_back(build_root_system(Family::B, r));
  for (int r = 1; r <= 3; ++r) out.push_back(build_root_system(Family::C, r));
  for (int r = 3; r <= 4; ++r) out.push_back(build_root_system(Family::D, r));
  out.push_back(build_root_system(Family::G2, 2));
  return out;
}

/// Systems of rank ≤ 3, cheap enough for heavy property loops.
inline std::vector<RootSystem> small_root_systems() {
  std::vector<RootSystem> out;
  for (auto& rs : all_root_systems())
    if (rs.rank() <= 3) out.push_back(std::move(rs));
  return out;
}

}  // namespace orbmeas::testing
