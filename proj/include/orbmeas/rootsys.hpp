#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbmeas/errors.hpp"
#include "orbmeas/polynomial.hpp"

namespace orbmeas {

enum class Family { A, B, C, D, G2 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G";
  }
  return "?";
}

/// Element of the Weyl group stored as an explicit orthogonal matrix acting
/// on ambient coordinates. For the classical families every element is a
/// signed permutation, (w x)_i = flip_i · x_{perm_i}, which is kept as well
/// so monomials can be moved without expanding products.
struct WeylElement {
  std::vector<Rational> matrix;  // row-major n×n
  int sign = 1;
  std::vector<std::size_t> perm;  // empty unless a signed permutation
  std::vector<int> flip;

  std::size_t dim() const noexcept { return perm.empty() ? isqrt(matrix.size()) : perm.size(); }
  bool is_signed_permutation() const noexcept { return !perm.empty(); }

 private:
  static std::size_t isqrt(std::size_t m) {
    std::size_t n = 0;
    while (n * n < m) ++n;
    return n;
  }
};

namespace detail {

inline std::vector<Rational> mat_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n) {
  std::vector<Rational> r(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i * n + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  return r;
}

inline std::vector<Rational> identity_matrix(std::size_t n) {
  std::vector<Rational> r(n * n);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
  return r;
}

inline Rational determinant(std::vector<Rational> m, std::size_t n) {
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
      det = -det;
    }
    det *= m[col * n + col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i * n + col] == 0) continue;
      Rational factor = m[i * n + col] / m[col * n + col];
      for (std::size_t j = col; j < n; ++j) m[i * n + j] -= factor * m[col * n + j];
    }
  }
  return det;
}

// s_α(x) = x − 2⟨x,α⟩/⟨α,α⟩ α
inline std::vector<Rational> reflection_matrix(const Point& alpha) {
  const std::size_t n = alpha.size();
  auto m = identity_matrix(n);
  Rational scale = Rational(2) / dot(alpha, alpha);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] -= scale * alpha[i] * alpha[j];
  return m;
}

inline WeylElement make_element(std::vector<Rational> matrix, std::size_t n) {
  WeylElement w;
  Rational det = determinant(matrix, n);
  if (det != 1 && det != -1) throw InternalError("Weyl matrix is not orthogonal");
  w.sign = det > 0 ? 1 : -1;
  std::vector<std::size_t> perm(n);
  std::vector<int> flip(n);
  bool monomial = true;
  for (std::size_t i = 0; i < n && monomial; ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = matrix[i * n + j];
      if (v == 0) continue;
      ++nonzero;
      if (v == 1 || v == -1) {
        perm[i] = j;
        flip[i] = v > 0 ? 1 : -1;
      } else {
        monomial = false;
      }
    }
    if (nonzero != 1) monomial = false;
  }
  if (monomial) {
    w.perm = std::move(perm);
    w.flip = std::move(flip);
  }
  w.matrix = std::move(matrix);
  return w;
}

}  // namespace detail

/// Root system realized in Euclidean ambient coordinates, together with its
/// Weyl group, discriminant Δ = Π⟨α,x⟩ and the apolar constant [Δ,Δ].
class RootSystem {
 public:
  static constexpr std::size_t kMaxWeylOrder = 10000;

  RootSystem(Family family, int rank, std::size_t ambient_dim, std::vector<Point> positive_roots,
             std::vector<Point> simple_roots)
      : family_(family),
        rank_(rank),
        dim_(ambient_dim),
        positive_(std::move(positive_roots)),
        simple_(std::move(simple_roots)),
        delta_(ambient_dim) {
    for (const auto& r : positive_) {
      if (r.size() != dim_) throw DimensionMismatch(dim_, r.size());
      if (r.is_zero()) throw InternalError("zero root");
    }
    build_weyl_group();
    delta_ = Polynomial::constant(dim_, 1);
    for (const auto& r : positive_) delta_ = delta_ * linear_form(r);
    gram_ = apolar(delta_, delta_);
  }

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::size_t ambient_dim() const noexcept { return dim_; }
  std::string name() const { return family_name(family_) + std::to_string(rank_); }

  const std::vector<Point>& positive_roots() const noexcept { return positive_; }
  const std::vector<Point>& simple_roots() const noexcept { return simple_; }
  const std::vector<WeylElement>& weyl() const noexcept { return weyl_; }
  std::size_t weyl_order() const noexcept { return weyl_.size(); }

  /// Indices into weyl() of the simple reflections; they generate the group.
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }

  const Polynomial& delta() const noexcept { return delta_; }
  const Rational& gram_delta() const noexcept { return gram_; }

  /// True when the Cartan realization is the sum-zero hyperplane.
  bool sum_zero_realization() const noexcept { return family_ == Family::A || family_ == Family::G2; }

  /// Every element is a signed permutation and all coordinate permutations
  /// belong to the group (classical families).
  bool has_permutation_orbits() const noexcept { return family_ != Family::G2; }

  /// Copy with positive root `index` replaced by its negative. The Weyl group
  /// is unchanged; Δ flips sign and [Δ,Δ] is preserved.
  RootSystem with_flipped_root(std::size_t index) const {
    RootSystem r(*this);
    r.positive_.at(index) = -r.positive_[index];
    r.delta_ = -r.delta_;
    return r;
  }

 private:
  void build_weyl_group() {
    const std::size_t n = dim_;
    std::vector<std::vector<Rational>> gens;
    for (const auto& s : simple_) gens.push_back(detail::reflection_matrix(s));

    std::set<std::vector<Rational>> seen;
    std::deque<std::vector<Rational>> queue;
    std::vector<std::vector<Rational>> order;
    auto visit = [&](std::vector<Rational> m) {
      if (seen.insert(m).second) {
        if (seen.size() > kMaxWeylOrder) throw UnsupportedRootSystem("Weyl group closure exceeds 10000 elements");
        order.push_back(m);
        queue.push_back(std::move(m));
      }
    };
    visit(detail::identity_matrix(n));
    for (const auto& g : gens) visit(g);
    while (!queue.empty()) {
      auto m = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) visit(detail::mat_mul(g, m, n));
    }
    weyl_.reserve(order.size());
    for (auto& m : order) weyl_.push_back(detail::make_element(std::move(m), n));
    // BFS order places the simple reflections right after the identity.
    for (std::size_t i = 0; i < gens.size(); ++i) generators_.push_back(i + 1);
  }

  Family family_;
  int rank_;
  std::size_t dim_;
  std::vector<Point> positive_;
  std::vector<Point> simple_;
  std::vector<WeylElement> weyl_;
  std::vector<std::size_t> generators_;
  Polynomial delta_;
  Rational gram_;
};

namespace detail {

inline Point sparse_root(std::size_t n, std::size_t i, int vi, std::size_t j, int vj) {
  Point p(n);
  p[i] = vi;
  p[j] = vj;
  return p;
}

}  // namespace detail

/// Standard realizations: A_r in R^{r+1} (roots e_j − e_i, i<j), B_r/C_r/D_r
/// in R^r, G2 in the sum-zero plane of R^3.
inline RootSystem build_root_system(Family family, int rank) {
  std::vector<Point> pos, simple;
  auto e = [](std::size_t n, std::size_t i, int v = 1) {
    Point p(n);
    p[i] = v;
    return p;
  };
  switch (family) {
    case Family::A: {
      if (rank < 1 || rank > 5) throw UnsupportedRootSystem("A-series supports rank 1..5");
      const std::size_t n = static_cast<std::size_t>(rank) + 1;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pos.push_back(detail::sparse_root(n, j, 1, i, -1));
      for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(detail::sparse_root(n, i + 1, 1, i, -1));
      return RootSystem(family, rank, n, std::move(pos), std::move(simple));
    }
    case Family::B:
    case Family::C: {
      if (rank < 1 || rank > 3) throw UnsupportedRootSystem("B/C-series supports rank 1..3");
      const std::size_t n = static_cast<std::size_t>(rank);
      const int lone = family == Family::B ? 1 : 2;
      for (std::size_t i = 0; i < n; ++i) pos.push_back(e(n, i, lone));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          pos.push_back(detail::sparse_root(n, i, 1, j, -1));
          pos.push_back(detail::sparse_root(n, i, 1, j, 1));
        }
      for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(detail::sparse_root(n, i, 1, i + 1, -1));
      simple.push_back(e(n, n - 1, lone));
      return RootSystem(family, rank, n, std::move(pos), std::move(simple));
    }
    case Family::D: {
      if (rank < 3 || rank > 4) throw UnsupportedRootSystem("D-series supports rank 3..4");
      const std::size_t n = static_cast<std::size_t>(rank);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          pos.push_back(detail::sparse_root(n, i, 1, j, -1));
          pos.push_back(detail::sparse_root(n, i, 1, j, 1));
        }
      for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(detail::sparse_root(n, i, 1, i + 1, -1));
      simple.push_back(detail::sparse_root(n, n - 2, 1, n - 1, 1));
      return RootSystem(family, rank, n, std::move(pos), std::move(simple));
    }
    case Family::G2: {
      if (rank != 2) throw UnsupportedRootSystem("G2 has rank 2");
      const std::size_t n = 3;
      auto v = [](int a, int b, int c) { return Point{Rational(a), Rational(b), Rational(c)}; };
      // simple roots α₁ = e1−e2 (short), α₂ = −2e1+e2+e3 (long)
      pos = {v(1, -1, 0), v(-2, 1, 1), v(-1, 0, 1), v(0, -1, 1), v(1, -2, 1), v(-1, -1, 2)};
      simple = {v(1, -1, 0), v(-2, 1, 1)};
      return RootSystem(family, rank, n, std::move(pos), std::move(simple));
    }
  }
  throw UnsupportedRootSystem("unknown family");
}

/// Parses "A2", "B3", "G2", ... into a root system.
inline RootSystem build_root_system(const std::string& type) {
  if (type.size() < 2) throw UnsupportedRootSystem("bad root system type '" + type + "'");
  Family f;
  switch (type[0]) {
    case 'A': case 'a': f = Family::A; break;
    case 'B': case 'b': f = Family::B; break;
    case 'C': case 'c': f = Family::C; break;
    case 'D': case 'd': f = Family::D; break;
    case 'G': case 'g': f = Family::G2; break;
    default: throw UnsupportedRootSystem("bad root system type '" + type + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < type.size(); ++i) {
    if (type[i] < '0' || type[i] > '9' || rank > 100) throw UnsupportedRootSystem("bad root system type '" + type + "'");
    rank = rank * 10 + (type[i] - '0');
  }
  return build_root_system(f, rank);
}

inline Point weyl_act(const WeylElement& w, const Point& p) {
  const std::size_t n = w.dim();
  if (p.size() != n) throw DimensionMismatch(n, p.size());
  Point r(n);
  if (w.is_signed_permutation()) {
    for (std::size_t i = 0; i < n; ++i) r[i] = w.flip[i] > 0 ? p[w.perm[i]] : Rational(-p[w.perm[i]]);
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i] += w.matrix[i * n + j] * p[j];
  return r;
}

namespace detail {

// w·x^β for a signed permutation: Π(flip_i x_{perm_i})^{β_i}.
inline std::pair<MultiIndex, int> act_on_monomial(const WeylElement& w, const MultiIndex& m) {
  MultiIndex r(m.size());
  int s = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    r.set(w.perm[i], m[i]);
    if (w.flip[i] < 0 && (m[i] & 1u)) s = -s;
  }
  return {r, s};
}

}  // namespace detail

/// Returns x ↦ f(w x), so weyl_act(w, f)(p) == f(weyl_act(w, p)).
/// Composition: weyl_act(u, weyl_act(v, f)) == weyl_act(v·u, f).
inline Polynomial weyl_act(const WeylElement& w, const Polynomial& f) {
  if (f.nvars() != w.dim()) throw DimensionMismatch(w.dim(), f.nvars());
  if (!w.is_signed_permutation()) return substitute_linear(f, w.matrix);
  Polynomial r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    auto [mm, s] = detail::act_on_monomial(w, m);
    r.add_term(mm, s > 0 ? c : Rational(-c));
  }
  return r;
}

enum class Projection { Symmetric, Alternating };

/// Weyl average Σ_w (ε(w)) f(w x) / |W|, summed over every element.
inline Polynomial project_naive(const RootSystem& rs, const Polynomial& f, Projection mode) {
  if (f.nvars() != rs.ambient_dim()) throw DimensionMismatch(rs.ambient_dim(), f.nvars());
  Polynomial r(f.nvars());
  for (const auto& w : rs.weyl()) {
    Polynomial t = weyl_act(w, f);
    if (mode == Projection::Alternating && w.sign < 0)
      r -= t;
    else
      r += t;
  }
  return r *= ratio(1, static_cast<long>(rs.weyl_order()));
}

/// P_sym / P_alt. For the classical families each monomial is first folded
/// onto its sorted-exponent orbit representative, so the group sum runs once
/// per orbit instead of once per term.
inline Polynomial project(const RootSystem& rs, const Polynomial& f, Projection mode) {
  if (f.nvars() != rs.ambient_dim()) throw DimensionMismatch(rs.ambient_dim(), f.nvars());
  if (!rs.has_permutation_orbits()) return project_naive(rs, f, mode);

  const std::size_t n = f.nvars();
  std::map<MultiIndex, Rational> folded;
  std::vector<std::size_t> order(n);
  for (const auto& [m, c] : f.terms()) {
    // x^γ = u·x^ρ with ρ sorted descending and (u x)_i = x_{order_i}.
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return m[i] > m[j]; });
    MultiIndex rep(n);
    for (std::size_t i = 0; i < n; ++i) rep.set(i, m[order[i]]);
    int sign = 1;
    if (mode == Projection::Alternating) {
      // parity of the permutation `order`
      std::vector<bool> done(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !done[j]; j = order[j]) {
          done[j] = true;
          ++len;
        }
        if (len % 2 == 0) sign = -sign;
      }
    }
    auto [it, inserted] = folded.try_emplace(rep, 0);
    it->second += sign > 0 ? c : Rational(-c);
  }

  Polynomial r(n);
  const Rational inv_order(1, static_cast<unsigned long>(rs.weyl_order()));
  for (const auto& [rep, c] : folded) {
    if (c == 0) continue;
    const Rational scale = c * inv_order;
    for (const auto& w : rs.weyl()) {
      auto [mm, s] = detail::act_on_monomial(w, rep);
      if (mode == Projection::Alternating) s *= w.sign;
      r.add_term(mm, s > 0 ? scale : Rational(-scale));
    }
  }
  return r;
}

inline bool is_symmetric(const RootSystem& rs, const Polynomial& f) {
  for (std::size_t g : rs.generators())
    if (weyl_act(rs.weyl()[g], f) != f) return false;
  return true;
}

inline bool is_alternating(const RootSystem& rs, const Polynomial& f) {
  const Polynomial neg = -f;
  for (std::size_t g : rs.generators())
    if (weyl_act(rs.weyl()[g], f) != neg) return false;
  return true;
}

inline const Polynomial& discriminant(const RootSystem& rs) { return rs.delta(); }
inline const Rational& gram_delta(const RootSystem& rs) { return rs.gram_delta(); }

}  // namespace orbmeas
