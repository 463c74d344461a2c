#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbmeas/errors.hpp"
#include "orbmeas/multi_index.hpp"
#include "orbmeas/rational.hpp"

namespace orbmeas {

/// Exact-rational vector in the ambient coordinates of a Cartan realization.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t n) : coords_(n) {}
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Point unit(std::size_t n, std::size_t i) {
    Point p(n);
    p.coords_[i] = 1;
    return p;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  Rational sum() const {
    Rational s = 0;
    for (const auto& c : coords_) s += c;
    return s;
  }

  friend Rational dot(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  friend Point operator+(Point a, const Point& b) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a.coords_[i] += b[i];
    return a;
  }
  friend Point operator-(Point a, const Point& b) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a.coords_[i] -= b[i];
    return a;
  }
  friend Point operator-(Point a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend Point operator*(const Rational& s, Point a) {
    for (auto& c : a.coords_) c *= s;
    return a;
  }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ',';
      out += coords_[i].get_str();
    }
    return out;
  }

 private:
  std::vector<Rational> coords_;
};

/// Sparse polynomial in `nvars` variables with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational>;

  /// degree() of the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Polynomial(std::size_t nvars = 1) : nvars_(nvars) {
    if (nvars == 0 || nvars > kMaxVars) throw DomainError("unsupported number of variables");
  }

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(MultiIndex(nvars), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DomainError("variable index out of range");
    Polynomial p(nvars);
    p.add_term(MultiIndex::unit(nvars, i), 1);
    return p;
  }

  static Polynomial monomial(const MultiIndex& m, const Rational& c = 1) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  int degree() const noexcept {
    int d = kZeroDegree;
    // Graded order means the last key has maximal degree.
    if (!terms_.empty()) d = terms_.rbegin()->first.degree();
    return d;
  }

  Rational coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c·x^m, dropping the term if it cancels.
  void add_term(const MultiIndex& m, const Rational& c) {
    if (m.size() != nvars_) throw DimensionMismatch(nvars_, m.size());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    if (!a.is_zero() && !b.is_zero() && a.degree() + b.degree() > kMaxDegree)
      throw DegreeOverflow(a.degree() + b.degree());
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  void check_same(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw DimensionMismatch(nvars_, o.nvars_);
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

inline Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r = Polynomial::constant(p.nvars(), 1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

inline Rational multi_factorial(const MultiIndex& m) {
  Integer r = 1;
  for (std::size_t i = 0; i < m.size(); ++i) r *= factorial(m[i]);
  return Rational(r);
}

/// Apolar (Fischer) inner product [f,g] = Σ_β f_β g_β β!.
inline Rational apolar(const Polynomial& f, const Polynomial& g) {
  f.check_same(g);
  const Polynomial& small = f.size() <= g.size() ? f : g;
  const Polynomial& big = f.size() <= g.size() ? g : f;
  Rational s = 0;
  for (const auto& [m, c] : small.terms()) {
    auto it = big.terms().find(m);
    if (it != big.terms().end()) s += c * it->second * multi_factorial(m);
  }
  return s;
}

namespace detail {

// powers[i][e] = coords[i]^e for e ≤ max_exp.
template <class T>
std::vector<std::vector<T>> power_table(std::span<const T> coords, int max_exp) {
  std::vector<std::vector<T>> table(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    table[i].resize(static_cast<std::size_t>(std::max(max_exp, 0)) + 1);
    table[i][0] = T(1);
    for (int e = 1; e <= max_exp; ++e) table[i][e] = table[i][e - 1] * coords[i];
  }
  return table;
}

}  // namespace detail

inline Rational evaluate(const Polynomial& f, const Point& p) {
  if (p.size() != f.nvars()) throw DimensionMismatch(f.nvars(), p.size());
  if (f.is_zero()) return 0;
  auto powers = detail::power_table<Rational>(p.coords(), f.degree());
  Rational s = 0, t;
  for (const auto& [m, c] : f.terms()) {
    t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= powers[i][m[i]];
    s += t;
  }
  return s;
}

/// Floating-point evaluation, used by the Monte-Carlo oracle.
class CompiledPolynomial {
 public:
  explicit CompiledPolynomial(const Polynomial& f) : nvars_(f.nvars()), degree_(std::max(f.degree(), 0)) {
    for (const auto& [m, c] : f.terms()) {
      coeffs_.push_back(c.get_d());
      exps_.emplace_back();
      for (std::size_t i = 0; i < m.size(); ++i) exps_.back()[i] = static_cast<std::uint8_t>(m[i]);
    }
  }

  std::size_t nvars() const noexcept { return nvars_; }

  double operator()(std::span<const double> x) const {
    if (x.size() != nvars_) throw DimensionMismatch(nvars_, x.size());
    auto powers = detail::power_table<double>(x, degree_);
    double s = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      double t = coeffs_[k];
      for (std::size_t i = 0; i < nvars_; ++i) t *= powers[i][exps_[k][i]];
      s += t;
    }
    return s;
  }

 private:
  std::size_t nvars_;
  int degree_;
  std::vector<double> coeffs_;
  std::vector<std::array<std::uint8_t, kMaxVars>> exps_;
};

/// F^k: drop every term of total degree > k.
inline Polynomial truncate(const Polynomial& f, int k) {
  if (k < 0) throw DomainError("truncation degree must be non-negative");
  Polynomial r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() > k) break;
    r.add_term(m, c);
  }
  return r;
}

inline Polynomial multiply_truncated(const Polynomial& f, const Polynomial& g, int k) {
  f.check_same(g);
  if (k < 0) throw DomainError("truncation degree must be non-negative");
  Polynomial r(f.nvars());
  for (const auto& [mf, cf] : f.terms()) {
    if (mf.degree() > k) break;
    for (const auto& [mg, cg] : g.terms()) {
      if (mf.degree() + mg.degree() > k) break;
      r.add_term(mf + mg, cf * cg);
    }
  }
  return r;
}

inline Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.nvars()) throw DomainError("variable index out of range");
  Polynomial r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    MultiIndex d = m;
    d.set(var, m[var] - 1);
    r.add_term(d, c * m[var]);
  }
  return r;
}

/// ⟨α,∂⟩f = Σᵢ αᵢ ∂f/∂xᵢ.
inline Polynomial directional_derivative(const Polynomial& f, const Point& alpha) {
  if (alpha.size() != f.nvars()) throw DimensionMismatch(f.nvars(), alpha.size());
  Polynomial r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0 || alpha[i] == 0) continue;
      MultiIndex d = m;
      d.set(i, m[i] - 1);
      r.add_term(d, c * alpha[i] * m[i]);
    }
  }
  return r;
}

/// x ↦ ⟨α,x⟩ under the Euclidean pairing.
inline Polynomial linear_form(const Point& alpha) {
  Polynomial r(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) r.add_term(MultiIndex::unit(alpha.size(), i), alpha[i]);
  return r;
}

/// T_a f(x) = f(x + a), expanded one variable at a time.
inline Polynomial translate(const Polynomial& f, const Point& a) {
  if (a.size() != f.nvars()) throw DimensionMismatch(f.nvars(), a.size());
  Polynomial cur = f;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    auto powers = detail::power_table<Rational>(std::span<const Rational>(&a[i], 1), std::max(cur.degree(), 0));
    Polynomial next(f.nvars());
    for (const auto& [m, c] : cur.terms()) {
      const unsigned e = m[i];
      for (unsigned j = 0; j <= e; ++j) {
        MultiIndex d = m;
        d.set(i, j);
        next.add_term(d, c * Rational(binomial(e, j)) * powers[0][e - j]);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

/// Substitution x ↦ M·x, i.e. returns x ↦ f(Mx). `matrix` is row-major n×n.
inline Polynomial substitute_linear(const Polynomial& f, std::span<const Rational> matrix) {
  const std::size_t n = f.nvars();
  if (matrix.size() != n * n) throw DimensionMismatch(n * n, matrix.size());
  if (f.is_zero()) return f;
  const int deg = f.degree();
  // images[i][e] = (row i of M · x)^e
  std::vector<std::vector<Polynomial>> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial row(n);
    for (std::size_t j = 0; j < n; ++j) row.add_term(MultiIndex::unit(n, j), matrix[i * n + j]);
    images[i].push_back(Polynomial::constant(n, 1));
    for (int e = 1; e <= deg; ++e) images[i].push_back(images[i].back() * row);
  }
  Polynomial r(n);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) t = t * images[i][m[i]];
    r += t;
  }
  return r;
}

/// Text form accepted back by the CLI parser: "3/2*x1^2*x2 - x3 + 1".
inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const MultiIndex& m = it->first;
    Rational c = it->second;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool need_star = false;
    if (c != 1 || m.degree() == 0) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (m[i] > 1) os << '^' << m[i];
      need_star = true;
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << '(' << p.to_string() << ')'; }

}  // namespace orbmeas
