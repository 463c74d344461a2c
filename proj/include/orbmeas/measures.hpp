#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbmeas/errors.hpp"
#include "orbmeas/operators.hpp"
#include "orbmeas/polynomial.hpp"
#include "orbmeas/rootsys.hpp"

namespace orbmeas {

struct MomentResult {
  Rational value;
  double decimal = 0.0;
  std::string system;
  Point a;
  std::optional<Point> b;
  std::string polynomial;
};

/// Rejects points off the Cartan realization (non-zero sum for A/G2) and
/// points on a wall (Δ(a) = 0). Returns Δ(a).
inline Rational check_regular_point(const RootSystem& rs, const Point& a) {
  if (a.size() != rs.ambient_dim()) throw DimensionMismatch(rs.ambient_dim(), a.size());
  if (rs.sum_zero_realization() && a.sum() != 0) throw TraceNotZero();
  Rational d = evaluate(rs.delta(), a);
  if (d == 0) throw SingularPoint();
  return d;
}

/// ∫ f dμ_a for the projection μ_a of the orbital measure of a onto the
/// Cartan algebra:  ([Δ,Δ]/Δ(a)) · (I_Δ P_sym f)(a).
inline MomentResult projection_moment(const RootSystem& rs, const Point& a, const Polynomial& f) {
  const Rational delta_a = check_regular_point(rs, a);
  if (f.nvars() != rs.ambient_dim()) throw DimensionMismatch(rs.ambient_dim(), f.nvars());
  const Polynomial sym = project(rs, f, Projection::Symmetric);
  const Polynomial lifted = antiderivative_discriminant(rs, sym);
  MomentResult r;
  r.value = rs.gram_delta() / delta_a * evaluate(lifted, a);
  r.decimal = r.value.get_d();
  r.system = rs.name();
  r.a = a;
  r.polynomial = to_string(f);
  return r;
}

/// (1/|W|) Σ_w ε(w) T_{w(a)} f, Weyl-symmetric whenever f is alternating.
inline Polynomial averaged_translate(const RootSystem& rs, const Point& a, const Polynomial& f_alt) {
  Polynomial h(rs.ambient_dim());
  for (const auto& w : rs.weyl()) {
    Polynomial t = translate(f_alt, weyl_act(w, a));
    if (w.sign < 0)
      h -= t;
    else
      h += t;
  }
  return h *= ratio(1, static_cast<long>(rs.weyl_order()));
}

/// ∫ f_alt/Δ dν_{a,b} for the radial part ν_{a,b} of the convolution of
/// the orbital measures of a and b.
inline MomentResult convolution_moment_alt(const RootSystem& rs, const Point& a, const Point& b, const Polynomial& f_alt) {
  const Rational delta_a = check_regular_point(rs, a);
  const Rational delta_b = check_regular_point(rs, b);
  if (f_alt.nvars() != rs.ambient_dim()) throw DimensionMismatch(rs.ambient_dim(), f_alt.nvars());
  if (!is_alternating(rs, f_alt)) throw NotAlternating();

  const Polynomial h = averaged_translate(rs, a, f_alt);
  if (!is_symmetric(rs, h)) throw InternalError("averaged translate is not Weyl-symmetric");
  const Polynomial lifted = antiderivative_discriminant(rs, h);

  MomentResult r;
  r.value = rs.gram_delta() / (delta_a * delta_b) * evaluate(lifted, b);
  r.decimal = r.value.get_d();
  r.system = rs.name();
  r.a = a;
  r.b = b;
  r.polynomial = to_string(f_alt);
  return r;
}

/// ∫ g dν_{a,b}, through f_alt = Δ · P_sym g.
inline MomentResult convolution_moment(const RootSystem& rs, const Point& a, const Point& b, const Polynomial& g) {
  if (g.nvars() != rs.ambient_dim()) throw DimensionMismatch(rs.ambient_dim(), g.nvars());
  const Polynomial f_alt = rs.delta() * project(rs, g, Projection::Symmetric);
  MomentResult r = convolution_moment_alt(rs, a, b, f_alt);
  r.polynomial = to_string(g);
  return r;
}

// Rank-1 closed forms, under the identification (x, −x) ↦ x of the A1
// Cartan algebra with the real line.

struct DensityPiece {
  Rational lo, hi;
  Polynomial density{1};  // in one variable
};

struct Rank1Density {
  enum class Kind { Projection, Convolution };

  Kind kind;
  std::vector<Rational> parameters;
  std::vector<DensityPiece> pieces;

  Rational operator()(const Rational& c) const {
    for (const auto& p : pieces)
      if (p.lo <= c && c <= p.hi) return evaluate(p.density, Point{c});
    return 0;
  }

  /// ∫ c^m φ(c) dc, exact.
  Rational moment(unsigned m) const {
    // ∫_lo^hi c^m Σ_j p_j c^j dc = Σ_j p_j (hi^{m+j+1} − lo^{m+j+1}) / (m+j+1)
    Rational total = 0;
    for (const auto& p : pieces) {
      for (const auto& [mi, coeff] : p.density.terms()) {
        const unsigned e = m + mi[0] + 1;
        total += coeff * (pow(p.hi, e) - pow(p.lo, e)) / Rational(e);
      }
    }
    return total;
  }

  Rational total_mass() const { return moment(0); }
};

/// Uniform density 1/(2|a|) on [−|a|, |a|].
inline Rank1Density rank1_projection_density(const Rational& a) {
  if (a == 0) throw DomainError("rank-1 projection density needs a ≠ 0");
  const Rational r = abs(a);
  Rank1Density d{Rank1Density::Kind::Projection, {a}, {}};
  d.pieces.push_back({-r, r, Polynomial::constant(1, Rational(1) / (2 * r))});
  return d;
}

/// φ(c) = c/4ab on [a−b, a+b], −c/4ab on [−a−b, −a+b], zero elsewhere;
/// requires 0 < b < a.
inline Rank1Density rank1_convolution_density(const Rational& a, const Rational& b) {
  if (!(0 < b && b < a)) throw DomainError("rank-1 convolution density needs 0 < b < a");
  const Rational k = Rational(1) / (4 * a * b);
  Rank1Density d{Rank1Density::Kind::Convolution, {a, b}, {}};
  d.pieces.push_back({-a - b, -a + b, Polynomial::monomial(MultiIndex{1}, -k)});
  d.pieces.push_back({a - b, a + b, Polynomial::monomial(MultiIndex{1}, k)});
  return d;
}

}  // namespace orbmeas
