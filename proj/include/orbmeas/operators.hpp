#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "orbmeas/errors.hpp"
#include "orbmeas/polynomial.hpp"
#include "orbmeas/rootsys.hpp"

namespace orbmeas {

/// q_a^k(x) = Σ_{l≤k} ⟨x,a⟩^l / l!, the degree-k truncation of e^{⟨x,a⟩}.
/// Reproducing kernel of the apolar product: [f, q_a^k] = f(a) for deg f ≤ k.
inline Polynomial exp_kernel(const Point& a, int k) {
  if (k < 0) throw DomainError("kernel degree must be non-negative");
  if (k > kMaxDegree) throw DegreeOverflow(k);
  const Polynomial form = linear_form(a);
  Polynomial term = Polynomial::constant(a.size(), 1);
  Polynomial sum = term;
  for (int l = 1; l <= k; ++l) {
    term = term * form;
    term *= ratio(1, l);
    sum += term;
  }
  return sum;
}

/// r_a^k = P_alt q_a^k; reproduces alternating polynomials of degree ≤ k.
inline Polynomial alt_kernel(const RootSystem& rs, const Point& a, int k) {
  if (a.size() != rs.ambient_dim()) throw DimensionMismatch(rs.ambient_dim(), a.size());
  return project(rs, exp_kernel(a, k), Projection::Alternating);
}

/// Adjoint of translation on Pol^k: T_a* = F^k M_{q_a^k}.
inline Polynomial translate_adjoint(const Polynomial& f, const Point& a, int k) {
  if (a.size() != f.nvars()) throw DimensionMismatch(f.nvars(), a.size());
  if (f.degree() > k) throw DomainError("translate_adjoint: deg f exceeds k");
  return multiply_truncated(exp_kernel(a, k), f, k);
}

/// Exact quotient f / ⟨α,x⟩ by long division in graded-lex order.
/// Throws NotDivisible on a nonzero remainder.
inline Polynomial divide_linear(const Polynomial& f, const Point& alpha) {
  if (alpha.size() != f.nvars()) throw DimensionMismatch(f.nvars(), alpha.size());
  if (alpha.is_zero()) throw DomainError("division by the zero linear form");
  const std::size_t n = f.nvars();
  std::size_t lead = 0;
  while (alpha[lead] == 0) ++lead;  // x_lead is the leading monomial of ⟨α,x⟩

  Polynomial::TermMap rem = f.terms();
  Polynomial quotient(n);
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const MultiIndex m = top->first;
    if (m[lead] == 0) throw NotDivisible("polynomial is not divisible by the linear form");
    MultiIndex qm = m;
    qm.set(lead, m[lead] - 1);
    const Rational qc = top->second / alpha[lead];
    quotient.add_term(qm, qc);
    rem.erase(top);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == lead || alpha[i] == 0) continue;
      MultiIndex t = qm;
      t.set(i, qm[i] + 1);
      auto [it, inserted] = rem.try_emplace(t, 0);
      it->second -= qc * alpha[i];
      if (it->second == 0) rem.erase(it);
    }
  }
  return quotient;
}

/// I_α g(x) = ∫₀^{⟨x,α⟩/⟨α,α⟩} g(x − αt) dt.
///
/// Expanding g(x − αt) = Σ_m (−t)^m (A_α^m g)(x) / m! and integrating gives
///   I_α g = Σ_m (−1)^m (A_α^m g) τ^{m+1} / (m+1)!,  τ = ⟨x,α⟩/⟨α,α⟩,
/// which is evaluated in Horner form so that only multiplications by the
/// linear form τ occur.
inline Polynomial antiderivative_linear(const Polynomial& g, const Point& alpha) {
  if (alpha.size() != g.nvars()) throw DimensionMismatch(g.nvars(), alpha.size());
  if (alpha.is_zero()) throw DomainError("antiderivative along the zero direction");
  if (g.is_zero()) return g;
  if (g.degree() + 1 > kMaxDegree) throw DegreeOverflow(g.degree() + 1);

  const Polynomial tau = linear_form((Rational(1) / dot(alpha, alpha)) * alpha);
  std::vector<Polynomial> derivs{g};
  while (!derivs.back().is_zero()) derivs.push_back(directional_derivative(derivs.back(), alpha));
  derivs.pop_back();

  Polynomial acc = derivs.back();
  for (std::size_t m = derivs.size() - 1; m-- > 0;) {
    Polynomial step = tau * acc;
    step *= ratio(-1, static_cast<long>(m) + 2);
    acc = derivs[m] + step;
  }
  return tau * acc;
}

namespace detail {

inline std::vector<std::size_t> default_order(const RootSystem& rs) {
  std::vector<std::size_t> order(rs.positive_roots().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

inline void check_order(const RootSystem& rs, std::span<const std::size_t> order) {
  const std::size_t l = rs.positive_roots().size();
  std::vector<bool> used(l, false);
  if (order.size() != l) throw DomainError("root ordering must list every positive root once");
  for (std::size_t i : order) {
    if (i >= l || used[i]) throw DomainError("root ordering must list every positive root once");
    used[i] = true;
  }
}

}  // namespace detail

/// D_Δ f = f / Δ as successive divisions D_{α_l} ∘ … ∘ D_{α_1} along `order`.
inline Polynomial divide_discriminant(const RootSystem& rs, const Polynomial& f, std::span<const std::size_t> order) {
  if (f.nvars() != rs.ambient_dim()) throw DimensionMismatch(rs.ambient_dim(), f.nvars());
  detail::check_order(rs, order);
  Polynomial cur = f;
  for (std::size_t i : order) cur = divide_linear(cur, rs.positive_roots()[i]);
  return cur;
}

inline Polynomial divide_discriminant(const RootSystem& rs, const Polynomial& f) {
  return divide_discriminant(rs, f, detail::default_order(rs));
}

/// Raw composition I_{α_1} ∘ I_{α_2} ∘ … ∘ I_{α_l} g along `order`
/// (I_{α_l} applied first). It is the adjoint of divide_discriminant on
/// Δ·Pol, but in rank ≥ 2 it depends on the ordering and need not be
/// alternating; antiderivative_discriminant removes both defects.
inline Polynomial antiderivative_chain(const RootSystem& rs, const Polynomial& g, std::span<const std::size_t> order) {
  if (g.nvars() != rs.ambient_dim()) throw DimensionMismatch(rs.ambient_dim(), g.nvars());
  detail::check_order(rs, order);
  Polynomial cur = g;
  for (auto it = order.rbegin(); it != order.rend(); ++it) cur = antiderivative_linear(cur, rs.positive_roots()[*it]);
  return cur;
}

inline Polynomial antiderivative_chain(const RootSystem& rs, const Polynomial& g) {
  return antiderivative_chain(rs, g, detail::default_order(rs));
}

/// I_Δ: Pol_sym → Pol_alt, the adjoint of D_Δ between those spaces.
/// Computed as P_alt of the chain of root antiderivatives; the projection
/// makes the result independent of the root ordering and gives
/// I_Δ 1 = Δ / [Δ,Δ].
inline Polynomial antiderivative_discriminant(const RootSystem& rs, const Polynomial& g,
                                              std::span<const std::size_t> order) {
  return project(rs, antiderivative_chain(rs, g, order), Projection::Alternating);
}

inline Polynomial antiderivative_discriminant(const RootSystem& rs, const Polynomial& g) {
  return antiderivative_discriminant(rs, g, detail::default_order(rs));
}

}  // namespace orbmeas
