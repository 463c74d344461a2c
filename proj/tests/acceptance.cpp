// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Runtime budgets are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "support/random_poly.hpp"

using namespace orbmeas;
using orbmeas::testing::Gen;

namespace {

constexpr double kZThreshold = 4.0;
constexpr std::uint64_t kMcSamples = 1000000;
constexpr std::uint64_t kMcSeed = 20240601;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

bool run_criterion(const char* id, const char* title, double budget_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.ok = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (v.ok && secs > budget_s) {
    v.ok = false;
    v.detail = "over time budget";
  }
  std::printf("%s %s  %s  (%.2fs / %.0fs)%s%s\n", id, v.ok ? "PASS" : "FAIL", title, secs, budget_s,
              v.detail.empty() ? "" : "  ", v.detail.c_str());
  std::fflush(stdout);
  return v.ok;
}

Polynomial one(std::size_t n) { return Polynomial::constant(n, 1); }

std::vector<Polynomial> monomials_up_to(std::size_t n, unsigned degree) {
  std::vector<Polynomial> out;
  std::vector<unsigned> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned budget) -> void {
    if (i == n) {
      MultiIndex m(n);
      for (std::size_t j = 0; j < n; ++j) m.set(j, e[j]);
      out.push_back(Polynomial::monomial(m));
      return;
    }
    for (unsigned v = 0; v <= budget; ++v) {
      e[i] = v;
      self(self, i + 1, budget - v);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

Verdict ac1() {
  Verdict v;
  Gen gen(101);
  const std::vector<std::pair<Family, int>> systems{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
                                                    {Family::B, 2}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4},
                                                    {Family::G2, 2}};
  for (const auto& [family, rank] : systems) {
    const RootSystem rs = build_root_system(family, rank);
    for (int t = 0; t < 20; ++t) {
      const Point a = gen.regular_point(rs);
      v.require(projection_moment(rs, a, one(rs.ambient_dim())).value == 1, rs.name() + " at " + a.to_string());
    }
  }
  return v;
}

Verdict ac2() {
  Verdict v;
  for (const RootSystem& rs : orbmeas::testing::all_root_systems()) {
    Polynomial expected = rs.delta();
    expected *= Rational(1) / rs.gram_delta();
    v.require(antiderivative_discriminant(rs, one(rs.ambient_dim())) == expected, rs.name());
  }
  return v;
}

Verdict ac3() {
  Verdict v;
  const RootSystem a1 = build_root_system(Family::A, 1);
  const Point a{-1, 1};
  const Rank1Density uniform = rank1_projection_density(1);
  for (unsigned m = 0; m <= 8; ++m) {
    const Rational exact = projection_moment(a1, a, pow(Polynomial::variable(2, 1), m)).value;
    v.require(exact == orbmeas::testing::rank1_projection_moment(1, m), "x2^" + std::to_string(m));
    v.require(exact == uniform.moment(m), "density x2^" + std::to_string(m));
  }
  v.require(projection_moment(a1, a, pow(Polynomial::variable(2, 1), 2)).value == ratio(1, 3), "m=2 is 1/3");
  v.require(projection_moment(a1, a, pow(Polynomial::variable(2, 1), 4)).value == ratio(1, 5), "m=4 is 1/5");
  return v;
}

Verdict ac4() {
  Verdict v;
  const RootSystem a1 = build_root_system(Family::A, 1);
  const Point a{2, -2}, b{1, -1};
  const Rank1Density phi = rank1_convolution_density(2, 1);
  for (unsigned m : {2u, 4u}) {
    const Rational exact = convolution_moment(a1, a, b, pow(Polynomial::variable(2, 0), m)).value;
    v.require(exact == orbmeas::testing::rank1_convolution_moment(2, 1, m), "x1^" + std::to_string(m) + " closed form");
    v.require(exact == phi.moment(m), "x1^" + std::to_string(m) + " density pieces");
  }
  v.require(convolution_moment(a1, a, b, pow(Polynomial::variable(2, 0), 2)).value == 5, "x1^2 is 5");
  v.require(convolution_moment(a1, a, b, pow(Polynomial::variable(2, 0), 4)).value == ratio(91, 3), "x1^4 is 91/3");
  return v;
}

// Each pair (f, g) is checked against all four adjoint relations, cycling
// through the root systems of rank ≤ 3.
Verdict ac5() {
  Verdict v;
  Gen gen(105);
  const auto systems = orbmeas::testing::small_root_systems();
  for (int pair = 0; pair < 200; ++pair) {
    const RootSystem& rs = systems[static_cast<std::size_t>(pair) % systems.size()];
    const std::size_t n = rs.ambient_dim();
    const std::string tag = rs.name() + " pair " + std::to_string(pair);
    const int k = gen.integer(0, 6);
    const Polynomial f = gen.polynomial(n, k, 6), g = gen.polynomial(n, k, 6);
    const Point a = gen.point(n);
    const Point alpha = rs.positive_roots()[static_cast<std::size_t>(gen.integer(0, static_cast<int>(rs.positive_roots().size()) - 1))];

    v.require(apolar(translate_adjoint(f, a, k), g) == apolar(f, translate(g, a)), "T_a* " + tag);
    v.require(apolar(linear_form(alpha) * f, g) == apolar(f, directional_derivative(g, alpha)), "A_alpha " + tag);
    const Polynomial lf = linear_form(alpha) * truncate(f, 5);
    v.require(apolar(divide_linear(lf, alpha), g) == apolar(lf, antiderivative_linear(g, alpha)), "I_alpha " + tag);

    const Polynomial f_alt = rs.delta() * project(rs, f, Projection::Symmetric);
    const Polynomial g_sym = project(rs, g, Projection::Symmetric);
    v.require(apolar(divide_discriminant(rs, f_alt), g_sym) == apolar(f_alt, antiderivative_discriminant(rs, g_sym)),
              "I_Delta " + tag);
  }
  return v;
}

Verdict ac6() {
  Verdict v;
  Gen gen(106);
  for (const RootSystem& rs : orbmeas::testing::all_root_systems()) {
    const std::size_t n = rs.ambient_dim();
    const Polynomial g = project(rs, gen.polynomial(n, rs.rank() > 3 ? 2 : 4, 4), Projection::Symmetric) + one(n);
    const Polynomial reference = antiderivative_discriminant(rs, g);
    for (int t = 0; t < 5; ++t) {
      const auto order = gen.permutation(rs.positive_roots().size());
      v.require(antiderivative_discriminant(rs, g, order) == reference, rs.name() + " ordering " + std::to_string(t));
    }
  }
  return v;
}

Verdict ac7() {
  Verdict v;
  const RootSystem a2 = build_root_system(Family::A, 2);
  const Point a{1, 0, -1}, b{ratio(1, 2), 0, ratio(-1, 2)};
  const oracle::SamplingOptions opts{kMcSamples, kMcSeed, 0};
  double worst = 0.0;

  const auto monos = monomials_up_to(3, 4);
  const auto proj = oracle::mc_projection_moments(3, a, monos, opts);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const auto r = oracle::compare_estimate(projection_moment(a2, a, monos[i]).value, proj[i], kZThreshold);
    worst = std::max(worst, std::abs(r.zscore));
    v.require(r.pass, "projection " + to_string(monos[i]) + " z=" + std::to_string(r.zscore));
  }

  Polynomial p2(3), p4(3);
  for (std::size_t i = 0; i < 3; ++i) {
    p2 += pow(Polynomial::variable(3, i), 2);
    p4 += pow(Polynomial::variable(3, i), 4);
  }
  const std::vector<Polynomial> sums{p2, p2 * p2, p4};
  const auto conv = oracle::mc_convolution_moments(3, a, b, sums, opts);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const auto r = oracle::compare_estimate(convolution_moment(a2, a, b, sums[i]).value, conv[i], kZThreshold);
    worst = std::max(worst, std::abs(r.zscore));
    v.require(r.pass, "convolution " + to_string(sums[i]) + " z=" + std::to_string(r.zscore));
  }
  if (v.ok) v.detail = std::to_string(monos.size() + sums.size()) + " moments, max |z| = " + std::to_string(worst);
  return v;
}

Verdict ac8() {
  Verdict v;
  Gen gen(108);
  const auto systems = orbmeas::testing::small_root_systems();
  for (const RootSystem& rs : systems) {
    const std::size_t n = rs.ambient_dim();
    const Point a = gen.regular_point(rs), b = gen.regular_point(rs);
    const Polynomial f = gen.polynomial(n, 3, 4);
    const Rational proj = projection_moment(rs, a, f).value;
    const Rational conv = convolution_moment(rs, a, b, f).value;
    for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
      const RootSystem flipped = rs.with_flipped_root(i);
      v.require(projection_moment(flipped, a, f).value == proj, rs.name() + " projection, root " + std::to_string(i));
      v.require(convolution_moment(flipped, a, b, f).value == conv, rs.name() + " convolution, root " + std::to_string(i));
    }
  }
  for (int t = 0; t < 50; ++t) {
    const RootSystem& rs = systems[static_cast<std::size_t>(t) % systems.size()];
    const std::size_t n = rs.ambient_dim();
    const Point a = gen.regular_point(rs), b = gen.regular_point(rs);
    const Polynomial g = gen.polynomial(n, 3, 4);
    const Polynomial f_alt = rs.delta() * project(rs, g, Projection::Symmetric);
    v.require(convolution_moment_alt(rs, a, b, f_alt).value == convolution_moment(rs, a, b, g).value,
              rs.name() + " g #" + std::to_string(t));
  }
  return v;
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion("AC1", "probability mass: moment of 1 is 1 on 9 systems x 20 points", 30, ac1);
  all &= run_criterion("AC2", "I_Delta 1 = Delta/[Delta,Delta] on every supported system", 10, ac2);
  all &= run_criterion("AC3", "A1 projection moments x2^m, m<=8, match the uniform law", 1, ac3);
  all &= run_criterion("AC4", "A1 convolution moments 5 and 91/3 match the density pieces", 1, ac4);
  all &= run_criterion("AC5", "adjoint identities T_a*, A_alpha, I_alpha, I_Delta on 200 pairs", 60, ac5);
  all &= run_criterion("AC6", "I_Delta independent of 5 random root orderings per system", 60, ac6);
  all &= run_criterion("AC7", "Monte-Carlo agreement, 10^6 samples, |z| <= 4", 300, ac7);
  all &= run_criterion("AC8", "root sign flips and the alternating form change no moment", 60, ac8);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
