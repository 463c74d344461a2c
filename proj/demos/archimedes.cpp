// Projected orbital measure of SU(2): the uniform law on [-1, 1], checked
// against the Haar-sampling oracle, followed by a few A2 moments.

#include <iostream>

#include "orbmeas/orbmeas.hpp"

int main() {
  using namespace orbmeas;

  const RootSystem a1 = build_root_system(Family::A, 1);
  const Point a{Rational(-1), Rational(1)};
  for (unsigned m = 0; m <= 6; m += 2) {
    MultiIndex e{0, m};
    const auto exact = projection_moment(a1, a, Polynomial::monomial(e));
    const auto est = oracle::mc_projection_moment(2, a, Polynomial::monomial(e), {100000, 7, 0});
    std::cout << "E[x2^" << m << "] = " << exact.value << "  (MC " << est.mean << " +- " << est.std_error << ")\n";
  }

  const RootSystem a2 = build_root_system(Family::A, 2);
  const Point c{Rational(1), Rational(0), Rational(-1)};
  std::cout << "A2 [Delta,Delta] = " << a2.gram_delta() << '\n';
  for (const char* text : {"x1^2", "x1*x2", "x1^4"}) {
    Polynomial f = Polynomial::variable(3, 0);
    if (std::string(text) == "x1^2") f = f * f;
    if (std::string(text) == "x1*x2") f = f * Polynomial::variable(3, 1);
    if (std::string(text) == "x1^4") f = pow(f, 4);
    std::cout << "A2 moment of " << text << " at (1,0,-1): " << projection_moment(a2, c, f).value << '\n';
  }
}
