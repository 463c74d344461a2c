#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "orbmeas/errors.hpp"

namespace orbmeas::oracle {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

namespace detail {

inline double off_diagonal_norm(const Eigen::MatrixXcd& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Each rotation first removes the phase of a_pq, then applies the real
/// symmetric Jacobi rotation that annihilates it.
inline std::vector<double> hermitian_eigenvalues(Eigen::MatrixXcd a) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw DomainError("matrix must be square");
  if (n > 8) throw DomainError("hermitian_eigenvalues supports n <= 8");
  if ((a - a.adjoint()).norm() >= kHermitianTolerance) throw DomainError("matrix is not Hermitian");

  const double stop = kJacobiTolerance * std::max(1.0, a.norm());
  int sweep = 0;
  while (detail::off_diagonal_norm(a) >= stop) {
    if (++sweep > kJacobiMaxSweeps) throw NonConvergence("Jacobi eigensolver did not converge");
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const std::complex<double> apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const std::complex<double> phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double zeta = (aqq - app) / (2.0 * r);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = diag(1, conj(phase)) · [[c, s], [−s, c]] on the (p, q) plane; A ← Jᴴ A J.
        const std::complex<double> jpp = c, jpq = s;
        const std::complex<double> jqp = -s * std::conj(phase), jqq = c * std::conj(phase);
        for (int k = 0; k < n; ++k) {
          const std::complex<double> akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (int k = 0; k < n; ++k) {
          const std::complex<double> apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i).real();
  return eig;
}

}  // namespace orbmeas::oracle
