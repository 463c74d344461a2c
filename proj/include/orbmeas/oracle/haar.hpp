#pragma once

#include <Eigen/Dense>

#include <complex>

#include "orbmeas/errors.hpp"
#include "orbmeas/oracle/rng.hpp"

namespace orbmeas::oracle {

using ComplexMatrix = Eigen::MatrixXcd;

/// Haar-distributed element of U(n): QR of a standard complex Gaussian
/// matrix, with each column of Q rotated by the phase of R's diagonal entry
/// so the factorization is unique.
inline ComplexMatrix haar_unitary(int n, Rng& rng) {
  if (n < 2 || n > 8) throw DomainError("haar_unitary supports 2 <= n <= 8");
  ComplexMatrix z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = std::complex<double>(re, im);
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

}  // namespace orbmeas::oracle
