#include <gtest/gtest.h>

#include <cmath>

#include "orbmeas/orbmeas.hpp"

using namespace orbmeas;
using namespace orbmeas::oracle;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Polynomial one(std::size_t n) { return Polynomial::constant(n, 1); }

}  // namespace

TEST(Rng, SeedDeterminesStream) {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    EXPECT_EQ(u, b.uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(Rng(42).uniform(), c.uniform());
  EXPECT_NE(chunk_seed(1, 0), chunk_seed(1, 1));
  EXPECT_NE(chunk_seed(1, 0), chunk_seed(2, 0));
}

TEST(Rng, NormalMoments) {
  Rng rng(5);
  double s = 0, s2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s += z;
    s2 += z * z;
  }
  EXPECT_NEAR(s / n, 0.0, 4.0 / std::sqrt(n));
  EXPECT_NEAR(s2 / n, 1.0, 4.0 * std::sqrt(2.0 / n));
}

TEST(Haar, UnitaryAndDeterministic) {
  for (int n = 2; n <= 8; ++n) {
    Rng r1(9), r2(9);
    const ComplexMatrix u = haar_unitary(n, r1);
    EXPECT_LT((u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm(), 1e-12);
    EXPECT_EQ((u - haar_unitary(n, r2)).norm(), 0.0);
  }
  Rng rng(1);
  EXPECT_THROW(haar_unitary(1, rng), DomainError);
  EXPECT_THROW(haar_unitary(9, rng), DomainError);
}

TEST(Haar, FirstEntryMeanSquare) {
  Rng rng(3);
  const int n = 3, draws = 100000;
  double s = 0, s2 = 0;
  for (int i = 0; i < draws; ++i) {
    const double v = std::norm(haar_unitary(n, rng)(0, 0));
    s += v;
    s2 += v * v;
  }
  const double mean = s / draws;
  const double se = std::sqrt((s2 / draws - mean * mean) / draws);
  EXPECT_LE(std::abs(mean - 1.0 / 3.0), 4 * se);
}

TEST(Jacobi, Examples) {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  auto eig = hermitian_eigenvalues(m);
  std::sort(eig.begin(), eig.end());
  EXPECT_NEAR(eig[0], -1.0, 1e-12);
  EXPECT_NEAR(eig[1], 1.0, 1e-12);

  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 2.5;
  d(1, 1) = -1;
  d(2, 2) = 7;
  EXPECT_EQ(hermitian_eigenvalues(d), (std::vector<double>{2.5, -1, 7}));

  ComplexMatrix bad(2, 2);
  bad << 0, 1, 2, 0;
  EXPECT_THROW(hermitian_eigenvalues(bad), DomainError);
  EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix::Zero(2, 3)), DomainError);
}

TEST(Jacobi, RandomHermitianSpectra) {
  Rng rng(4);
  for (int n = 2; n <= 8; ++n) {
    const ComplexMatrix u = haar_unitary(n, rng);
    Eigen::VectorXd lambda(n);
    for (int i = 0; i < n; ++i) lambda(i) = rng.normal() * 3;
    const ComplexMatrix m = u * lambda.cast<std::complex<double>>().asDiagonal() * u.adjoint();
    ComplexMatrix h = (m + m.adjoint()) / 2.0;
    auto eig = hermitian_eigenvalues(h);
    std::sort(eig.begin(), eig.end());
    std::vector<double> expected(lambda.data(), lambda.data() + n);
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < n; ++i) EXPECT_NEAR(eig[static_cast<std::size_t>(i)], expected[static_cast<std::size_t>(i)], 1e-9);
  }
}

TEST(McProjection, SU2SecondMoment) {
  const auto est = mc_projection_moment(2, Point{-1, 1}, x(2, 1) * x(2, 1), {100000, 1, 0});
  EXPECT_EQ(est.samples, 100000u);
  EXPECT_TRUE(compare_estimate(ratio(1, 3), est).pass);
  EXPECT_NEAR(est.mean, 1.0 / 3.0, 0.01);
}

TEST(McProjection, TrivialObservables) {
  const Point a{1, 0, -1};
  const std::vector<Polynomial> fs{one(3), x(3, 0) + x(3, 1) + x(3, 2)};
  const auto est = mc_projection_moments(3, a, fs, {5000, 2, 0});
  EXPECT_EQ(est[0].mean, 1.0);
  EXPECT_EQ(est[0].std_error, 0.0);
  EXPECT_NEAR(est[1].mean, 0.0, 1e-12);
}

TEST(McProjection, CoordinatesExchangeable) {
  const Point a{2, ratio(1, 2), ratio(-5, 2)};
  const std::vector<Polynomial> fs{x(3, 0) - x(3, 1), x(3, 0) * x(3, 0) - x(3, 1) * x(3, 1)};
  for (const auto& e : mc_projection_moments(3, a, fs, {100000, 8, 0})) EXPECT_LE(std::abs(e.mean), 4 * e.std_error);
}

TEST(McProjection, ThreadCountDoesNotChangeResult) {
  const Point a{1, 0, -1};
  const Polynomial f = pow(x(3, 0), 2) * x(3, 1);
  const auto e1 = mc_projection_moment(3, a, f, {20000, 77, 1});
  const auto e3 = mc_projection_moment(3, a, f, {20000, 77, 3});
  EXPECT_EQ(e1.mean, e3.mean);
  EXPECT_EQ(e1.std_error, e3.std_error);
  const auto again = mc_projection_moment(3, a, f, {20000, 77, 1});
  EXPECT_EQ(e1.mean, again.mean);
  EXPECT_NE(e1.mean, mc_projection_moment(3, a, f, {20000, 78, 1}).mean);
}

TEST(McProjection, RejectsBadInputs) {
  EXPECT_THROW(mc_projection_moment(2, Point{1, 1}, one(2), {}), TraceNotZero);
  EXPECT_THROW(mc_projection_moment(3, Point{1, -1}, one(3), {}), DimensionMismatch);
  EXPECT_THROW(mc_projection_moment(2, Point{1, -1}, one(3), {}), DimensionMismatch);
  EXPECT_THROW(mc_projection_moment(2, Point{1, -1}, one(2), {1, 1, 0}), DomainError);
}

TEST(McConvolution, SU2SecondMoment) {
  const auto est = mc_convolution_moment(2, Point{2, -2}, Point{1, -1}, x(2, 0) * x(2, 0), {100000, 1, 0});
  EXPECT_TRUE(compare_estimate(5, est).pass);
}

TEST(McConvolution, TrivialObservables) {
  const std::vector<Polynomial> gs{one(3), x(3, 0) + x(3, 1) + x(3, 2)};
  const auto est = mc_convolution_moments(3, Point{1, 0, -1}, Point{2, -1, -1}, gs, {5000, 2, 0});
  EXPECT_EQ(est[0].mean, 1.0);
  EXPECT_NEAR(est[1].mean, 0.0, 1e-10);
}

TEST(McConvolution, RejectsOrderSensitiveObservables) {
  const std::vector<Polynomial> gs{x(3, 0)};
  EXPECT_THROW(mc_convolution_moments(3, Point{1, 0, -1}, Point{1, 0, -1}, gs, {100, 1, 0}), NotSymmetric);
  // x1² agrees with x2² on the trace-zero line, so it is accepted for n = 2
  EXPECT_NO_THROW(mc_convolution_moment(2, Point{1, -1}, Point{1, -1}, x(2, 0) * x(2, 0), {100, 1, 0}));
}

TEST(McConvolution, AgreesWithExactOnA2) {
  const RootSystem a2 = build_root_system(Family::A, 2);
  const Point a{1, 0, -1}, b{2, ratio(-1, 2), ratio(-3, 2)};
  Polynomial p3(3);
  for (std::size_t i = 0; i < 3; ++i) p3 += pow(x(3, i), 3);
  const auto est = mc_convolution_moment(3, a, b, p3, {100000, 11, 0});
  EXPECT_TRUE(compare_estimate(convolution_moment(a2, a, b, p3).value, est).pass);
}

TEST(CompareEstimate, Examples) {
  const auto r1 = compare_estimate(ratio(1, 3), {0.3341, 0.003, 1000, 1});
  EXPECT_NEAR(r1.zscore, (1.0 / 3.0 - 0.3341) / 0.003, 1e-12);
  EXPECT_TRUE(r1.pass);
  const auto r2 = compare_estimate(5, {5.9, 0.01, 1000, 1});
  EXPECT_NEAR(r2.zscore, -90.0, 1e-9);
  EXPECT_FALSE(r2.pass);
  EXPECT_TRUE(compare_estimate(1, {1.0, 0.0, 10, 1}).pass);
  EXPECT_FALSE(compare_estimate(1, {1.1, 0.0, 10, 1}).pass);
  EXPECT_THROW(compare_estimate(1, {1.0, -1.0, 10, 1}), DomainError);
  EXPECT_FALSE(compare_estimate(1, {1.01, 0.001, 10, 1}, 4.0).pass);
  EXPECT_TRUE(compare_estimate(1, {1.01, 0.001, 10, 1}, 20.0).pass);
}
