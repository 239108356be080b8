#include "circalg/twisted.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "circalg/oracle.hpp"
#include "generators.hpp"
#include "test_oracles.hpp"

namespace circalg {
namespace {

using testing::make_rng;
using testing::random_row;
using testing::real_row;
using testing::relative_gap;

void expect_near(Complex a, Complex b, double tol) {
  EXPECT_LE(std::abs(a - b), tol) << a << " vs " << b;
}

// |mu_i| in [0.5, 2], uniform phase.
MuWeights random_weights(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> mag(0.5, 2.0), phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> mu(n);
  mu[0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) mu[i] = std::polar(mag(rng), phase(rng));
  return MuWeights(mu);
}

const Complex kA(2.0, 0.5), kB(-0.75, 1.25);

TEST(MuWeightsTest, Validation) {
  EXPECT_NO_THROW(MuWeights({1.0, kA, kB}));
  for (const auto& bad : {std::vector<Complex>{2.0, 1.0}, std::vector<Complex>{1.0, 0.0},
                          std::vector<Complex>{1.0, Complex(INFINITY, 0)}, std::vector<Complex>{}}) {
    try {
      MuWeights w(bad);
      FAIL();
    } catch (const error& e) {
      EXPECT_TRUE(e.code() == errc::invalid_weights || e.code() == errc::invalid_order);
    }
  }
  const std::vector<Complex> tail{kA, kB};
  const auto w = MuWeights::from_tail(tail);
  EXPECT_EQ(w.order(), 3u);
  EXPECT_EQ(w[0], Complex(1.0));
  EXPECT_TRUE(w.same_as(MuWeights({1.0, kA + 1e-13, kB})));
  EXPECT_FALSE(w.same_as(MuWeights({1.0, kA + 1e-11, kB})));
  EXPECT_FALSE(w.same_as(MuWeights::ones(4)));
}

TEST(CocycleTest, FromMuExamples) {
  const auto f = cocycle_from_mu(MuWeights({1.0, kA, kB}));
  expect_near(f(1, 1), kA * kA / kB, 1e-14);
  expect_near(f(1, 2), kA * kB, 1e-14);
  expect_near(f(2, 2), kB * kB / kA, 1e-14);
  expect_near(f(2, 1), kA * kB, 1e-14);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(f(0, i), Complex(1.0));
    EXPECT_EQ(f(i, 0), Complex(1.0));
  }
  const auto ones = cocycle_from_mu(MuWeights::ones(5));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(ones(i, j), Complex(1.0));
}

TEST(CocycleTest, VerifyExamples) {
  EXPECT_TRUE(verify_cocycle(cocycle_from_mu(MuWeights({1.0, kA, kB}))).holds);
  auto r = verify_cocycle(TwoCocycle(4, std::vector<Complex>(16, 1.0)));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.max_residual, 0.0);

  std::vector<Complex> table(9, 1.0);
  table[1 * 3 + 1] = 1.1;
  r = verify_cocycle(TwoCocycle(3, table));
  EXPECT_FALSE(r.holds);
  EXPECT_NEAR(r.max_residual, 0.1, 0.011);

  table[1 * 3 + 1] = 0.0;
  try {
    verify_cocycle(TwoCocycle(3, table));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_cocycle);
  }
  EXPECT_THROW(TwoCocycle(3, std::vector<Complex>(8, 1.0)), error);
}

TEST(CocycleProperty, CoboundariesPass) {
  auto rng = make_rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
    const auto r = verify_cocycle(cocycle_from_mu(random_weights(rng, n)));
    ASSERT_TRUE(r.holds);
    ASSERT_LE(r.max_residual, 1e-10);
  }
}

TEST(MuDenseTest, PaperLayout) {
  const Complex c1(1.5), c2(-2.0, 1.0), c3(0.25, 3.0);
  const auto d = mu_to_dense(MuCirculant({c1, c2, c3}, MuWeights({1.0, kA, kB})));
  const Complex want[3][3] = {
      {c1, c2, c3},
      {c3 * kA * kB, c1, c2 * kA * kA / kB},
      {c2 * kA * kB, c3 * kB * kB / kA, c1},
  };
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) expect_near(d(i, j), want[i][j], 1e-13);
}

TEST(MuDenseTest, Reductions) {
  auto rng = make_rng(62);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto row = random_row(rng, n);
    EXPECT_EQ(mu_to_dense(MuCirculant(row, MuWeights::ones(n))), to_dense(Circulant(row)));
    std::vector<Complex> scalar(n);
    scalar[0] = row[0];
    const auto d = mu_to_dense(MuCirculant(scalar, random_weights(rng, n)));
    EXPECT_EQ(d, oracle::dense_scale(row[0], DenseMatrix::identity(n)));
  }
  EXPECT_THROW(MuCirculant(real_row({1, 2}), MuWeights::ones(3)), error);
}

TEST(PsiTest, Examples) {
  const auto w = MuWeights({1.0, kA, kB});
  EXPECT_EQ(psi(MuCirculant(real_row({1, 1, 1}), w)), Circulant({1.0, kA, kB}));
  const Circulant c(real_row({1, 2, 3}));
  EXPECT_EQ(psi(MuCirculant(real_row({1, 2, 3}), MuWeights::ones(3))), c);
  const auto back = psi_inv(c, MuWeights(real_row({1, 2, 4})));
  EXPECT_EQ(back[0], Complex(1.0));
  EXPECT_EQ(back[1], Complex(1.0));
  EXPECT_EQ(back[2], Complex(0.75));
  EXPECT_TRUE(back.weights().same_as(MuWeights(real_row({1, 2, 4}))));
}

TEST(PsiProperty, RoundTripAndIsomorphism) {
  auto rng = make_rng(63);
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto w = random_weights(rng, n);
    const MuCirculant x(random_row(rng, n), w), y(random_row(rng, n), w);
    const auto rt = psi_inv(psi(x), w);
    for (std::size_t k = 0; k < n; ++k) expect_near(rt[k], x[k], 1e-14);

    const auto dx = mu_to_dense(x), dy = mu_to_dense(y);
    const auto prod = mu_to_dense(mu_mul(x, y));
    const double scale = 1.0 + inf_norm(dx) * inf_norm(dy);
    EXPECT_LE(max_abs_diff(prod, oracle::dense_mul(dx, dy)), 1e-9 * scale) << n;
  }
}

TEST(MuMulTest, Examples) {
  const auto w = MuWeights({1.0, kA, kB});
  auto rng = make_rng(64);
  const MuCirculant y(random_row(rng, 3), w);
  const auto iy = mu_mul(MuCirculant(real_row({1, 0, 0}), w), y);
  for (std::size_t k = 0; k < 3; ++k) expect_near(iy[k], y[k], 1e-15);

  const MuCirculant shift(real_row({0, 1, 0}), w);
  const auto sq = mu_mul(shift, shift);
  expect_near(sq[0], 0.0, 1e-15);
  expect_near(sq[1], 0.0, 1e-15);
  expect_near(sq[2], kA * kA / kB, 1e-14);

  try {
    mu_mul(shift, MuCirculant(real_row({0, 1, 0}), MuWeights::ones(3)));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::incompatible_algebras);
  }
}

TEST(MuEigenTest, Shift) {
  const auto w = MuWeights({1.0, kA, kB});
  const MuCirculant m(real_row({0, 1, 0}), w);
  const auto eig = mu_eigen(m);
  const auto ctx = FourierContext::for_order(3);
  const auto dense = mu_to_dense(m);
  for (std::size_t j = 0; j < 3; ++j) {
    const Complex wj = ctx->power(j);
    expect_near(eig.values[j], kA * wj, 1e-14);
    expect_near(eig.vectors[j][0], 1.0, 0.0);
    expect_near(eig.vectors[j][1], kA * wj, 1e-14);
    expect_near(eig.vectors[j][2], kB * wj * wj, 1e-14);
    EXPECT_LE(oracle::eigen_residual(dense, eig.values[j], eig.vectors[j]), 1e-12);
  }
}

TEST(MuEigenTest, Reductions) {
  auto rng = make_rng(65);
  const auto row = random_row(rng, 6);
  const auto a = mu_eigen(MuCirculant(row, MuWeights::ones(6)));
  const auto b = eigenvalues(Circulant(row));
  for (std::size_t j = 0; j < 6; ++j) expect_near(a.values[j], b[j], 1e-14);
  std::vector<Complex> scalar(5);
  scalar[0] = Complex(2.0, -1.0);
  const auto scaled = mu_eigen(MuCirculant(scalar, random_weights(rng, 5)));
  for (const auto& z : scaled.values.values()) {
    expect_near(z, scalar[0], 1e-14);
  }
}

TEST(MuEigenProperty, Residuals) {
  auto rng = make_rng(66);
  for (std::size_t n = 1; n <= 16; ++n) {
    const MuCirculant m(random_row(rng, n), random_weights(rng, n));
    const auto dense = mu_to_dense(m);
    const auto eig = mu_eigen(m);
    // eigenpairs of psi(m) transported by scaling with mu
    const auto ctx = FourierContext::for_order(n);
    const auto plain = eigenvalues(psi(m));
    for (std::size_t j = 1; j <= n; ++j) {
      auto x = eigenvector(*ctx, j);
      for (std::size_t i = 0; i < n; ++i) x[i] *= m.weights()[i];
      const auto ax = oracle::dense_apply(dense, x);
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(ax[i] - plain[j - 1] * x[i]));
      EXPECT_LE(worst, 1e-9 * (1.0 + inf_norm(dense))) << n;
      expect_near(eig.values[j - 1], plain[j - 1], 1e-14);
    }
  }
}

TEST(SkewTest, Root) {
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto r = skew_root(n);
    EXPECT_EQ(r.order, n);
    Complex p = 1.0;
    for (std::size_t k = 0; k < n; ++k) p *= r.sigma;
    expect_near(p, -1.0, 1e-12);
    expect_near(r.sigma * r.sigma, FourierContext::for_order(n)->omega(), 1e-12);
  }
  EXPECT_THROW(skew_root(0), error);
}

TEST(SkewTest, Examples) {
  const Complex a(1.0), b(2.0, 1.0), c(-3.0);
  const auto d = mu_to_dense(skew_circ({a, b, c}));
  const Complex want[3][3] = {{a, b, c}, {-c, a, b}, {-b, -c, a}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) expect_near(d(i, j), want[i][j], 1e-12);

  const auto eig = mu_eigen(skew_circ(real_row({1, 1})));
  expect_near(eig.values[0], Complex(1, 1), 1e-15);
  expect_near(eig.values[1], Complex(1, -1), 1e-15);

  EXPECT_EQ(mu_to_dense(skew_circ({Complex(4.0, 2.0)}))(0, 0), Complex(4.0, 2.0));
}

TEST(SkewProperty, SignFlipBelowDiagonal) {
  auto rng = make_rng(67);
  for (std::size_t n = 1; n <= 32; ++n) {
    const auto row = random_row(rng, n);
    const auto skew = mu_to_dense(skew_circ(row));
    auto want = to_dense(Circulant(row));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) want(i, j) = -want(i, j);
    EXPECT_LE(max_abs_diff(skew, want), 1e-12) << n;
  }
}

TEST(MuFormsTest, Examples) {
  auto f = mu_forms(MuCirculant(real_row({1, 0, 0}), MuWeights({1.0, kA, kB})));
  expect_near(f.q(1), 3.0, 1e-14);
  expect_near(f.q(2), 3.0, 1e-14);
  expect_near(f.q(3), 1.0, 1e-14);
  f = mu_forms(skew_circ(real_row({1, 1})));
  expect_near(f.q(1), 2.0, 1e-14);
  expect_near(f.q(2), 2.0, 1e-14);
}

TEST(MuFormsProperty, TraceDeterminantReduction) {
  auto rng = make_rng(68);
  for (std::size_t n = 1; n <= 10; ++n) {
    const MuCirculant m(random_row(rng, n), random_weights(rng, n));
    const auto f = mu_forms(m);
    EXPECT_LE(std::abs(f.q(1) - static_cast<double>(n) * m[0]), 1e-10);
    const auto fl = oracle::faddeev_leverrier(mu_to_dense(m));
    EXPECT_LE(relative_gap(f.q(n), ((n % 2) ? -1.0 : 1.0) * fl[n]), 1e-8) << n;

    const auto row = random_row(rng, n);
    const auto g = mu_forms(MuCirculant(row, MuWeights::ones(n)));
    const auto h = forms_from_spectrum(eigenvalues(Circulant(row)));
    for (std::size_t i = 1; i <= n; ++i) expect_near(g.q(i), h.q(i), 1e-14);
  }
}

}  // namespace
}  // namespace circalg
