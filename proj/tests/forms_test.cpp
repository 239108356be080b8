#include "circalg/forms.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "circalg/oracle.hpp"
#include "generators.hpp"
#include "test_oracles.hpp"

namespace circalg {
namespace {

using testing::make_rng;
using testing::random_circulant;
using testing::real_row;
using testing::relative_gap;

void expect_near(Complex a, Complex b, double tol) {
  EXPECT_LE(std::abs(a - b), tol) << a << " vs " << b;
}

Circulant random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    auto c = testing::shifted_circulant(rng, n);
    if (is_invertible(c).invertible) return c;
  }
}

TEST(SymmetricTablesTest, AllOnes) {
  const auto t = symmetric_tables(Spectrum({1.0, 1.0, 1.0}));
  for (const auto& p : t.power_sums) expect_near(p, 3.0, 1e-15);
  const double s[] = {1, 3, 3, 1};
  for (std::size_t k = 0; k <= 3; ++k) expect_near(t.elementary[k], s[k], 1e-14);
}

TEST(SymmetricTablesTest, SpectrumOf123) {
  const double h = std::sqrt(3.0) / 2.0;
  const auto t = symmetric_tables(Spectrum({6.0, Complex(-1.5, -h), Complex(-1.5, h)}));
  expect_near(t.elementary[1], 3.0, 1e-12);
  expect_near(t.elementary[2], -15.0, 1e-12);
  expect_near(t.elementary[3], 18.0, 1e-12);
}

TEST(SymmetricTablesTest, MatchesSubsetSums) {
  const std::vector<Complex> lam{2.0, Complex(1, 1), 0.0, Complex(1, -1)};
  const auto t = symmetric_tables(Spectrum(lam));
  const auto brute = testing::elementary_by_subsets(lam);
  const double s[] = {1, 4, 6, 4, 0};
  for (std::size_t k = 0; k <= 4; ++k) {
    expect_near(t.elementary[k], s[k], 1e-13);
    expect_near(brute[k], s[k], 1e-13);
  }
}

TEST(SymmetricTablesProperty, NewtonAgreesWithExpansion) {
  auto rng = make_rng(31);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto lam = testing::random_row(rng, n);
    const auto t = symmetric_tables(Spectrum(lam));
    const auto s = testing::elementary_by_expansion(lam);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_LE(relative_gap(t.elementary[k], s[k]), 1e-9) << n << " " << k;
    for (std::size_t k = 1; k <= n; ++k) {
      Complex rhs = 0.0;
      for (std::size_t i = 1; i <= k; ++i) rhs += ((i % 2) ? 1.0 : -1.0) * t.elementary[k - i] * t.power_sums[i - 1];
      EXPECT_LE(relative_gap(static_cast<double>(k) * t.elementary[k], rhs), 1e-9);
    }
  }
}

TEST(FormsTest, Examples) {
  auto f = forms(Circulant(real_row({1, 2, 3})));
  expect_near(f.q(1), 3.0, 1e-12);
  expect_near(f.q(2), -15.0, 1e-12);
  expect_near(f.q(3), 18.0, 1e-12);
  f = forms(Circulant(real_row({1, 1, 0, 0})));
  const double want[] = {4, 6, 4, 0};
  for (std::size_t i = 1; i <= 4; ++i) {
    expect_near(f.q(i), want[i - 1], 1e-12);
    EXPECT_EQ(f.q(i).imag(), 0.0);
  }
  EXPECT_THROW(f.q(0), error);
  EXPECT_THROW(f.q(5), error);
}

TEST(FormsTest, IdentityGivesBinomials) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto f = forms(Circulant::identity(n));
    double binom = 1.0;
    for (std::size_t i = 1; i <= n; ++i) {
      binom = binom * static_cast<double>(n - i + 1) / static_cast<double>(i);
      EXPECT_LE(relative_gap(f.q(i), binom), 1e-12) << n << " " << i;
    }
  }
}

TEST(FormsTest, TraceAndDeterminant) {
  auto rng = make_rng(32);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto c = random_circulant(rng, n);
    const auto f = forms(c);
    EXPECT_LE(relative_gap(f.q(1), static_cast<double>(n) * c[0]), 1e-12);
    const auto fl = oracle::faddeev_leverrier(to_dense(c));
    const double sign = (n % 2) ? -1.0 : 1.0;
    EXPECT_LE(relative_gap(f.q(n), sign * fl[n]), 1e-9) << n;
  }
}

TEST(CharPolyTest, Examples) {
  auto p = char_poly(Circulant(real_row({1, 2, 3})));
  const double want[] = {1, -3, -15, -18};
  for (std::size_t k = 0; k < 4; ++k) expect_near(p[k], want[k], 1e-12);
  p = char_poly(Circulant::identity(2));
  expect_near(p[1], -2.0, 1e-15);
  expect_near(p[2], 1.0, 1e-15);
  p = char_poly(Circulant(real_row({0, 1})));
  expect_near(p[1], 0.0, 1e-15);
  expect_near(p[2], -1.0, 1e-15);
}

TEST(CharPolyProperty, AgreesWithFaddeevLeverrier) {
  auto rng = make_rng(33);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto c = random_circulant(rng, n);
      const auto mine = char_poly(c);
      const auto ref = oracle::faddeev_leverrier(to_dense(c));
      for (std::size_t k = 0; k <= n; ++k) EXPECT_LE(relative_gap(mine[k], ref[k]), 1e-8) << n << " " << k;
    }
  }
}

TEST(CharPolyProperty, CayleyHamilton) {
  auto rng = make_rng(34);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto c = random_circulant(rng, n);
      const auto p = char_poly(c);
      Circulant acc = Circulant::zero(n);
      for (std::size_t k = 0; k <= n; ++k) {
        acc = linear_combine(1.0, mul_naive(acc, c), p[k], Circulant::identity(n));
      }
      const double bound = 1e-8 * std::pow(1.0 + inf_norm(c), static_cast<double>(n));
      EXPECT_LE(inf_norm(acc), bound) << n;
    }
  }
}

TEST(ConjugateTest, Examples) {
  EXPECT_LE(max_abs_diff(conjugate(Circulant(real_row({1, 2, 3}))), Circulant(real_row({-5, 7, 1}))), 1e-12);
  EXPECT_LE(max_abs_diff(conjugate(Circulant::identity(3)), Circulant::identity(3)), 1e-13);
  const Circulant x(real_row({1, 1, 0, 0}));
  EXPECT_LE(inf_norm(mul_naive(x, conjugate(x))), 1e-12);
}

TEST(ConjugateProperty, ProductIsNorm) {
  auto rng = make_rng(35);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto c = random_circulant(rng, n);
    const auto prod = mul_naive(c, conjugate(c));
    const Complex qn = forms(c).q(n);
    const double scale = std::pow(1.0 + inf_norm(c), static_cast<double>(n));
    EXPECT_LE(max_abs_diff(prod, linear_combine(qn, Circulant::identity(n), 0.0, Circulant::zero(n))),
              1e-9 * scale);
  }
}

TEST(FormsProperty, TraceOfConjugate) {
  auto rng = make_rng(36);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_circulant(rng, n);
      ASSERT_LE(relative_gap(forms(conjugate(x)).q(1), forms(x).q(n - 1)), 1e-9) << n;
    }
  }
}

TEST(FormsProperty, SecondFormOfSum) {
  auto rng = make_rng(37);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_circulant(rng, n);
      const auto y = random_circulant(rng, n);
      const auto fx = forms(x), fy = forms(y);
      const Complex lhs = forms(linear_combine(1.0, x, 1.0, y)).q(2);
      const Complex rhs = fx.q(2) + fy.q(2) + fx.q(1) * fy.q(1) - forms(mul_naive(x, y)).q(1);
      ASSERT_LE(relative_gap(lhs, rhs), 1e-9) << n;
    }
  }
}

TEST(FormsProperty, ClosedFormsSmallOrders) {
  auto rng = make_rng(38);
  for (int trial = 0; trial < 500; ++trial) {
    const auto r3 = testing::random_row(rng, 3);
    const auto f3 = forms(Circulant(r3));
    const auto c3 = testing::closed_forms_n3(r3);
    for (std::size_t i = 1; i <= 3; ++i) ASSERT_LE(std::abs(f3.q(i) - c3[i - 1]), 1e-10);
    const auto r4 = testing::random_row(rng, 4);
    const auto f4 = forms(Circulant(r4));
    const auto c4 = testing::closed_forms_n4(r4);
    for (std::size_t i = 1; i <= 4; ++i) ASSERT_LE(std::abs(f4.q(i) - c4[i - 1]), 1e-10);
  }
}

TEST(FormsProperty, RealInputGivesRealForms) {
  auto rng = make_rng(39);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n = 1; n <= 16; ++n) {
    std::vector<Complex> row(n);
    for (auto& z : row) z = u(rng);
    const auto cleared = forms(Circulant(row));
    for (const auto& q : cleared.values()) EXPECT_EQ(q.imag(), 0.0);
    const auto raw = forms_from_spectrum(eigenvalues(Circulant(row)));
    for (const auto& q : raw.values()) EXPECT_LE(std::abs(q.imag()), 1e-9 * std::max(1.0, std::abs(q)));
  }
}

TEST(InvertibilityTest, Witnesses) {
  auto v = is_invertible(Circulant(real_row({1, 1, 1})));
  EXPECT_FALSE(v.invertible);
  ASSERT_TRUE(v.witness_index);
  EXPECT_EQ(*v.witness_index, 2u);
  EXPECT_LE(v.witness_magnitude, 1e-12);

  v = is_invertible(Circulant(real_row({1, 1, 0, 0})));
  EXPECT_FALSE(v.invertible);
  ASSERT_TRUE(v.witness_index);
  EXPECT_EQ(*v.witness_index, 3u);
  expect_near(v.witness_root, -1.0, 1e-15);

  v = is_invertible(Circulant(real_row({1, 2, 3})));
  EXPECT_TRUE(v.invertible);
  EXPECT_FALSE(v.witness_index);
  expect_near(v.norm, 18.0, 1e-12);
}

TEST(InverseTest, Examples) {
  const auto inv = inverse(Circulant(real_row({1, 2, 3})));
  const Circulant want({-5.0 / 18.0, 7.0 / 18.0, 1.0 / 18.0});
  EXPECT_LE(max_abs_diff(inv, want), 1e-12);
  EXPECT_LE(max_abs_diff(inverse(Circulant::identity(5)), Circulant::identity(5)), 1e-13);
  try {
    inverse(Circulant(real_row({1, 1, 0, 0})));
    FAIL();
  } catch (const singular_matrix_error& e) {
    EXPECT_EQ(e.code(), errc::singular_matrix);
    EXPECT_EQ(e.witness_index(), 3u);
    EXPECT_NE(std::string(e.what()).find("omega^2 = -1"), std::string::npos);
  }
}

TEST(InverseTest, MatchesExactDenseInverse) {
  RationalMatrix m(3, 3);
  const int row[] = {1, 2, 3};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = row[(j + 3 - i) % 3];
  const auto exact = oracle::exact_inverse(m);
  const auto inv = inverse(Circulant(real_row({1, 2, 3})));
  for (std::size_t j = 0; j < 3; ++j) expect_near(inv[j], exact(0, j).get_d(), 1e-12);
}

TEST(InverseProperty, RandomInvertible) {
  auto rng = make_rng(40);
  for (std::size_t n = 1; n <= 16; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto c = random_invertible(rng, n);
      const auto inv = inverse(c);
      const double tol = 1e-9 * (1.0 + inf_norm(c) * inf_norm(inv));
      ASSERT_LE(max_abs_diff(mul_naive(c, inv), Circulant::identity(n)), tol) << n;
    }
  }
}

}  // namespace
}  // namespace circalg
