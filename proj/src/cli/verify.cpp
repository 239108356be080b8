#include "circalg/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "circalg/forms.hpp"
#include "circalg/hopf.hpp"
#include "circalg/integral_lattice.hpp"
#include "circalg/oracle.hpp"
#include "circalg/spectral.hpp"
#include "circalg/twisted.hpp"

namespace circalg::cli {

namespace {

using Rng = std::mt19937_64;

std::vector<Complex> random_row(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> row(n);
  for (auto& z : row) {
    const double re = u(rng);
    z = Complex(re, u(rng));
  }
  return row;
}

Circulant random_circulant(Rng& rng, std::size_t n) { return Circulant(random_row(rng, n)); }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

// Deviations are accumulated as measured / scale so one tolerance applies.
// Absolute 1e-12 checks are multiplied by 1e3 to sit on the 1e-9 scale.
struct Tracker {
  CheckOutcome out;
  Tracker(std::string name, double tol) {
    out.name = std::move(name);
    out.tolerance = tol;
    out.pass = true;
  }
  void add(double deviation) {
    out.max_deviation = std::max(out.max_deviation, deviation);
    if (!(deviation <= out.tolerance)) out.pass = false;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      out.pass = false;
      if (out.detail.empty()) out.detail = what;
    }
  }
};

CheckOutcome isomorphism(Rng& rng) {
  Tracker t("isomorphism", 1e-9);
  for (std::size_t n : {2, 3, 4, 5, 8, 16}) {
    for (int k = 0; k < 20; ++k) {
      const auto x = random_circulant(rng, n), y = random_circulant(rng, n);
      const auto naive = mul_naive(x, y);
      t.add(max_abs_diff(to_dense(naive), oracle::dense_mul(to_dense(x), to_dense(y))) * 1e3);
      t.add(max_abs_diff(fast_mul(x, y), naive) / (1.0 + inf_norm(x) * inf_norm(y)));
    }
  }
  return t.out;
}

CheckOutcome eigen_formula(Rng& rng) {
  Tracker t("eigen-formula", 1e-9);
  for (std::size_t n = 1; n <= 32; n += 3) {
    const auto c = random_circulant(rng, n);
    const auto dense = to_dense(c);
    const auto s = eigenvalues(c);
    const auto ctx = FourierContext::for_order(n);
    for (std::size_t j = 1; j <= n; ++j) t.add(oracle::eigen_residual(dense, s[j - 1], eigenvector(*ctx, j)));
  }
  return t.out;
}

CheckOutcome cayley_hamilton(Rng& rng) {
  Tracker t("cayley-hamilton", 1e-8);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto c = random_circulant(rng, n);
    const auto p = char_poly(c);
    Circulant acc = Circulant::zero(n);
    for (std::size_t k = 0; k <= n; ++k) acc = linear_combine(1.0, mul_naive(acc, c), p[k], Circulant::identity(n));
    t.add(inf_norm(acc) / std::pow(1.0 + inf_norm(c), static_cast<double>(n)));
  }
  return t.out;
}

CheckOutcome inverse_formula(Rng& rng) {
  Tracker t("conjugate-inverse", 1e-9);
  std::uniform_real_distribution<double> shift(0.0, 4.0);
  for (std::size_t n = 1; n <= 16; ++n) {
    for (int k = 0; k < 10; ++k) {
      Circulant c = Circulant::zero(n);
      do {
        auto row = random_row(rng, n);
        row[0] += shift(rng);
        c = Circulant(std::move(row));
      } while (!is_invertible(c).invertible);
      const auto inv = inverse(c);
      t.add(max_abs_diff(mul_naive(c, inv), Circulant::identity(n)) / (1.0 + inf_norm(c) * inf_norm(inv)));
    }
  }
  const auto inv = inverse(Circulant({1.0, 2.0, 3.0}));
  t.add(max_abs_diff(inv, Circulant({-5.0 / 18.0, 7.0 / 18.0, 1.0 / 18.0})) * 1e3);
  return t.out;
}

CheckOutcome form_identities(Rng& rng) {
  Tracker t("form-identities", 1e-9);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (int k = 0; k < 20; ++k) {
      const auto x = random_circulant(rng, n), y = random_circulant(rng, n);
      const auto fx = forms(x), fy = forms(y);
      t.add(rel(forms(conjugate(x)).q(1), fx.q(n - 1)));
      const Complex rhs = fx.q(2) + fy.q(2) + fx.q(1) * fy.q(1) - forms(mul_naive(x, y)).q(1);
      t.add(rel(forms(linear_combine(1.0, x, 1.0, y)).q(2), rhs));
    }
  }
  return t.out;
}

CheckOutcome hopf_axioms(Rng& rng) {
  Tracker t("hopf-axioms", 1e-10);
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto c = random_circulant(rng, n);
    for (const auto& r : {verify_counit_axiom(c), verify_antipode_axiom(c), integral_check(c)}) {
      t.require(r.holds, r.axiom + " fails at n = " + std::to_string(n));
      t.add(r.max_residual);
    }
    t.require(antipode(c) == transpose(c), "antipode is not the transpose");
    t.require(verify_coassociativity(c).holds, "coassociativity fails");
  }
  return t.out;
}

CheckOutcome block_spectrum(Rng& rng) {
  Tracker t("block-circulant-spectrum", 1e-9);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto c = random_circulant(rng, n);
    std::vector<Complex> copies;
    const auto lam = eigenvalues(c);
    for (std::size_t r = 0; r < n; ++r) copies.insert(copies.end(), lam.values().begin(), lam.values().end());
    const double scale = 1.0 + inf_norm(c);
    const auto m = match_multisets(oracle::dense_eigenvalues(expand(comultiplication(c))), copies, 1e-9 * scale);
    t.require(m.matched, "eigenvalue multiset mismatch at n = " + std::to_string(n));
    t.add(m.max_deviation / scale);
  }
  return t.out;
}

CheckOutcome twisted(Rng& rng) {
  Tracker t("twisted", 1e-9);
  std::uniform_real_distribution<double> mag(0.5, 2.0), phase(0.0, 6.283185307179586);
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<Complex> mu(n, 1.0);
    for (std::size_t i = 1; i < n; ++i) mu[i] = std::polar(mag(rng), phase(rng));
    const MuWeights w(mu);
    const auto r = verify_cocycle(cocycle_from_mu(w));
    t.require(r.holds, "coboundary fails the cocycle identity");
    t.add(r.max_residual);

    const MuCirculant x(random_row(rng, n), w), y(random_row(rng, n), w);
    const auto dx = mu_to_dense(x), dy = mu_to_dense(y);
    t.add(max_abs_diff(mu_to_dense(mu_mul(x, y)), oracle::dense_mul(dx, dy)) / (1.0 + inf_norm(dx) * inf_norm(dy)));
    const auto eig = mu_eigen(x);
    for (std::size_t j = 0; j < n; ++j) t.add(oracle::eigen_residual(dx, eig.values[j], eig.vectors[j]));

    const auto row = random_row(rng, n);
    auto flipped = to_dense(Circulant(row));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) flipped(i, j) = -flipped(i, j);
    t.add(max_abs_diff(mu_to_dense(skew_circ(row)), flipped) * 1e3);
  }
  return t.out;
}

CheckOutcome lattice(Rng& rng) {
  Tracker t("lattice", 0.0);
  const LatticeBasis basis(RationalMatrix::from_rows({
      {Rational(0), Rational(-1), Rational(1)},
      {Rational(-1, 3), Rational(1, 3), Rational(1, 3)},
      {Rational(1, 3), Rational(2, 3), Rational(-1, 3)},
  }));
  const auto inv = basis_inverse_integral(basis);
  t.require(inv.integral, "example basis inverse is not integral");
  std::uniform_int_distribution<int> d(-100, 100);
  for (int k = 0; k < 50; ++k) {
    const RationalCirculant target({Rational(d(rng)), Rational(d(rng)), Rational(d(rng))});
    const auto dec = lattice_decompose(basis, target);
    t.require(dec.member, "integral target is not a lattice member");
    t.require(lattice_recombine(basis, dec.coefficients) == target, "recombination differs from target");
  }
  return t.out;
}

CheckOutcome brandt() {
  Tracker t("brandt", 1e-9);
  const RationalCirculant a({Rational(2), Rational(1), Rational(1)}), b({Rational(1), Rational(1), Rational(1)});
  t.require(integer_spectrum(a) == std::vector<Rational>{4, 1, 1}, "circ(2,1,1) spectrum");
  t.require(integer_spectrum(b) == std::vector<Rational>{3, 0, 0}, "circ(1,1,1) spectrum");
  const std::vector<RationalCirculant> closure{a, b, a + b, a * b};
  t.require(brandt_check(closure, NumberDomain::integral).holds, "Brandt predicate fails");
  const auto rec = reconstruct_from_spectrum(std::vector<Rational>{4, 1, 1});
  t.require(rec.real, "realness flag");
  t.add(max_abs_diff(rec.circulant, Circulant({2.0, 1.0, 1.0})));
  return t.out;
}

CheckOutcome oracle_agreement(Rng& rng) {
  Tracker t("oracle-agreement", 1e-8);
  std::uniform_int_distribution<int> d(-9, 9);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Rational> row(n);
    for (auto& v : row) v = d(rng);
    const RationalCirculant c(row);
    const auto exact = exact_char_poly(c);
    const auto flt = char_poly(to_complex(c));
    for (std::size_t k = 0; k <= n; ++k) t.add(rel(flt[k], exact[k].get_d()));
  }
  return t.out;
}

}  // namespace

std::vector<CheckOutcome> verify_all(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckOutcome> out;
  auto run = [&](auto&& check) {
    try {
      out.push_back(check());
    } catch (const std::exception& e) {
      CheckOutcome failed;
      failed.name = "exception";
      failed.detail = e.what();
      out.push_back(failed);
    }
  };
  run([&] { return isomorphism(rng); });
  run([&] { return eigen_formula(rng); });
  run([&] { return cayley_hamilton(rng); });
  run([&] { return inverse_formula(rng); });
  run([&] { return form_identities(rng); });
  run([&] { return hopf_axioms(rng); });
  run([&] { return block_spectrum(rng); });
  run([&] { return twisted(rng); });
  run([&] { return lattice(rng); });
  run([] { return brandt(); });
  run([&] { return oracle_agreement(rng); });
  return out;
}

}  // namespace circalg::cli
