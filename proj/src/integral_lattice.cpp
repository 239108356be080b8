#include "circalg/integral_lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "circalg/oracle.hpp"
#include "circalg/spectral.hpp"

namespace circalg {

RationalCirculant::RationalCirculant(std::vector<Rational> first_row) : coeffs_(std::move(first_row)) {
  if (coeffs_.empty()) throw error(errc::invalid_order, "circulant needs at least one coefficient");
  for (auto& q : coeffs_) q.canonicalize();
}

RationalCirculant RationalCirculant::identity(std::size_t n) {
  if (n == 0) throw error(errc::invalid_order, "order must be at least 1");
  std::vector<Rational> row(n);
  row[0] = 1;
  return RationalCirculant(std::move(row));
}

namespace {

void require_same_order(std::size_t a, std::size_t b) {
  if (a != b) throw error(errc::dimension, "orders " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

}  // namespace

RationalCirculant operator+(const RationalCirculant& a, const RationalCirculant& b) {
  require_same_order(a.order(), b.order());
  std::vector<Rational> out(a.order());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
  return RationalCirculant(std::move(out));
}

RationalCirculant operator*(const RationalCirculant& a, const RationalCirculant& b) {
  require_same_order(a.order(), b.order());
  const std::size_t n = a.order();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] += a[i] * b[j];
  }
  return RationalCirculant(std::move(out));
}

RationalMatrix to_dense(const RationalCirculant& c) {
  const std::size_t n = c.order();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c[(j + n - i) % n];
  }
  return m;
}

Circulant to_complex(const RationalCirculant& c) {
  std::vector<Complex> row(c.order());
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = c[k].get_d();
  return Circulant(std::move(row));
}

std::vector<Rational> exact_char_poly(const RationalCirculant& c) {
  return oracle::faddeev_leverrier(to_dense(c));
}

namespace {

Rational evaluate(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc = 0;
  for (const auto& a : poly) acc = acc * x + a;
  return acc;
}

// Synthetic division by (X - r); caller guarantees r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& poly, const Rational& r) {
  std::vector<Rational> out(poly.size() - 1);
  Rational carry = 0;
  for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
    carry = carry * r + poly[k];
    out[k] = carry;
  }
  return out;
}

Integer denominator_lcm(const std::vector<Rational>& poly) {
  Integer l = 1;
  for (const auto& a : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den().get_mpz_t());
  return l;
}

// Rational root test against the integer multiple d * poly: a root p/q in
// lowest terms has p | d * a_n and q | d (the leading coefficient).
bool passes_root_test(const std::vector<Rational>& poly, const Integer& d, const Rational& r) {
  const Rational constant = poly.back() * d;
  if (constant == 0 || r == 0) return true;
  const Integer& p = r.get_num();
  const Integer& q = r.get_den();
  return mpz_divisible_p(constant.get_num().get_mpz_t(), p.get_mpz_t()) != 0 &&
         mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t()) != 0;
}

Rational rounded(double x, const Integer& scale) {
  mpq_class v(std::nearbyint(x * scale.get_d()));
  v /= scale;
  v.canonicalize();
  return v;
}

}  // namespace

std::optional<std::vector<Rational>> exact_spectrum(const RationalCirculant& c, NumberDomain domain) {
  const std::size_t n = c.order();
  std::vector<Rational> poly = exact_char_poly(c);
  const Spectrum hints = eigenvalues(to_complex(c));

  const Integer d = denominator_lcm(poly);
  std::vector<Rational> candidates{Rational(0)};
  for (const auto& lam : hints.values()) {
    if (std::abs(lam.imag()) > 1e-6 * (1.0 + std::abs(lam))) continue;
    candidates.push_back(rounded(lam.real(), Integer(1)));
    if (d != 1) candidates.push_back(rounded(lam.real(), d));
  }

  std::vector<Rational> roots;
  for (const auto& r : candidates) {
    while (poly.size() > 1 && passes_root_test(poly, d, r) && evaluate(poly, r) == 0) {
      poly = deflate(poly, r);
      roots.push_back(r);
    }
  }
  if (poly.size() > 1) return std::nullopt;
  if (domain == NumberDomain::integral) {
    for (const auto& r : roots) {
      if (!is_integer(r)) return std::nullopt;
    }
  }

  // Place roots at positions j by nearness to lambda_j.
  std::vector<bool> used(roots.size(), false);
  std::vector<Rational> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::size_t> pick;
    std::optional<Rational> nearby;
    bool ambiguous = false;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const double dist = std::abs(hints[j] - Complex(roots[r].get_d()));
      if (dist <= 2e-6) {
        if (nearby && *nearby != roots[r]) ambiguous = true;
        nearby = roots[r];
      }
      if (!used[r] && dist <= 1e-6 && !pick) pick = r;
    }
    if (!pick || ambiguous) {
      throw error(errc::assignment, "cannot place an exact root at eigenvalue position j = " + std::to_string(j + 1));
    }
    used[*pick] = true;
    out[j] = roots[*pick];
  }
  return out;
}

std::optional<std::vector<Rational>> integer_spectrum(const RationalCirculant& c) {
  return exact_spectrum(c, NumberDomain::integral);
}

BrandtVerdict brandt_check(std::span<const RationalCirculant> elements, NumberDomain domain) {
  BrandtVerdict verdict;
  if (elements.empty()) return verdict;
  const std::size_t n = elements.front().order();
  for (const auto& e : elements) require_same_order(n, e.order());

  auto in_domain = [domain](const Rational& q) { return domain == NumberDomain::rational || is_integer(q); };
  // First failing form of x, if any; q_i = (-1)^i coefficient i.
  auto first_violation = [&](const RationalCirculant& x) -> std::optional<std::pair<std::size_t, Rational>> {
    const auto poly = exact_char_poly(x);
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational q = (i % 2 == 0) ? poly[i] : Rational(-poly[i]);
      if (!in_domain(q)) return std::make_pair(i, q);
    }
    return std::nullopt;
  };

  std::vector<std::optional<std::pair<std::size_t, Rational>>> single;
  single.reserve(elements.size());
  for (const auto& e : elements) single.push_back(first_violation(e));

  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      std::optional<std::pair<std::size_t, Rational>> bad;
      std::string which;
      if (single[a]) {
        bad = single[a];
        which = "a";
      } else if (single[b]) {
        bad = single[b];
        which = "b";
      } else if ((bad = first_violation(elements[a] + elements[b]))) {
        which = "a+b";
      } else if ((bad = first_violation(elements[a] * elements[b]))) {
        which = "ab";
      }
      if (bad) {
        verdict.holds = false;
        verdict.counterexample = BrandtViolation{a, b, which, bad->first, bad->second};
        return verdict;
      }
    }
  }
  return verdict;
}

Reconstruction reconstruct_from_spectrum(std::span<const Rational> lambdas) {
  const std::size_t n = lambdas.size();
  if (n == 0) throw error(errc::invalid_order, "spectrum needs at least one value");
  std::vector<Complex> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = lambdas[j].get_d();
  std::vector<Complex> row = inverse_dft(values);

  bool real = true;
  for (std::size_t k = 1; k < n; ++k) {
    if (lambdas[k] != lambdas[n - k]) {
      real = false;
      break;
    }
  }
  if (real) {
    for (auto& z : row) z = Complex(z.real(), 0.0);
  }
  return {Circulant(std::move(row)), real};
}

LatticeBasis::LatticeBasis(RationalMatrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() == 0) throw error(errc::invalid_order, "lattice basis needs at least one vector");
  if (!rows_.is_square()) {
    throw error(errc::dimension, "lattice basis must be n vectors of length n, got " + std::to_string(rows_.rows()) +
                                     "x" + std::to_string(rows_.cols()));
  }
  const std::size_t n = rows_.rows();
  RationalMatrix work = rows_;
  inverse_ = RationalMatrix::identity(n);
  det_ = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && work(p, k) == 0) ++p;
    if (p == n) {
      det_ = 0;
      throw error(errc::dependent_basis, "basis vectors are linearly dependent (determinant 0)");
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(k, j), work(p, j));
        std::swap(inverse_(k, j), inverse_(p, j));
      }
      det_ = -det_;
    }
    const Rational pivot = work(k, k);
    det_ *= pivot;
    for (std::size_t j = 0; j < n; ++j) {
      work(k, j) /= pivot;
      inverse_(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || work(i, k) == 0) continue;
      const Rational f = work(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(k, j);
        inverse_(i, j) -= f * inverse_(k, j);
      }
    }
  }
}

BasisInverse basis_inverse_integral(const LatticeBasis& basis) {
  BasisInverse out{true, basis.inverse()};
  for (std::size_t i = 0; i < basis.order() && out.integral; ++i) {
    for (std::size_t j = 0; j < basis.order(); ++j) {
      if (!is_integer(out.inverse(i, j))) {
        out.integral = false;
        break;
      }
    }
  }
  return out;
}

LatticeDecomposition lattice_decompose(const LatticeBasis& basis, const RationalCirculant& target) {
  const std::size_t n = basis.order();
  require_same_order(n, target.order());
  LatticeDecomposition out;
  out.coefficients.assign(n, Rational(0));
  const auto& inv = basis.inverse();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out.coefficients[j] += target[i] * inv(i, j);
    out.coefficients[j].canonicalize();
  }
  out.member = true;
  for (const auto& a : out.coefficients) out.member = out.member && is_integer(a);

  if (!out.member && basis_inverse_integral(basis).integral) {
    bool integral_target = true;
    for (const auto& t : target.coeffs()) integral_target = integral_target && is_integer(t);
    if (integral_target) throw std::logic_error("integral basis inverse produced a non-integral decomposition");
  }
  return out;
}

RationalCirculant lattice_recombine(const LatticeBasis& basis, std::span<const Rational> coefficients) {
  const std::size_t n = basis.order();
  require_same_order(n, coefficients.size());
  std::vector<Rational> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) row[k] += coefficients[i] * basis.rows()(i, k);
  }
  return RationalCirculant(std::move(row));
}

std::vector<Integer> delta_lattice_decompose(const LatticeBasis& basis, std::span<const Integer> a) {
  const std::size_t n = basis.order();
  require_same_order(n, a.size());
  if (!basis_inverse_integral(basis).integral) {
    throw error(errc::not_integral_basis, "the coefficient matrix inverse has non-integral entries");
  }
  std::vector<Rational> target(a.begin(), a.end());
  const auto dec = lattice_decompose(basis, RationalCirculant(std::move(target)));

  std::vector<Integer> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = dec.coefficients[i].get_num();

  // Block k of Delta(v_i) is c_ik P^(k-1); compare block by block.
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> block(n);
    for (std::size_t i = 0; i < n; ++i) block[k] += Rational(m[i]) * basis.rows()(i, k);
    std::vector<Rational> expected(n);
    expected[k] = a[k];
    if (RationalCirculant(std::move(block)) != RationalCirculant(std::move(expected))) {
      throw std::logic_error("block " + std::to_string(k + 1) + " of the Delta-lattice combination differs");
    }
  }
  return m;
}

}  // namespace circalg
