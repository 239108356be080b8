#pragma once

// Exact questions about circulants with rational entries: characteristic
// polynomials, integer/rational spectra, the Brandt predicate, and lattices
// Z v_1 + ... + Z v_n with v_i = c_i1 I + c_i2 P + ... + c_in P^(n-1).
//
// Everything is exact except two places where omega forces floating point:
// assigning exact roots to eigenvalue positions j, and reconstruction of a
// circulant from its spectrum.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circalg/circulant.hpp"
#include "circalg/rational.hpp"

namespace circalg {

class RationalCirculant {
 public:
  /// Throws errc::invalid_order on an empty row.
  explicit RationalCirculant(std::vector<Rational> first_row);

  static RationalCirculant identity(std::size_t n);

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

  friend bool operator==(const RationalCirculant&, const RationalCirculant&) = default;

 private:
  std::vector<Rational> coeffs_;
};

RationalCirculant operator+(const RationalCirculant& a, const RationalCirculant& b);
/// Exact cyclic convolution.
RationalCirculant operator*(const RationalCirculant& a, const RationalCirculant& b);

RationalMatrix to_dense(const RationalCirculant& c);
Circulant to_complex(const RationalCirculant& c);

enum class NumberDomain { integral, rational };

/// Monic, highest degree first, via exact Faddeev-LeVerrier on the dense
/// expansion. Entry k is (-1)^k q_k.
std::vector<Rational> exact_char_poly(const RationalCirculant& c);

/// Exact eigenvalues in j-order when the characteristic polynomial splits
/// into linear factors over Z (integral) or Q (rational); nullopt otherwise.
/// Roots are found by the rational root test with exact deflation, using
/// the floating eigenvalues as candidate hints. Throws errc::assignment
/// when a root cannot be placed at a unique position j.
std::optional<std::vector<Rational>> exact_spectrum(const RationalCirculant& c, NumberDomain domain);

std::optional<std::vector<Rational>> integer_spectrum(const RationalCirculant& c);

struct BrandtViolation {
  std::size_t a = 0;      // 0-based positions in the input list
  std::size_t b = 0;
  std::string element;    // "a", "b", "a+b" or "ab"
  std::size_t form = 0;   // i in q_i
  Rational value;
};

struct BrandtVerdict {
  bool holds = true;
  std::optional<BrandtViolation> counterexample;
};

/// q_i(a), q_i(b), q_i(a+b), q_i(ab) in Z (or Q) for all ordered pairs,
/// a = b included. Throws errc::dimension on mixed orders.
BrandtVerdict brandt_check(std::span<const RationalCirculant> elements, NumberDomain domain);

struct Reconstruction {
  Circulant circulant;
  /// lambda_{k+1} == lambda_{n-k+1} for all k; imaginary parts are cleared.
  bool real = false;
};

/// c = (1/n) M lambda with M(i, j) = conj(omega^((i-1)(j-1))).
Reconstruction reconstruct_from_spectrum(std::span<const Rational> lambdas);

class LatticeBasis {
 public:
  /// Row i holds the coefficients of v_i. Throws errc::dimension unless
  /// square and errc::dependent_basis when the determinant is zero.
  explicit LatticeBasis(RationalMatrix rows);

  std::size_t order() const noexcept { return rows_.rows(); }
  const RationalMatrix& rows() const noexcept { return rows_; }
  const Rational& determinant() const noexcept { return det_; }
  const RationalMatrix& inverse() const noexcept { return inverse_; }

 private:
  RationalMatrix rows_;
  Rational det_;
  RationalMatrix inverse_;
};

struct BasisInverse {
  bool integral = false;
  RationalMatrix inverse;
};

BasisInverse basis_inverse_integral(const LatticeBasis& basis);

struct LatticeDecomposition {
  std::vector<Rational> coefficients;
  bool member = false;
};

/// Solves (a_1..a_n) * rows = target exactly; member iff every a_i is an
/// integer. Throws errc::dimension on an order mismatch.
LatticeDecomposition lattice_decompose(const LatticeBasis& basis, const RationalCirculant& target);

/// sum_i a_i v_i.
RationalCirculant lattice_recombine(const LatticeBasis& basis, std::span<const Rational> coefficients);

/// Integers m_i with sum_i m_i Delta(v_i) = circ(a_1 I, a_2 P, ..., a_n P^(n-1)).
/// Throws errc::not_integral_basis unless the basis inverse is integral.
std::vector<Integer> delta_lattice_decompose(const LatticeBasis& basis, std::span<const Integer> a);

}  // namespace circalg
