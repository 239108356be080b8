#pragma once

// Generalized circulants circ(c_1, ..., c_n; mu_2, ..., mu_n) coming from
// coboundary two-cocycles F(e_i, e_j) = mu_i mu_j / mu_{i+j-1} on Z_n.
// Entry (i, j) is c_{j-i+1} mu_i mu_{j-i+1} / mu_j, with mu_1 = 1.
//
// Psi: circ(c; mu) -> circ(c_1, c_2 mu_2, ..., c_n mu_n) is an algebra
// isomorphism onto ordinary circulants, which is how products and spectra
// are computed. Skew circulants are the case mu_i = sigma^(i-1) with
// sigma = cos(pi/n) + i sin(pi/n).

#include <cstddef>
#include <span>
#include <vector>

#include "circalg/circulant.hpp"
#include "circalg/forms.hpp"
#include "circalg/hopf.hpp"
#include "circalg/spectral.hpp"

namespace circalg {

class MuWeights {
 public:
  /// Full list mu_1..mu_n. Throws errc::invalid_weights unless mu_1 == 1
  /// exactly and every weight is nonzero and finite.
  explicit MuWeights(std::vector<Complex> mu);
  /// From mu_2..mu_n; mu_1 = 1 is implied.
  static MuWeights from_tail(std::span<const Complex> tail);
  static MuWeights ones(std::size_t n);

  std::size_t order() const noexcept { return mu_.size(); }
  std::span<const Complex> values() const noexcept { return mu_; }
  const Complex& operator[](std::size_t k) const { return mu_[k]; }

  /// Componentwise equality within an absolute tolerance.
  bool same_as(const MuWeights& other, double tol = 1e-12) const;

 private:
  std::vector<Complex> mu_;
};

/// Explicit n x n table F(e_i, e_j), stored 0-based.
class TwoCocycle {
 public:
  /// Throws errc::dimension unless table.size() == n * n.
  TwoCocycle(std::size_t n, std::vector<Complex> table);
  static TwoCocycle from_dense(const DenseMatrix& m);

  std::size_t order() const noexcept { return n_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Complex> table_;
};

TwoCocycle cocycle_from_mu(const MuWeights& mu);

/// Checks normalization F(e_1, x) = F(x, e_1) = 1 and
/// F(x, y) F(xy, z) = F(y, z) F(x, yz) over all n^3 triples. The residual is
/// the largest |lhs - rhs| / min(|lhs|, |rhs|) (normalization deviations are
/// folded in as absolute values). Throws errc::invalid_cocycle on a zero entry.
HopfReport verify_cocycle(const TwoCocycle& f, double tol = 1e-10);

class MuCirculant {
 public:
  /// Throws errc::dimension when the weight order differs from the row.
  MuCirculant(std::vector<Complex> first_row, MuWeights weights);

  std::size_t order() const noexcept { return row_.order(); }
  std::span<const Complex> coeffs() const noexcept { return row_.coeffs(); }
  const Complex& operator[](std::size_t k) const { return row_[k]; }
  const MuWeights& weights() const noexcept { return weights_; }

 private:
  Circulant row_;
  MuWeights weights_;
};

DenseMatrix mu_to_dense(const MuCirculant& m);

Circulant psi(const MuCirculant& m);
MuCirculant psi_inv(const Circulant& c, const MuWeights& mu);

/// Product inside one twisted algebra. Throws errc::incompatible_algebras
/// when the weights differ.
MuCirculant mu_mul(const MuCirculant& x, const MuCirculant& y);

struct MuEigen {
  Spectrum values;
  /// vectors[j-1] = (1, mu_2 omega^(j-1), ..., mu_n omega^((n-1)(j-1))).
  std::vector<std::vector<Complex>> vectors;
};

/// lambda_j = c_1 + c_2 mu_2 w + ... + c_n mu_n w^(n-1) at w = omega^(j-1).
MuEigen mu_eigen(const MuCirculant& m);

struct SkewRoot {
  std::size_t order;
  Complex sigma;
};

SkewRoot skew_root(std::size_t n);
MuWeights skew_weights(std::size_t n);

/// scirc(c): the circulant with every entry below the diagonal negated.
MuCirculant skew_circ(std::vector<Complex> first_row);

FormsVector mu_forms(const MuCirculant& m);

}  // namespace circalg
