#pragma once

// Brute-force reference computations. Nothing in here calls the circulant,
// spectral, forms, hopf, twisted or lattice code; only the scalar and matrix
// value types are shared. Intended for desk-scale sizes (n <= 64 floating,
// n <= 16 exact).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "circalg/circulant.hpp"
#include "circalg/rational.hpp"

namespace circalg::oracle {

struct OracleReport {
  std::string check;
  bool pass = false;
  double max_deviation = 0.0;
  /// Flat index of the worst entry (row * cols + col for matrices).
  std::size_t worst_index = 0;
};

/// Textbook triple loop.
DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix dense_add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix dense_scale(Complex s, const DenseMatrix& a);

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

std::vector<Complex> dense_apply(const DenseMatrix& a, std::span<const Complex> x);

/// Characteristic polynomial by the trace recurrence
///   M_1 = I, c_k = -tr(A M_k) / k, M_(k+1) = A M_k + c_k I,
/// returned highest degree first with leading coefficient 1.
std::vector<Complex> faddeev_leverrier(const DenseMatrix& a);
std::vector<Rational> faddeev_leverrier(const RationalMatrix& a);

/// Gauss-Jordan with full pivoting over the rationals. Throws
/// errc::singular_matrix when the matrix has no inverse.
RationalMatrix exact_inverse(const RationalMatrix& a);

/// ||A x - lambda x||_inf / (1 + ||A||_inf ||x||_inf). Throws
/// errc::invalid_vector for a zero vector.
double eigen_residual(const DenseMatrix& a, Complex lambda, std::span<const Complex> x);

/// All eigenvalues of a general square matrix (QR iteration via Eigen).
std::vector<Complex> dense_eigenvalues(const DenseMatrix& a);

/// Entrywise comparison; passes when max |a - b| <= tol.
OracleReport compare(const std::string& check, const DenseMatrix& a, const DenseMatrix& b, double tol);
OracleReport compare(const std::string& check, std::span<const Complex> a, std::span<const Complex> b,
                     double tol);

}  // namespace circalg::oracle
