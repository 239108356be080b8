#pragma once

// Circulant matrices over the complex numbers, identified with elements of
// the group algebra of the cyclic group Z_n.
//
// Index convention: formulas and docs are 1-based (c_1..c_n, e_1..e_n, with
// residue 0 mapped to n); storage is 0-based, so c_k lives at coeffs()[k-1].

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "circalg/errors.hpp"

namespace circalg {

using Complex = std::complex<double>;

/// Throws errc::invalid_scalar if z has a NaN or infinite component.
void require_finite(const Complex& z, const char* what);

/// Maps any integer to its 1-based residue in 1..n.
std::size_t wrap_index(long long i, std::size_t n);

/// Element e_i of Z_n, i in 1..n, with e_i e_j = e_{i+j-1}.
class GroupElement {
 public:
  GroupElement(std::size_t index, std::size_t order);

  std::size_t index() const noexcept { return index_; }
  std::size_t order() const noexcept { return order_; }

  GroupElement operator*(const GroupElement& other) const;
  /// e_i^{-1} = e_{n-i+2}.
  GroupElement inverse() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::size_t index_;
  std::size_t order_;
};

/// circ(c_1, ..., c_n): entry (i, j) is c_{j-i+1}.
class Circulant {
 public:
  /// Throws errc::invalid_order on an empty row, errc::invalid_scalar on
  /// non-finite entries.
  explicit Circulant(std::vector<Complex> first_row);

  static Circulant identity(std::size_t n);
  static Circulant zero(std::size_t n);
  static Circulant all_ones(std::size_t n);

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  /// 1-based access, c_k.
  const Complex& coeff(std::size_t k) const;

  friend bool operator==(const Circulant&, const Circulant&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Row-major complex matrix. Most callers use it square; rectangular
/// shapes exist so that shape errors can be reported rather than assumed.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// Throws errc::dimension on ragged rows and errc::invalid_scalar on
  /// non-finite entries.
  static DenseMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const noexcept { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

DenseMatrix to_dense(const Circulant& c);

/// a*X + b*Y coefficientwise.
Circulant linear_combine(Complex a, const Circulant& x, Complex b, const Circulant& y);

/// O(n^2) cyclic convolution of first rows: r_k = sum over i+j-1 = k (mod n)
/// of x_i y_j.
Circulant mul_naive(const Circulant& x, const Circulant& y);

/// P_n = circ(0, 1, 0, ..., 0); P_1 = circ(1).
Circulant fundamental(std::size_t n);

/// C^k by repeated mul_naive; C^0 is the identity.
Circulant power(const Circulant& c, std::size_t k);

/// circ(c_1, c_n, c_{n-1}, ..., c_2).
Circulant transpose(const Circulant& c);

/// Infinity norm of the dense expansion, i.e. sum_k |c_k|.
double inf_norm(const Circulant& c);
double inf_norm(const DenseMatrix& a);
double inf_norm(std::span<const Complex> v);

double max_abs_diff(const Circulant& x, const Circulant& y);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(std::span<const Complex> x, std::span<const Complex> y);

DenseMatrix transpose(const DenseMatrix& a);

}  // namespace circalg
