#include "circalg/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace circalg {

void require_finite(const Complex& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw error(errc::invalid_scalar, std::string(what) + " has a non-finite entry");
  }
}

std::size_t wrap_index(long long i, std::size_t n) {
  const auto m = static_cast<long long>(n);
  long long r = ((i - 1) % m + m) % m;
  return static_cast<std::size_t>(r + 1);
}

GroupElement::GroupElement(std::size_t index, std::size_t order)
    : index_(index), order_(order) {
  if (order == 0) throw error(errc::invalid_order, "group order must be at least 1");
  if (index < 1 || index > order) {
    throw error(errc::index, "group element index " + std::to_string(index) +
                                 " outside 1.." + std::to_string(order));
  }
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (other.order_ != order_) throw error(errc::dimension, "group elements of different orders");
  return GroupElement(wrap_index(static_cast<long long>(index_ + other.index_) - 1, order_), order_);
}

GroupElement GroupElement::inverse() const {
  return GroupElement(wrap_index(static_cast<long long>(order_) - static_cast<long long>(index_) + 2, order_),
                      order_);
}

Circulant::Circulant(std::vector<Complex> first_row) : coeffs_(std::move(first_row)) {
  if (coeffs_.empty()) throw error(errc::invalid_order, "circulant needs at least one coefficient");
  for (const auto& z : coeffs_) require_finite(z, "circulant first row");
}

Circulant Circulant::identity(std::size_t n) {
  if (n == 0) throw error(errc::invalid_order, "order must be at least 1");
  std::vector<Complex> row(n);
  row[0] = 1.0;
  return Circulant(std::move(row));
}

Circulant Circulant::zero(std::size_t n) {
  if (n == 0) throw error(errc::invalid_order, "order must be at least 1");
  return Circulant(std::vector<Complex>(n));
}

Circulant Circulant::all_ones(std::size_t n) {
  if (n == 0) throw error(errc::invalid_order, "order must be at least 1");
  return Circulant(std::vector<Complex>(n, Complex(1.0)));
}

const Complex& Circulant::coeff(std::size_t k) const {
  if (k < 1 || k > coeffs_.size()) {
    throw error(errc::index, "coefficient index " + std::to_string(k) + " outside 1.." +
                                 std::to_string(coeffs_.size()));
  }
  return coeffs_[k - 1];
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw error(errc::dimension, "row " + std::to_string(i + 1) + " has " +
                                       std::to_string(rows[i].size()) + " entries, expected " +
                                       std::to_string(c));
    }
    for (std::size_t j = 0; j < c; ++j) {
      require_finite(rows[i][j], "dense matrix");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix to_dense(const Circulant& c) {
  const std::size_t n = c.order();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c[(j + n - i) % n];
  }
  return m;
}

namespace {

void require_same_order(const Circulant& x, const Circulant& y) {
  if (x.order() != y.order()) {
    throw error(errc::dimension, "orders " + std::to_string(x.order()) + " and " +
                                     std::to_string(y.order()) + " differ");
  }
}

}  // namespace

Circulant linear_combine(Complex a, const Circulant& x, Complex b, const Circulant& y) {
  require_same_order(x, y);
  require_finite(a, "scalar a");
  require_finite(b, "scalar b");
  std::vector<Complex> out(x.order());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a * x[k] + b * y[k];
  return Circulant(std::move(out));
}

Circulant mul_naive(const Circulant& x, const Circulant& y) {
  require_same_order(x, y);
  const std::size_t n = x.order();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex xi = x[i];
    std::size_t k = i;
    for (std::size_t j = 0; j < n; ++j) {
      out[k] += xi * y[j];
      if (++k == n) k = 0;
    }
  }
  return Circulant(std::move(out));
}

Circulant fundamental(std::size_t n) {
  if (n == 0) throw error(errc::invalid_order, "order must be at least 1");
  std::vector<Complex> row(n);
  row[1 % n] = 1.0;
  return Circulant(std::move(row));
}

Circulant power(const Circulant& c, std::size_t k) {
  Circulant result = Circulant::identity(c.order());
  for (std::size_t i = 0; i < k; ++i) result = mul_naive(result, c);
  return result;
}

Circulant transpose(const Circulant& c) {
  const std::size_t n = c.order();
  std::vector<Complex> row(n);
  for (std::size_t k = 0; k < n; ++k) row[k] = c[(n - k) % n];
  return Circulant(std::move(row));
}

double inf_norm(const Circulant& c) { return inf_norm(c.coeffs()); }

double inf_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::abs(z);
  return s;
}

double inf_norm(const DenseMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

double max_abs_diff(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw error(errc::dimension, "vectors of different length");
  double d = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, std::abs(x[k] - y[k]));
  return d;
}

double max_abs_diff(const Circulant& x, const Circulant& y) {
  require_same_order(x, y);
  return max_abs_diff(x.coeffs(), y.coeffs());
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw error(errc::dimension, "matrix shapes differ");
  }
  return max_abs_diff(a.data(), b.data());
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

}  // namespace circalg
