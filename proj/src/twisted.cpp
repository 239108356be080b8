#include "circalg/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace circalg {

MuWeights::MuWeights(std::vector<Complex> mu) : mu_(std::move(mu)) {
  if (mu_.empty()) throw error(errc::invalid_order, "weights need at least one entry");
  if (mu_[0] != Complex(1.0)) throw error(errc::invalid_weights, "mu_1 must be exactly 1");
  for (std::size_t k = 0; k < mu_.size(); ++k) {
    const auto& z = mu_[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || z == Complex(0.0)) {
      throw error(errc::invalid_weights, "mu_" + std::to_string(k + 1) + " must be finite and nonzero");
    }
  }
}

MuWeights MuWeights::from_tail(std::span<const Complex> tail) {
  std::vector<Complex> mu;
  mu.reserve(tail.size() + 1);
  mu.emplace_back(1.0);
  mu.insert(mu.end(), tail.begin(), tail.end());
  return MuWeights(std::move(mu));
}

MuWeights MuWeights::ones(std::size_t n) {
  if (n == 0) throw error(errc::invalid_order, "order must be at least 1");
  return MuWeights(std::vector<Complex>(n, Complex(1.0)));
}

bool MuWeights::same_as(const MuWeights& other, double tol) const {
  if (other.order() != order()) return false;
  for (std::size_t k = 0; k < mu_.size(); ++k) {
    if (std::abs(mu_[k] - other.mu_[k]) > tol) return false;
  }
  return true;
}

TwoCocycle::TwoCocycle(std::size_t n, std::vector<Complex> table) : n_(n), table_(std::move(table)) {
  if (n == 0) throw error(errc::invalid_order, "order must be at least 1");
  if (table_.size() != n * n) {
    throw error(errc::dimension, "cocycle table has " + std::to_string(table_.size()) + " entries, expected " +
                                     std::to_string(n * n));
  }
  for (const auto& z : table_) require_finite(z, "cocycle table");
}

TwoCocycle TwoCocycle::from_dense(const DenseMatrix& m) {
  if (!m.is_square()) throw error(errc::dimension, "cocycle table must be square");
  return TwoCocycle(m.rows(), std::vector<Complex>(m.data().begin(), m.data().end()));
}

TwoCocycle cocycle_from_mu(const MuWeights& mu) {
  const std::size_t n = mu.order();
  std::vector<Complex> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = mu[i] * mu[j] / mu[(i + j) % n];
  }
  return TwoCocycle(n, std::move(table));
}

HopfReport verify_cocycle(const TwoCocycle& f, double tol) {
  const std::size_t n = f.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f(i, j) == Complex(0.0)) {
        throw error(errc::invalid_cocycle,
                    "F(e_" + std::to_string(i + 1) + ", e_" + std::to_string(j + 1) + ") is zero");
      }
    }
  }
  double residual = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    residual = std::max(residual, std::abs(f(0, x) - 1.0));
    residual = std::max(residual, std::abs(f(x, 0) - 1.0));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Complex lhs = f(x, y) * f((x + y) % n, z);
        const Complex rhs = f(y, z) * f(x, (y + z) % n);
        const double scale = std::min(std::abs(lhs), std::abs(rhs));
        residual = std::max(residual, std::abs(lhs - rhs) / scale);
      }
    }
  }
  return {"cocycle", residual <= tol, residual};
}

MuCirculant::MuCirculant(std::vector<Complex> first_row, MuWeights weights)
    : row_(std::move(first_row)), weights_(std::move(weights)) {
  if (weights_.order() != row_.order()) {
    throw error(errc::dimension, "first row has " + std::to_string(row_.order()) + " entries but weights have " +
                                     std::to_string(weights_.order()));
  }
}

DenseMatrix mu_to_dense(const MuCirculant& m) {
  const std::size_t n = m.order();
  const auto& mu = m.weights();
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = (j + n - i) % n;  // c_{j-i+1}, 0-based
      // first row and diagonal carry weight 1 exactly
      out(i, j) = (i == 0 || k == 0) ? m[k] : m[k] * (mu[i] * mu[k] / mu[j]);
    }
  }
  return out;
}

Circulant psi(const MuCirculant& m) {
  std::vector<Complex> row(m.order());
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = m[k] * m.weights()[k];
  return Circulant(std::move(row));
}

MuCirculant psi_inv(const Circulant& c, const MuWeights& mu) {
  if (c.order() != mu.order()) throw error(errc::dimension, "circulant and weights have different orders");
  std::vector<Complex> row(c.order());
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = c[k] / mu[k];
  return MuCirculant(std::move(row), mu);
}

MuCirculant mu_mul(const MuCirculant& x, const MuCirculant& y) {
  if (x.order() != y.order()) {
    throw error(errc::dimension, "orders " + std::to_string(x.order()) + " and " + std::to_string(y.order()) +
                                     " differ");
  }
  if (!x.weights().same_as(y.weights())) {
    throw error(errc::incompatible_algebras, "operands carry different weights");
  }
  return psi_inv(mul_naive(psi(x), psi(y)), x.weights());
}

MuEigen mu_eigen(const MuCirculant& m) {
  const std::size_t n = m.order();
  const auto ctx = FourierContext::for_order(n);
  std::vector<std::vector<Complex>> vectors;
  vectors.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    auto x = eigenvector(*ctx, j);
    for (std::size_t k = 0; k < n; ++k) x[k] *= m.weights()[k];
    vectors.push_back(std::move(x));
  }
  return {eigenvalues(psi(m)), std::move(vectors)};
}

SkewRoot skew_root(std::size_t n) {
  if (n == 0) throw error(errc::invalid_order, "order must be at least 1");
  const double theta = std::numbers::pi / static_cast<double>(n);
  return {n, Complex(std::cos(theta), std::sin(theta))};
}

MuWeights skew_weights(std::size_t n) {
  if (n == 0) throw error(errc::invalid_order, "order must be at least 1");
  std::vector<Complex> mu(n);
  mu[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double theta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    mu[k] = Complex(std::cos(theta), std::sin(theta));
  }
  if (n % 2 == 0) mu[n / 2] = Complex(0.0, 1.0);
  return MuWeights(std::move(mu));
}

MuCirculant skew_circ(std::vector<Complex> first_row) {
  const std::size_t n = first_row.size();
  if (n == 0) throw error(errc::invalid_order, "skew circulant needs at least one coefficient");
  return MuCirculant(std::move(first_row), skew_weights(n));
}

FormsVector mu_forms(const MuCirculant& m) { return forms_from_spectrum(mu_eigen(m).values); }

}  // namespace circalg
