#include "circalg/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace circalg::oracle {

namespace {

void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols) {
    throw error(errc::dimension, std::string(what) + " needs a square matrix, got " + std::to_string(rows) +
                                     "x" + std::to_string(cols));
  }
}

}  // namespace

DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw error(errc::dimension, "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                     " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

DenseMatrix dense_add(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw error(errc::dimension, "matrix shapes differ");
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

DenseMatrix dense_scale(Complex s, const DenseMatrix& a) {
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

std::vector<Complex> dense_apply(const DenseMatrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) throw error(errc::dimension, "vector length does not match matrix columns");
  std::vector<Complex> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    y[i] = acc;
  }
  return y;
}

std::vector<Complex> faddeev_leverrier(const DenseMatrix& a) {
  require_square(a.rows(), a.cols(), "faddeev_leverrier");
  const std::size_t n = a.rows();
  std::vector<Complex> coeffs(n + 1);
  coeffs[0] = 1.0;
  DenseMatrix m = DenseMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    DenseMatrix am = dense_mul(a, m);
    Complex trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[k] = -trace / static_cast<double>(k);
    for (std::size_t i = 0; i < n; ++i) am(i, i) += coeffs[k];
    m = std::move(am);
  }
  return coeffs;
}

std::vector<Rational> faddeev_leverrier(const RationalMatrix& a) {
  require_square(a.rows(), a.cols(), "faddeev_leverrier");
  const std::size_t n = a.rows();
  std::vector<Rational> coeffs(n + 1);
  coeffs[0] = 1;
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[k] = -trace / static_cast<long>(k);
    coeffs[k].canonicalize();
    for (std::size_t i = 0; i < n; ++i) am(i, i) += coeffs[k];
    m = std::move(am);
  }
  return coeffs;
}

RationalMatrix exact_inverse(const RationalMatrix& a) {
  require_square(a.rows(), a.cols(), "exact_inverse");
  const std::size_t n = a.rows();
  RationalMatrix work = a;
  RationalMatrix right = RationalMatrix::identity(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  for (std::size_t k = 0; k < n; ++k) {
    // Full pivoting: any nonzero entry of the trailing block.
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n && pr == n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (work(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == n) throw error(errc::singular_matrix, "exact_inverse: matrix is singular");
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(k, j), work(pr, j));
        std::swap(right(k, j), right(pr, j));
      }
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(work(i, k), work(i, pc));
      std::swap(perm[k], perm[pc]);
    }
    const Rational pivot = work(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      work(k, j) /= pivot;
      right(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || work(i, k) == 0) continue;
      const Rational f = work(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(k, j);
        right(i, j) -= f * right(k, j);
      }
    }
  }
  // right = (A Q)^-1 = Q^-1 A^-1, so row k of right is row perm[k] of A^-1.
  RationalMatrix inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) inv(perm[k], j) = right(k, j);
  }
  return inv;
}

double eigen_residual(const DenseMatrix& a, Complex lambda, std::span<const Complex> x) {
  require_square(a.rows(), a.cols(), "eigen_residual");
  const double xnorm = std::accumulate(x.begin(), x.end(), 0.0,
                                       [](double m, const Complex& z) { return std::max(m, std::abs(z)); });
  if (xnorm == 0.0) throw error(errc::invalid_vector, "eigen_residual of the zero vector");
  const auto ax = dense_apply(a, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(ax[i] - lambda * x[i]));
  return worst / (1.0 + inf_norm(a) * xnorm);
}

std::vector<Complex> dense_eigenvalues(const DenseMatrix& a) {
  require_square(a.rows(), a.cols(), "dense_eigenvalues");
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw error(errc::dimension, "eigenvalue iteration did not converge");
  const auto& ev = solver.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

OracleReport compare(const std::string& check, std::span<const Complex> a, std::span<const Complex> b,
                     double tol) {
  if (a.size() != b.size()) throw error(errc::dimension, check + ": sizes differ");
  OracleReport r{check, true, 0.0, 0};
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = std::abs(a[k] - b[k]);
    if (d > r.max_deviation || std::isnan(d)) {
      r.max_deviation = d;
      r.worst_index = k;
    }
  }
  r.pass = r.max_deviation <= tol;
  return r;
}

OracleReport compare(const std::string& check, const DenseMatrix& a, const DenseMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw error(errc::dimension, check + ": shapes differ");
  return compare(check, a.data(), b.data(), tol);
}

}  // namespace circalg::oracle
