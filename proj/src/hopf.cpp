#include "circalg/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "circalg/oracle.hpp"

namespace circalg {

BlockCirculant::BlockCirculant(std::vector<Circulant> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw error(errc::invalid_order, "block circulant needs at least one block");
  for (const auto& b : blocks_) {
    if (b.order() != blocks_.size()) {
      throw error(errc::dimension, "block of order " + std::to_string(b.order()) + " in a block circulant with " +
                                       std::to_string(blocks_.size()) + " blocks");
    }
  }
}

Complex counit(const Circulant& c) {
  Complex s = 0.0;
  for (const auto& z : c.coeffs()) s += z;
  return s;
}

BlockCirculant comultiplication(const Circulant& c) {
  const std::size_t n = c.order();
  std::vector<Circulant> blocks;
  blocks.reserve(n);
  // c_k P^(k-1) has the single nonzero c_k at position k.
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Complex> row(n);
    row[k] = c[k];
    blocks.emplace_back(std::move(row));
  }
  return BlockCirculant(std::move(blocks));
}

BlockCirculant block_mul(const BlockCirculant& x, const BlockCirculant& y) {
  const std::size_t n = x.order();
  if (y.order() != n) throw error(errc::dimension, "block circulants of different orders");
  std::vector<Circulant> out(n, Circulant::zero(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = (i + j) % n;
      out[k] = linear_combine(1.0, out[k], 1.0, mul_naive(x.blocks()[i], y.blocks()[j]));
    }
  }
  return BlockCirculant(std::move(out));
}

DenseMatrix expand(const BlockCirculant& b) {
  const std::size_t n = b.order();
  if (n > kMaxExpandOrder) {
    throw error(errc::dimension, "refusing to expand a block circulant of order " + std::to_string(n) +
                                     " (limit " + std::to_string(kMaxExpandOrder) + ")");
  }
  DenseMatrix out(n * n, n * n);
  for (std::size_t bi = 0; bi < n; ++bi) {
    for (std::size_t bj = 0; bj < n; ++bj) {
      const Circulant& block = b.blocks()[(bj + n - bi) % n];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(bi * n + i, bj * n + j) = block[(j + n - i) % n];
      }
    }
  }
  return out;
}

Circulant antipode(const Circulant& c) { return transpose(c); }

Spectrum delta_spectrum(const Circulant& c) {
  const std::size_t n = c.order();
  const Spectrum base = eigenvalues(c);
  std::vector<Complex> out(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out[a * n + b] = base[(a + b) % n];
  }
  return Spectrum(std::move(out));
}

std::vector<Complex> delta_eigenvector(const FourierContext& ctx, std::size_t a, std::size_t b) {
  const auto xa = eigenvector(ctx, a);
  const auto xb = eigenvector(ctx, b);
  std::vector<Complex> out;
  out.reserve(xa.size() * xb.size());
  for (const auto& u : xa) {
    for (const auto& v : xb) out.push_back(u * v);
  }
  return out;
}

namespace {

HopfReport make_report(std::string axiom, double residual, double tol, double scale) {
  return {std::move(axiom), residual <= tol * (1.0 + scale), residual};
}

DenseMatrix scaled_identity(std::size_t n, Complex s) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

}  // namespace

HopfReport verify_counit_axiom(const Circulant& c, double tol) {
  const std::size_t n = c.order();
  const DenseMatrix p = to_dense(fundamental(n));
  DenseMatrix p_power = DenseMatrix::identity(n);
  DenseMatrix sum(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sum = oracle::dense_add(sum, oracle::dense_scale(c[k], p_power));
    p_power = oracle::dense_mul(p_power, p);
  }
  return make_report("counit", max_abs_diff(sum, to_dense(c)), tol, inf_norm(c));
}

HopfReport verify_antipode_axiom(const Circulant& c, double tol) {
  const std::size_t n = c.order();
  const DenseMatrix p = to_dense(fundamental(n));
  const DenseMatrix q = to_dense(antipode(fundamental(n)));
  DenseMatrix p_power = DenseMatrix::identity(n);
  DenseMatrix q_power = DenseMatrix::identity(n);
  DenseMatrix sum(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sum = oracle::dense_add(sum, oracle::dense_scale(c[k], oracle::dense_mul(q_power, p_power)));
    p_power = oracle::dense_mul(p_power, p);
    q_power = oracle::dense_mul(q_power, q);
  }
  return make_report("antipode", max_abs_diff(sum, scaled_identity(n, counit(c))), tol, inf_norm(c));
}

HopfReport integral_check(const Circulant& h, double tol) {
  const std::size_t n = h.order();
  const Circulant ones = Circulant::all_ones(n);
  const Complex eps = counit(h);
  const double product_residual = max_abs_diff(mul_naive(h, ones), linear_combine(eps, ones, 0.0, ones));

  const std::vector<Complex> one_vector(n, Complex(1.0));
  const auto image = oracle::dense_apply(to_dense(h), one_vector);
  double eigen_residual = 0.0;
  for (const auto& z : image) eigen_residual = std::max(eigen_residual, std::abs(z - eps));

  return make_report("integral", std::max(product_residual, eigen_residual), tol, inf_norm(h));
}

namespace {

// Coefficient tensors over products of P-powers, flattened row-major.
using Tensor = std::vector<Complex>;

Tensor coproduct_tensor(const Circulant& c) {
  const std::size_t n = c.order();
  Tensor t(n * n);
  for (std::size_t k = 0; k < n; ++k) t[k * n + k] = c[k];
  return t;
}

// Delta(P^k) = P^k (x) P^k, applied to the first or second tensor slot.
Tensor comultiply_slot(const Tensor& t2, std::size_t n, bool first) {
  Tensor t3(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Complex v = t2[a * n + b];
      if (first) {
        t3[(a * n + a) * n + b] += v;
      } else {
        t3[(a * n + b) * n + b] += v;
      }
    }
  }
  return t3;
}

}  // namespace

HopfReport verify_coassociativity(const Circulant& c) {
  const std::size_t n = c.order();
  const Tensor d = coproduct_tensor(c);
  const Tensor left = comultiply_slot(d, n, true);
  const Tensor right = comultiply_slot(d, n, false);
  const double residual = max_abs_diff(left, right);
  return {"coassociativity", left == right, residual};
}

DenseMatrix factorize_dense(const DenseMatrix& a) {
  if (!a.is_square()) {
    throw error(errc::dimension, "factorization needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()));
  }
  const std::size_t n = a.rows();
  DenseMatrix grid(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) grid(i, k) = a(i, (i + k) % n);
  }
  return grid;
}

DenseMatrix reconstruct_factorized(const DenseMatrix& grid) {
  if (!grid.is_square()) throw error(errc::dimension, "coefficient grid must be square");
  const std::size_t n = grid.rows();
  DenseMatrix a(n, n);
  // E_ii P^(k-1) is the unit matrix at (i, i+k-1).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) a(i, (i + k) % n) += grid(i, k);
  }
  return a;
}

MultisetMatch match_multisets(std::span<const Complex> a, std::span<const Complex> b, double tol) {
  MultisetMatch m;
  if (a.size() != b.size()) return m;
  std::vector<bool> used(b.size(), false);
  for (const auto& z : a) {
    std::size_t best = b.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(z - b[k]);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    if (best == b.size() || !(best_d <= tol)) {
      m.max_deviation = std::max(m.max_deviation, best_d);
      return m;
    }
    used[best] = true;
    m.max_deviation = std::max(m.max_deviation, best_d);
  }
  m.matched = true;
  return m;
}

}  // namespace circalg
