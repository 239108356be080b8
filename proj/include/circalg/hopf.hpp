#pragma once

// The Hopf structure of C Z_n carried over to circulants:
//   counit        eps(C) = c_1 + ... + c_n
//   coproduct     Delta(C) = sum_k c_k P^(k-1) (x) P^(k-1)
//   antipode      S(C) = C^T
// Delta(C) is kept as the block circulant circ(c_1 I, c_2 P, ..., c_n P^(n-1))
// and only expanded to n^2 x n^2 for verification at small n.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "circalg/circulant.hpp"
#include "circalg/spectral.hpp"

namespace circalg {

struct HopfReport {
  std::string axiom;
  bool holds = false;
  double max_residual = 0.0;
};

/// Largest block order expand() accepts.
inline constexpr std::size_t kMaxExpandOrder = 8;

/// circ(B_1, ..., B_n) with circulant blocks B_k of order n; block (i, j)
/// is B_{j-i+1}.
class BlockCirculant {
 public:
  /// Throws errc::invalid_order when empty and errc::dimension unless every
  /// block has order equal to the number of blocks.
  explicit BlockCirculant(std::vector<Circulant> blocks);

  std::size_t order() const noexcept { return blocks_.size(); }
  std::span<const Circulant> blocks() const noexcept { return blocks_; }

 private:
  std::vector<Circulant> blocks_;
};

Complex counit(const Circulant& c);

BlockCirculant comultiplication(const Circulant& c);

/// Block-level product (cyclic convolution of blocks).
BlockCirculant block_mul(const BlockCirculant& x, const BlockCirculant& y);

/// n^2 x n^2 dense form. Throws errc::dimension above kMaxExpandOrder.
DenseMatrix expand(const BlockCirculant& b);

Circulant antipode(const Circulant& c);

/// Eigenvalues of Delta(C): entry (a-1) n + (b-1) holds lambda_{a+b-1}, the
/// eigenvalue on x_a (x) x_b. Every lambda_j appears exactly n times.
Spectrum delta_spectrum(const Circulant& c);

/// x_a (x) x_b, the eigenvector of Delta(C) paired with delta_spectrum.
std::vector<Complex> delta_eigenvector(const FourierContext& ctx, std::size_t a, std::size_t b);

/// Checks sum_k c_k P^(k-1) = C. Holds when the residual is at most
/// tol (1 + ||C||_inf); the same convention applies to every verifier here.
HopfReport verify_counit_axiom(const Circulant& c, double tol = 1e-10);

/// Checks sum_k c_k Q^(k-1) P^(k-1) = eps(C) I with Q = P^T.
HopfReport verify_antipode_axiom(const Circulant& c, double tol = 1e-10);

/// Checks h * circ(1, ..., 1) = eps(h) circ(1, ..., 1) and that (1, ..., 1)
/// is an eigenvector of h for eps(h).
HopfReport integral_check(const Circulant& h, double tol = 1e-10);

/// (Delta (x) id) Delta(C) and (id (x) Delta) Delta(C) as coefficient
/// tensors over P-powers; these must agree exactly.
HopfReport verify_coassociativity(const Circulant& c);

/// Coefficients a(i, k) with A = sum_{i,k} a(i, k) E_ii P^(k-1); concretely
/// a(i, k) = A(i, i+k-1 mod n), 0-based storage. Throws errc::dimension for
/// a non-square input.
DenseMatrix factorize_dense(const DenseMatrix& a);

/// Inverse of factorize_dense.
DenseMatrix reconstruct_factorized(const DenseMatrix& grid);

struct MultisetMatch {
  bool matched = false;
  double max_deviation = 0.0;
};

/// Greedy nearest-neighbour pairing; fails if sizes differ or any pair is
/// farther apart than tol.
MultisetMatch match_multisets(std::span<const Complex> a, std::span<const Complex> b, double tol);

}  // namespace circalg
