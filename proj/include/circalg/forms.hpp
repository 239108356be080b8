#pragma once

// Characteristic forms q_1..q_n of an element x of C Z_n: x is a root of
// X^n - q_1(x) X^(n-1) + ... + (-1)^n q_n(x), the characteristic polynomial
// of its circulant. q_i is the i-th elementary symmetric polynomial of the
// eigenvalues, recovered from power sums by Newton's identities.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "circalg/circulant.hpp"
#include "circalg/spectral.hpp"

namespace circalg {

class FormsVector {
 public:
  explicit FormsVector(std::vector<Complex> q);

  std::size_t order() const noexcept { return q_.size(); }
  /// q_i for 1 <= i <= n.
  const Complex& q(std::size_t i) const;
  std::span<const Complex> values() const noexcept { return q_; }

 private:
  std::vector<Complex> q_;
};

struct SymmetricTables {
  /// power_sums[k-1] = p_k = sum_j lambda_j^k, k = 1..n.
  std::vector<Complex> power_sums;
  /// elementary[k] = s_k, k = 0..n, s_0 = 1.
  std::vector<Complex> elementary;
};

/// k s_k = sum_{i=1..k} (-1)^(i-1) s_{k-i} p_i.
SymmetricTables symmetric_tables(const Spectrum& spectrum);

/// Forms from a spectrum; the twisted module reuses this.
FormsVector forms_from_spectrum(const Spectrum& spectrum);

/// Imaginary parts are cleared when every coefficient of c is real.
FormsVector forms(const Circulant& c);

/// Monic characteristic polynomial, highest degree first:
/// result[k] = (-1)^k q_k, result[0] = 1.
std::vector<Complex> char_poly(const Circulant& c);

/// x-bar = (-1)^(n+1) x^(n-1) + (-1)^n q_1 x^(n-2) + ... + q_(n-1),
/// so that x * x-bar = q_n(x).
Circulant conjugate(const Circulant& c);

struct InvertibilityVerdict {
  bool invertible = true;
  Complex norm;  // q_n
  double threshold = 0.0;
  /// Set when singular: 1-based j with p_C(omega^(j-1)) ~ 0.
  std::optional<std::size_t> witness_index;
  Complex witness_root;
  double witness_magnitude = 0.0;
};

/// |q_n| <= 1e-9 (1 + ||C||_inf)^n is treated as zero.
double singularity_threshold(const Circulant& c);

InvertibilityVerdict is_invertible(const Circulant& c);

/// x^-1 = x-bar / q_n(x). Throws singular_matrix_error with the
/// root-of-unity witness when q_n vanishes.
Circulant inverse(const Circulant& c);

}  // namespace circalg
