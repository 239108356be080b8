#pragma once

// Diagonalization of circulants by the discrete Fourier transform.
//
// With omega = cos(2pi/n) + i sin(2pi/n), circ(c_1..c_n) has eigenvalue
// lambda_j = p_C(omega^(j-1)), p_C(X) = c_1 + c_2 X + ... + c_n X^(n-1), and
// eigenvector (1, omega^(j-1), ..., omega^((n-1)(j-1)))^T. Spectra are always
// stored in this j-order; nothing here sorts eigenvalues.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "circalg/circulant.hpp"

namespace circalg {

/// Powers of the primitive root omega for one order. Instances are
/// immutable; for_order() hands out a shared cached copy.
class FourierContext {
 public:
  explicit FourierContext(std::size_t n);

  static std::shared_ptr<const FourierContext> for_order(std::size_t n);

  std::size_t order() const noexcept { return powers_.size(); }
  Complex omega() const noexcept { return powers_.size() > 1 ? powers_[1] : powers_[0]; }
  /// omega^k for any k >= 0 (reduced mod n).
  Complex power(std::size_t k) const noexcept { return powers_[k % powers_.size()]; }
  std::span<const Complex> powers() const noexcept { return powers_; }

 private:
  std::vector<Complex> powers_;
};

/// lambda_1..lambda_n in j-order.
class Spectrum {
 public:
  /// Throws errc::invalid_order when empty, errc::invalid_scalar when any
  /// value is not finite.
  explicit Spectrum(std::vector<Complex> lambdas);

  std::size_t size() const noexcept { return lambdas_.size(); }
  std::span<const Complex> values() const noexcept { return lambdas_; }
  const Complex& operator[](std::size_t k) const { return lambdas_[k]; }

 private:
  std::vector<Complex> lambdas_;
};

/// p_C(X) = c_1 + c_2 X + ... + c_n X^(n-1).
struct RepresenterPolynomial {
  std::vector<Complex> coeffs;

  Complex operator()(Complex x) const;
};

RepresenterPolynomial representer(const Circulant& c);

/// out_j = sum_k in_k omega^(j k), 0-based. Radix-2 for power-of-two
/// lengths, direct summation otherwise.
std::vector<Complex> dft(std::span<const Complex> in);

/// Inverse of dft(): out_i = (1/n) sum_j conj(omega^(i j)) in_j.
std::vector<Complex> inverse_dft(std::span<const Complex> in);

Spectrum eigenvalues(const Circulant& c);

/// x_j for 1 <= j <= n. Throws errc::index otherwise.
std::vector<Complex> eigenvector(const FourierContext& ctx, std::size_t j);

/// psi(C) = diag(lambda_1, ..., lambda_n).
DenseMatrix to_diagonal(const Circulant& c);

/// The circulant whose spectrum (in j-order) is `lambdas`.
Circulant from_spectrum(const Spectrum& lambdas);

/// Product through pointwise multiplication of spectra.
Circulant fast_mul(const Circulant& x, const Circulant& y);

}  // namespace circalg
