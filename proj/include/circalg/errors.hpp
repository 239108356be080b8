#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace circalg {

enum class errc {
  invalid_order,
  invalid_scalar,
  dimension,
  index,
  singular_matrix,
  invalid_cocycle,
  invalid_weights,
  incompatible_algebras,
  assignment,
  dependent_basis,
  not_integral_basis,
  invalid_vector,
};

std::string_view to_string(errc code) noexcept;

/// Base of every error raised by the library. The code identifies the
/// failure class; the message names the offending input.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what);

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Raised by inverse() when the norm form vanishes. Carries the
/// root-of-unity witness y = omega^(j-1) at which p_C(y) is (numerically) zero.
class singular_matrix_error : public error {
 public:
  singular_matrix_error(const std::string& what, std::size_t witness_index,
                        std::complex<double> witness_root,
                        double witness_magnitude);

  /// 1-based eigenvalue position j.
  std::size_t witness_index() const noexcept { return witness_index_; }
  std::complex<double> witness_root() const noexcept { return witness_root_; }
  double witness_magnitude() const noexcept { return witness_magnitude_; }

 private:
  std::size_t witness_index_;
  std::complex<double> witness_root_;
  double witness_magnitude_;
};

}  // namespace circalg
