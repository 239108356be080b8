#include "circalg/errors.hpp"

namespace circalg {

std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_order: return "invalid order";
    case errc::invalid_scalar: return "invalid scalar";
    case errc::dimension: return "dimension mismatch";
    case errc::index: return "index out of range";
    case errc::singular_matrix: return "singular matrix";
    case errc::invalid_cocycle: return "invalid cocycle";
    case errc::invalid_weights: return "invalid weights";
    case errc::incompatible_algebras: return "incompatible algebras";
    case errc::assignment: return "ambiguous eigenvalue assignment";
    case errc::dependent_basis: return "dependent basis";
    case errc::not_integral_basis: return "basis inverse not integral";
    case errc::invalid_vector: return "invalid vector";
  }
  return "unknown error";
}

error::error(errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

singular_matrix_error::singular_matrix_error(const std::string& what,
                                             std::size_t witness_index,
                                             std::complex<double> witness_root,
                                             double witness_magnitude)
    : error(errc::singular_matrix, what),
      witness_index_(witness_index),
      witness_root_(witness_root),
      witness_magnitude_(witness_magnitude) {}

}  // namespace circalg
