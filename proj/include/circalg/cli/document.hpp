#pragma once

// Matrix documents: one JSON object per matrix.
//
//   {"kind": "circulant", "n": 3, "first_row": [["1", "0"], ["2", "0"], ["3", "0"]]}
//
// Complex scalars are [re, im] pairs of decimal strings, rationals are "p/q"
// strings. Printing uses the shortest round-trip decimal form, so
// parse(print(doc)) == doc bit for bit.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circalg/circulant.hpp"
#include "circalg/integral_lattice.hpp"
#include "circalg/rational.hpp"
#include "circalg/twisted.hpp"

namespace circalg::cli {

enum class DocumentKind { circulant, mu_circulant, skew_circulant, dense, rational_circulant };

std::string_view kind_name(DocumentKind kind);

/// Malformed input. field() names the offending field ("first_row[2]").
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string field, const std::string& what);
  const std::string& field() const noexcept { return field_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string field_;
  std::string detail_;
};

struct MatrixDocument {
  DocumentKind kind = DocumentKind::circulant;
  std::size_t n = 0;
  std::vector<Complex> first_row;       // circulant, mu_circulant, skew_circulant
  std::vector<Complex> mu;              // mu_circulant: mu_2..mu_n
  std::vector<Complex> entries;         // dense, row-major n * n
  std::vector<Rational> rational_row;   // rational_circulant

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

MatrixDocument parse_document(std::string_view text);
std::string print_document(const MatrixDocument& doc);

/// Zero or more documents: a single object, an array of objects, or several
/// objects in sequence.
std::vector<MatrixDocument> parse_documents(std::string_view text);

std::string format_double(double x);
double parse_double(std::string_view text, const std::string& field);

MatrixDocument make_document(const Circulant& c);
MatrixDocument make_document(const MuCirculant& m);
MatrixDocument make_document(const DenseMatrix& d);
MatrixDocument make_document(const RationalCirculant& c);

/// Conversions; each throws parse_error (field "kind") on a kind mismatch.
/// A rational_circulant converts to a Circulant exactly when every entry is
/// representable; otherwise it is rounded.
Circulant to_circulant(const MatrixDocument& doc);
MuCirculant to_mu_circulant(const MatrixDocument& doc);
DenseMatrix to_dense_matrix(const MatrixDocument& doc);
RationalCirculant to_rational_circulant(const MatrixDocument& doc);

}  // namespace circalg::cli
