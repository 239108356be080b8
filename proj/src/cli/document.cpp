#include "circalg/cli/document.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "json_io.hpp"

namespace circalg::cli {

namespace {

struct KindEntry {
  DocumentKind kind;
  std::string_view name;
};

constexpr KindEntry kKinds[] = {
    {DocumentKind::circulant, "circulant"},
    {DocumentKind::mu_circulant, "mu_circulant"},
    {DocumentKind::skew_circulant, "skew_circulant"},
    {DocumentKind::dense, "dense"},
    {DocumentKind::rational_circulant, "rational_circulant"},
};

std::string indexed(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const json& array_field(const json& j, const char* name, std::size_t expected) {
  if (!j.contains(name)) throw parse_error(name, "missing field");
  const json& a = j.at(name);
  if (!a.is_array()) throw parse_error(name, "expected an array");
  if (a.size() != expected) {
    throw parse_error(name, "expected " + std::to_string(expected) + " values, found " + std::to_string(a.size()));
  }
  return a;
}

std::vector<Complex> complex_list(const json& a, const std::string& field) {
  std::vector<Complex> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(decode_complex(a[i], indexed(field, i)));
  return out;
}

json complex_array(std::span<const Complex> values) {
  json a = json::array();
  for (const auto& z : values) a.push_back(encode(z));
  return a;
}

void require_kind(const MatrixDocument& doc, std::initializer_list<DocumentKind> allowed) {
  for (auto k : allowed) {
    if (doc.kind == k) return;
  }
  std::string names;
  for (auto k : allowed) names += (names.empty() ? "" : " or ") + std::string(kind_name(k));
  throw parse_error("kind", "expected " + names + ", found " + std::string(kind_name(doc.kind)));
}

}  // namespace

parse_error::parse_error(std::string field, const std::string& what)
    : std::runtime_error(field + ": " + what), field_(std::move(field)), detail_(what) {}

std::string_view kind_name(DocumentKind kind) {
  for (const auto& e : kKinds) {
    if (e.kind == kind) return e.name;
  }
  return "unknown";
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, const std::string& field) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, x);
  if (first == last || res.ec != std::errc() || res.ptr != last) {
    throw parse_error(field, "'" + std::string(text) + "' is not a decimal number");
  }
  if (!std::isfinite(x)) throw parse_error(field, "value is not finite");
  return x;
}

json encode(Complex z) { return json::array({format_double(z.real()), format_double(z.imag())}); }

json encode(const Rational& q) { return format_rational(q); }

Complex decode_complex(const json& j, const std::string& field) {
  auto part = [&](const json& v, const std::string& f) {
    if (v.is_string()) return parse_double(v.get_ref<const std::string&>(), f);
    if (v.is_number()) {
      const double x = v.get<double>();
      if (!std::isfinite(x)) throw parse_error(f, "value is not finite");
      return x;
    }
    throw parse_error(f, "expected a decimal string");
  };
  if (j.is_array()) {
    if (j.size() != 2) throw parse_error(field, "expected a [re, im] pair");
    return {part(j[0], field + ".re"), part(j[1], field + ".im")};
  }
  // a bare real value
  return {part(j, field), 0.0};
}

Rational decode_rational(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (!j.is_string()) throw parse_error(field, "expected a \"p/q\" string");
  try {
    return parse_rational(j.get_ref<const std::string&>());
  } catch (const error& e) {
    throw parse_error(field, e.what());
  }
}

json to_json(const MatrixDocument& doc) {
  json j;
  j["kind"] = std::string(kind_name(doc.kind));
  j["n"] = doc.n;
  switch (doc.kind) {
    case DocumentKind::circulant:
    case DocumentKind::skew_circulant:
      j["first_row"] = complex_array(doc.first_row);
      break;
    case DocumentKind::mu_circulant:
      j["first_row"] = complex_array(doc.first_row);
      j["mu"] = complex_array(doc.mu);
      break;
    case DocumentKind::dense: {
      json rows = json::array();
      for (std::size_t i = 0; i < doc.n; ++i) {
        rows.push_back(complex_array(std::span(doc.entries).subspan(i * doc.n, doc.n)));
      }
      j["entries"] = std::move(rows);
      break;
    }
    case DocumentKind::rational_circulant: {
      json a = json::array();
      for (const auto& q : doc.rational_row) a.push_back(encode(q));
      j["first_row"] = std::move(a);
      break;
    }
  }
  return j;
}

MatrixDocument from_json(const json& j) {
  if (!j.is_object()) throw parse_error("document", "expected a JSON object");
  MatrixDocument doc;

  if (!j.contains("kind")) throw parse_error("kind", "missing field");
  if (!j.at("kind").is_string()) throw parse_error("kind", "expected a string");
  const auto& kind = j.at("kind").get_ref<const std::string&>();
  bool known = false;
  for (const auto& e : kKinds) {
    if (e.name == kind) {
      doc.kind = e.kind;
      known = true;
    }
  }
  if (!known) throw parse_error("kind", "unknown kind '" + kind + "'");

  if (!j.contains("n")) throw parse_error("n", "missing field");
  if (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() == 0) {
    throw parse_error("n", "expected a positive integer");
  }
  doc.n = j.at("n").get<std::size_t>();

  std::set<std::string> allowed{"kind", "n"};
  switch (doc.kind) {
    case DocumentKind::circulant:
    case DocumentKind::skew_circulant:
      doc.first_row = complex_list(array_field(j, "first_row", doc.n), "first_row");
      allowed.insert("first_row");
      break;
    case DocumentKind::mu_circulant:
      doc.first_row = complex_list(array_field(j, "first_row", doc.n), "first_row");
      doc.mu = complex_list(array_field(j, "mu", doc.n - 1), "mu");
      for (std::size_t i = 0; i < doc.mu.size(); ++i) {
        if (doc.mu[i] == Complex(0.0)) throw parse_error(indexed("mu", i), "weights must be nonzero");
      }
      allowed.insert({"first_row", "mu"});
      break;
    case DocumentKind::dense: {
      const json& rows = array_field(j, "entries", doc.n);
      doc.entries.reserve(doc.n * doc.n);
      for (std::size_t i = 0; i < doc.n; ++i) {
        const std::string f = indexed("entries", i);
        if (!rows[i].is_array() || rows[i].size() != doc.n) {
          throw parse_error(f, "expected a row of " + std::to_string(doc.n) + " values");
        }
        for (std::size_t k = 0; k < doc.n; ++k) doc.entries.push_back(decode_complex(rows[i][k], indexed(f, k)));
      }
      allowed.insert("entries");
      break;
    }
    case DocumentKind::rational_circulant: {
      const json& a = array_field(j, "first_row", doc.n);
      for (std::size_t i = 0; i < doc.n; ++i) doc.rational_row.push_back(decode_rational(a[i], indexed("first_row", i)));
      allowed.insert("first_row");
      break;
    }
  }
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw parse_error(item.key(), "field not allowed for kind " + std::string(kind_name(doc.kind)));
    }
  }
  return doc;
}

MatrixDocument parse_document(std::string_view text) {
  const auto docs = parse_documents(text);
  if (docs.size() != 1) throw parse_error("document", "expected exactly one document, found " + std::to_string(docs.size()));
  return docs.front();
}

std::vector<MatrixDocument> parse_documents(std::string_view text) {
  std::vector<MatrixDocument> out;
  std::istringstream in{std::string(text)};
  for (;;) {
    in >> std::ws;
    if (in.peek() == std::char_traits<char>::eof()) break;
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw parse_error("document", std::string("malformed JSON (") + e.what() + ")");
    }
    if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) {
        try {
          out.push_back(from_json(j[i]));
        } catch (const parse_error& e) {
          throw parse_error(indexed("document", out.size()) + "." + e.field(), e.detail());
        }
      }
    } else {
      out.push_back(from_json(j));
    }
  }
  return out;
}

std::string print_document(const MatrixDocument& doc) { return to_json(doc).dump(); }

MatrixDocument make_document(const Circulant& c) {
  MatrixDocument doc;
  doc.kind = DocumentKind::circulant;
  doc.n = c.order();
  doc.first_row.assign(c.coeffs().begin(), c.coeffs().end());
  return doc;
}

MatrixDocument make_document(const MuCirculant& m) {
  MatrixDocument doc;
  doc.kind = DocumentKind::mu_circulant;
  doc.n = m.order();
  doc.first_row.assign(m.coeffs().begin(), m.coeffs().end());
  doc.mu.assign(m.weights().values().begin() + 1, m.weights().values().end());
  return doc;
}

MatrixDocument make_document(const DenseMatrix& d) {
  if (!d.is_square()) throw error(errc::dimension, "dense documents hold square matrices");
  MatrixDocument doc;
  doc.kind = DocumentKind::dense;
  doc.n = d.rows();
  doc.entries.assign(d.data().begin(), d.data().end());
  return doc;
}

MatrixDocument make_document(const RationalCirculant& c) {
  MatrixDocument doc;
  doc.kind = DocumentKind::rational_circulant;
  doc.n = c.order();
  doc.rational_row.assign(c.coeffs().begin(), c.coeffs().end());
  return doc;
}

Circulant to_circulant(const MatrixDocument& doc) {
  require_kind(doc, {DocumentKind::circulant, DocumentKind::rational_circulant});
  if (doc.kind == DocumentKind::rational_circulant) return to_complex(to_rational_circulant(doc));
  return Circulant(doc.first_row);
}

MuCirculant to_mu_circulant(const MatrixDocument& doc) {
  require_kind(doc, {DocumentKind::mu_circulant, DocumentKind::skew_circulant, DocumentKind::circulant});
  if (doc.kind == DocumentKind::skew_circulant) return skew_circ(doc.first_row);
  if (doc.kind == DocumentKind::circulant) return MuCirculant(doc.first_row, MuWeights::ones(doc.n));
  return MuCirculant(doc.first_row, MuWeights::from_tail(doc.mu));
}

DenseMatrix to_dense_matrix(const MatrixDocument& doc) {
  switch (doc.kind) {
    case DocumentKind::dense: {
      DenseMatrix d(doc.n, doc.n);
      for (std::size_t i = 0; i < doc.n; ++i)
        for (std::size_t k = 0; k < doc.n; ++k) d(i, k) = doc.entries[i * doc.n + k];
      return d;
    }
    case DocumentKind::circulant:
    case DocumentKind::rational_circulant:
      return to_dense(to_circulant(doc));
    case DocumentKind::mu_circulant:
    case DocumentKind::skew_circulant:
      return mu_to_dense(to_mu_circulant(doc));
  }
  throw parse_error("kind", "unsupported kind");
}

RationalCirculant to_rational_circulant(const MatrixDocument& doc) {
  require_kind(doc, {DocumentKind::rational_circulant});
  return RationalCirculant(doc.rational_row);
}

}  // namespace circalg::cli
