#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "circalg/cli/document.hpp"
#include "generators.hpp"

using namespace circalg;
using namespace circalg::cli;
namespace gen = circalg::testing;

namespace {

std::string field_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const parse_error& e) {
    return e.field();
  }
  return "<no error>";
}

}  // namespace

TEST(Document, CirculantLayout) {
  const auto doc = make_document(Circulant({1.0, Complex(2.0, -0.5), 3.0}));
  EXPECT_EQ(print_document(doc),
            R"({"first_row":[["1","0"],["2","-0.5"],["3","0"]],"kind":"circulant","n":3})");
}

TEST(Document, RationalLayout) {
  const auto doc = make_document(RationalCirculant({Rational(-1, 3), Rational(2), Rational(0)}));
  EXPECT_EQ(print_document(doc), R"({"first_row":["-1/3","2","0"],"kind":"rational_circulant","n":3})");
}

TEST(Document, RoundTripAllKinds) {
  auto rng = gen::make_rng();
  for (std::size_t n : {1, 2, 3, 5, 8}) {
    std::vector<MatrixDocument> docs;
    docs.push_back(make_document(gen::random_circulant(rng, n)));
    std::vector<Complex> mu(n, 1.0);
    for (std::size_t i = 1; i < n; ++i) mu[i] = gen::random_scalar(rng) + 2.0;
    docs.push_back(make_document(MuCirculant(gen::random_row(rng, n), MuWeights(mu))));
    MatrixDocument skew;
    skew.kind = DocumentKind::skew_circulant;
    skew.n = n;
    skew.first_row = gen::random_row(rng, n);
    docs.push_back(skew);
    docs.push_back(make_document(to_dense(gen::random_circulant(rng, n))));
    std::vector<Rational> row;
    for (std::size_t k = 0; k < n; ++k) row.emplace_back(static_cast<long>(k) * 7 - 11, 3);
    for (auto& q : row) q.canonicalize();
    docs.push_back(make_document(RationalCirculant(row)));

    for (const auto& d : docs) {
      const auto text = print_document(d);
      EXPECT_EQ(parse_document(text), d) << text;
      EXPECT_EQ(print_document(parse_document(text)), text);
    }
  }
}

TEST(Document, RoundTripIsBitExact) {
  const double awkward[] = {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::numeric_limits<double>::denorm_min(),
                            std::numeric_limits<double>::max(), -0.0};
  for (double x : awkward) {
    const auto doc = make_document(Circulant({Complex(x, -x)}));
    const auto back = parse_document(print_document(doc));
    EXPECT_EQ(std::signbit(back.first_row[0].real()), std::signbit(x));
    EXPECT_EQ(back.first_row[0].real(), x);
    EXPECT_EQ(back.first_row[0].imag(), -x);
  }
}

TEST(Document, LenientScalars) {
  const auto doc = parse_document(R"({"kind":"circulant","n":2,"first_row":[1.5,["+2","-1e-3"]]})");
  EXPECT_EQ(doc.first_row[0], Complex(1.5, 0.0));
  EXPECT_EQ(doc.first_row[1], Complex(2.0, -1e-3));
  const auto r = parse_document(R"({"kind":"rational_circulant","n":2,"first_row":[4,"+6/8"]})");
  EXPECT_EQ(r.rational_row[0], Rational(4));
  EXPECT_EQ(r.rational_row[1], Rational(3, 4));
}

TEST(Document, ErrorsNameTheField) {
  EXPECT_EQ(field_of(R"({"kind":"circulant","n":3,"first_row":[["1","0"],["2","0"]]})"), "first_row");
  EXPECT_EQ(field_of(R"({"kind":"circulant","n":2,"first_row":[["1","0"],["z","0"]]})"), "first_row[1].re");
  EXPECT_EQ(field_of(R"({"kind":"circulant","n":1,"first_row":[["1","nan"]]})"), "first_row[0].im");
  EXPECT_EQ(field_of(R"({"kind":"hexagon","n":1,"first_row":[["1","0"]]})"), "kind");
  EXPECT_EQ(field_of(R"({"n":1,"first_row":[["1","0"]]})"), "kind");
  EXPECT_EQ(field_of(R"({"kind":"circulant","n":0,"first_row":[]})"), "n");
  EXPECT_EQ(field_of(R"({"kind":"circulant","first_row":[["1","0"]]})"), "n");
  EXPECT_EQ(field_of(R"({"kind":"mu_circulant","n":2,"first_row":[["1","0"],["1","0"]]})"), "mu");
  EXPECT_EQ(field_of(R"({"kind":"mu_circulant","n":2,"first_row":[["1","0"],["1","0"]],"mu":[["0","0"]]})"),
            "mu[0]");
  EXPECT_EQ(field_of(R"({"kind":"circulant","n":1,"first_row":[["1","0"]],"mu":[]})"), "mu");
  EXPECT_EQ(field_of(R"({"kind":"dense","n":2,"entries":[["1","0"],["1","0"],["1","0"]]})"), "entries");
  EXPECT_EQ(field_of(R"({"kind":"rational_circulant","n":1,"first_row":["1/0"]})"), "first_row[0]");
  EXPECT_EQ(field_of(R"({"kind":"rational_circulant","n":1,"first_row":[0.5]})"), "first_row[0]");
  EXPECT_EQ(field_of(R"({"kind":"circulant")"), "document");
  EXPECT_EQ(field_of("[]"), "document");
}

TEST(Document, MessageIsOneLine) {
  try {
    parse_document(R"({"kind":"circulant","n":2,"first_row":[["1","0"],["z","0"]]})");
    FAIL();
  } catch (const parse_error& e) {
    const std::string what = e.what();
    EXPECT_EQ(what.find('\n'), std::string::npos);
    EXPECT_EQ(what.rfind("first_row[1].re: ", 0), 0u) << what;
  }
}

TEST(Document, Sequences) {
  const std::string one = print_document(make_document(Circulant({1.0, 2.0})));
  const std::string two = print_document(make_document(RationalCirculant({Rational(1), Rational(2)})));
  EXPECT_EQ(parse_documents(one + "\n" + two).size(), 2u);
  EXPECT_EQ(parse_documents("[" + one + "," + two + "]").size(), 2u);
  EXPECT_EQ(parse_documents("  ").size(), 0u);
  try {
    parse_documents("[" + one + R"(,{"kind":"circulant","n":2,"first_row":[]}])");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.field(), "document[1].first_row");
  }
}

TEST(Document, Conversions) {
  const auto c = to_circulant(parse_document(R"({"kind":"rational_circulant","n":2,"first_row":["1/2","3"]})"));
  EXPECT_EQ(c, Circulant({0.5, 3.0}));
  const auto skew = to_mu_circulant(parse_document(R"({"kind":"skew_circulant","n":2,"first_row":[1,2]})"));
  EXPECT_TRUE(skew.weights().same_as(skew_weights(2)));
  const auto dense = to_dense_matrix(make_document(Circulant({1.0, 2.0, 3.0})));
  EXPECT_EQ(dense, to_dense(Circulant({1.0, 2.0, 3.0})));
  EXPECT_THROW(to_rational_circulant(make_document(c)), parse_error);
  EXPECT_THROW(to_circulant(make_document(dense)), parse_error);
}

TEST(Document, ParseDouble) {
  EXPECT_EQ(parse_double("+1.25", "x"), 1.25);
  EXPECT_EQ(parse_double("-3e2", "x"), -300.0);
  EXPECT_THROW(parse_double("inf", "x"), parse_error);
  EXPECT_THROW(parse_double("1.0abc", "x"), parse_error);
  EXPECT_THROW(parse_double("", "x"), parse_error);
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-0.0), "-0");
}
