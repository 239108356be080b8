#include "circalg/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "circalg/cli/bench.hpp"
#include "circalg/cli/document.hpp"
#include "circalg/cli/verify.hpp"
#include "circalg/errors.hpp"
#include "circalg/forms.hpp"
#include "circalg/hopf.hpp"
#include "circalg/integral_lattice.hpp"
#include "circalg/oracle.hpp"
#include "circalg/spectral.hpp"
#include "circalg/twisted.hpp"
#include "json_io.hpp"

namespace circalg::cli {

namespace {

// A result was produced but the answer is "no": non-member, failed check.
struct domain_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct usage_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> files;
  std::vector<std::string> inputs;
  std::string output;
  std::string mode = "integral";
  double tol = 1e-10;
  std::string seed;
  std::vector<std::size_t> sizes{16, 64, 256, 1024};
  std::size_t reps = 5;
  std::size_t dense_max = 256;
};

struct Context {
  const Options& opt;
  std::istream& in;
  std::vector<json> results;
};

NumberDomain domain_of(const Options& opt) {
  return opt.mode == "rational" ? NumberDomain::rational : NumberDomain::integral;
}

std::uint64_t seed_of(const Options& opt) {
  if (opt.seed.empty()) return kDefaultSeed;
  std::string s = opt.seed;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used, 16);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw usage_failure("--seed: expected a hexadecimal value, found '" + opt.seed + "'");
  return v;
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::vector<MatrixDocument> read_documents(Context& ctx) {
  std::vector<std::string> paths = ctx.opt.files;
  paths.insert(paths.end(), ctx.opt.inputs.begin(), ctx.opt.inputs.end());
  if (paths.empty()) return parse_documents(slurp(ctx.in));
  std::vector<MatrixDocument> docs;
  for (const auto& p : paths) {
    std::ifstream f(p);
    if (!f) throw parse_error("input", "cannot open '" + p + "'");
    try {
      auto more = parse_documents(slurp(f));
      docs.insert(docs.end(), more.begin(), more.end());
    } catch (const parse_error& e) {
      throw parse_error(p + ": " + e.field(), e.detail());
    }
  }
  return docs;
}

MatrixDocument read_one(Context& ctx) {
  auto docs = read_documents(ctx);
  if (docs.size() != 1) throw parse_error("input", "expected one matrix document, found " + std::to_string(docs.size()));
  return docs.front();
}

json complex_array(std::span<const Complex> values) {
  json a = json::array();
  for (const auto& z : values) a.push_back(encode(z));
  return a;
}

json rational_array(std::span<const Rational> values) {
  json a = json::array();
  for (const auto& q : values) a.push_back(encode(q));
  return a;
}

json report_json(const std::vector<HopfReport>& reports) {
  json checks = json::array();
  bool all = true;
  for (const auto& r : reports) {
    checks.push_back({{"name", r.axiom}, {"holds", r.holds}, {"max_residual", r.max_residual}});
    all = all && r.holds;
  }
  return {{"kind", "report"}, {"checks", checks}, {"holds", all}};
}

void emit_report(Context& ctx, const std::vector<HopfReport>& reports) {
  ctx.results.push_back(report_json(reports));
  for (const auto& r : reports) {
    if (!r.holds) throw domain_failure(r.axiom + " fails (residual " + format_double(r.max_residual) + ")");
  }
}

bool is_rational(const MatrixDocument& d) { return d.kind == DocumentKind::rational_circulant; }
bool is_twisted(const MatrixDocument& d) {
  return d.kind == DocumentKind::mu_circulant || d.kind == DocumentKind::skew_circulant;
}

json spectrum_json(std::size_t n, std::span<const Complex> values) {
  return {{"kind", "spectrum"}, {"n", n}, {"values", complex_array(values)}};
}

// Exact adjugate direction: x-bar = (-1)^(n+1) sum_k p_k x^(n-1-k).
RationalCirculant exact_conjugate(const RationalCirculant& c) {
  const auto p = exact_char_poly(c);
  const std::size_t n = c.order();
  RationalCirculant acc = RationalCirculant::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Rational> shift(n, Rational(0));
    shift[0] = p[k];
    acc = acc * c + RationalCirculant(shift);
  }
  if (n % 2 == 0) {
    std::vector<Rational> neg(acc.coeffs().begin(), acc.coeffs().end());
    for (auto& q : neg) q = -q;
    acc = RationalCirculant(neg);
  }
  return acc;
}

void cmd_eig(Context& ctx) {
  const auto doc = read_one(ctx);
  if (is_twisted(doc)) {
    const auto m = to_mu_circulant(doc);
    const auto e = mu_eigen(m);
    ctx.results.push_back(spectrum_json(doc.n, e.values.values()));
    return;
  }
  const auto s = eigenvalues(to_circulant(doc));
  json j = spectrum_json(doc.n, s.values());
  if (is_rational(doc)) {
    const auto exact = exact_spectrum(to_rational_circulant(doc), domain_of(ctx.opt));
    j["exact"] = exact ? rational_array(*exact) : json(nullptr);
  }
  ctx.results.push_back(j);
}

void cmd_mu_eig(Context& ctx) {
  const auto m = to_mu_circulant(read_one(ctx));
  const auto e = mu_eigen(m);
  json vectors = json::array();
  for (const auto& v : e.vectors) vectors.push_back(complex_array(v));
  json j = spectrum_json(m.order(), e.values.values());
  j["vectors"] = vectors;
  ctx.results.push_back(j);
}

void cmd_forms(Context& ctx) {
  const auto doc = read_one(ctx);
  json q;
  if (is_rational(doc)) {
    const auto p = exact_char_poly(to_rational_circulant(doc));
    std::vector<Rational> qs;
    for (std::size_t k = 1; k < p.size(); ++k) qs.push_back(k % 2 ? Rational(-p[k]) : p[k]);
    q = rational_array(qs);
  } else if (is_twisted(doc)) {
    const auto f = mu_forms(to_mu_circulant(doc));
    q = complex_array(f.values());
  } else {
    const auto f = forms(to_circulant(doc));
    q = complex_array(f.values());
  }
  ctx.results.push_back({{"kind", "forms"}, {"n", doc.n}, {"q", q}});
}

void cmd_charpoly(Context& ctx) {
  const auto doc = read_one(ctx);
  json coeffs;
  if (is_rational(doc)) {
    coeffs = rational_array(exact_char_poly(to_rational_circulant(doc)));
  } else {
    coeffs = complex_array(char_poly(to_circulant(doc)));
  }
  ctx.results.push_back({{"kind", "polynomial"}, {"coefficients", coeffs}});
}

void cmd_inverse(Context& ctx) {
  const auto doc = read_one(ctx);
  if (is_rational(doc)) {
    const auto c = to_rational_circulant(doc);
    const auto p = exact_char_poly(c);
    if (p.back() == 0) {
      // Exactly singular; the floating path names the witness root.
      inverse(to_complex(c));
      throw error(errc::singular_matrix, "q_n = 0 exactly");
    }
    const auto inv = oracle::exact_inverse(to_dense(c));
    std::vector<Rational> row(c.order());
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = inv(0, k);
    ctx.results.push_back(to_json(make_document(RationalCirculant(row))));
  } else if (is_twisted(doc)) {
    const auto m = to_mu_circulant(doc);
    ctx.results.push_back(to_json(make_document(psi_inv(inverse(psi(m)), m.weights()))));
  } else {
    ctx.results.push_back(to_json(make_document(inverse(to_circulant(doc)))));
  }
}

void cmd_conjugate(Context& ctx) {
  const auto doc = read_one(ctx);
  if (is_rational(doc)) {
    ctx.results.push_back(to_json(make_document(exact_conjugate(to_rational_circulant(doc)))));
  } else {
    ctx.results.push_back(to_json(make_document(conjugate(to_circulant(doc)))));
  }
}

void cmd_counit(Context& ctx) {
  const auto doc = read_one(ctx);
  json value;
  if (is_rational(doc)) {
    Rational s = 0;
    for (const auto& q : doc.rational_row) s += q;
    value = encode(s);
  } else {
    value = encode(counit(to_circulant(doc)));
  }
  ctx.results.push_back({{"kind", "scalar"}, {"value", value}});
}

void cmd_delta(Context& ctx) {
  const auto doc = read_one(ctx);
  const auto b = comultiplication(to_circulant(doc));
  json blocks = json::array();
  for (const auto& blk : b.blocks()) blocks.push_back(complex_array(blk.coeffs()));
  ctx.results.push_back({{"kind", "block_circulant"}, {"n", b.order()}, {"blocks", blocks}});
}

void cmd_antipode(Context& ctx) {
  const auto doc = read_one(ctx);
  if (is_rational(doc)) {
    const auto& r = doc.rational_row;
    std::vector<Rational> t(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) t[k] = r[(r.size() - k) % r.size()];
    ctx.results.push_back(to_json(make_document(RationalCirculant(t))));
  } else {
    ctx.results.push_back(to_json(make_document(antipode(to_circulant(doc)))));
  }
}

void cmd_hopf_verify(Context& ctx) {
  const auto c = to_circulant(read_one(ctx));
  const double tol = ctx.opt.tol;
  emit_report(ctx, {verify_counit_axiom(c, tol), verify_antipode_axiom(c, tol), integral_check(c, tol),
                    verify_coassociativity(c)});
}

void cmd_cocycle_verify(Context& ctx) {
  const auto doc = read_one(ctx);
  if (doc.kind == DocumentKind::dense) {
    emit_report(ctx, {verify_cocycle(TwoCocycle::from_dense(to_dense_matrix(doc)), ctx.opt.tol)});
  } else {
    const auto m = to_mu_circulant(doc);
    emit_report(ctx, {verify_cocycle(cocycle_from_mu(m.weights()), ctx.opt.tol)});
  }
}

void cmd_skew(Context& ctx) {
  const auto doc = read_one(ctx);
  if (doc.kind != DocumentKind::skew_circulant && doc.kind != DocumentKind::circulant) {
    throw parse_error("kind", "expected circulant or skew_circulant, found " + std::string(kind_name(doc.kind)));
  }
  ctx.results.push_back(to_json(make_document(mu_to_dense(skew_circ(doc.first_row)))));
}

void cmd_brandt(Context& ctx) {
  const auto docs = read_documents(ctx);
  std::vector<RationalCirculant> elements;
  for (const auto& d : docs) elements.push_back(to_rational_circulant(d));
  const auto v = brandt_check(elements, domain_of(ctx.opt));
  json cx = nullptr;
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    cx = {{"a", c.a}, {"b", c.b}, {"element", c.element}, {"form", c.form}, {"value", encode(c.value)}};
  }
  ctx.results.push_back({{"kind", "brandt"}, {"holds", v.holds}, {"counterexample", cx}});
  if (!v.holds) {
    const auto& c = *v.counterexample;
    throw domain_failure("q" + std::to_string(c.form) + "(" + c.element + ") = " + format_rational(c.value) +
                         " is not " + (ctx.opt.mode == "rational" ? "rational" : "integral"));
  }
}

void cmd_reconstruct(Context& ctx) {
  // Input is a spectrum document: {"kind": "spectrum", "values": [...]}.
  // Rational values ("p/q" or integers) take the exact path.
  std::vector<std::string> paths = ctx.opt.files;
  paths.insert(paths.end(), ctx.opt.inputs.begin(), ctx.opt.inputs.end());
  if (paths.size() > 1) throw parse_error("input", "expected one spectrum document");
  std::string text;
  if (paths.empty()) {
    text = slurp(ctx.in);
  } else {
    std::ifstream f(paths[0]);
    if (!f) throw parse_error("input", "cannot open '" + paths[0] + "'");
    text = slurp(f);
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error("document", std::string("malformed JSON (") + e.what() + ")");
  }
  if (!j.is_object()) throw parse_error("document", "expected an object");
  if (j.value("kind", std::string()) != "spectrum") throw parse_error("kind", "expected spectrum");
  const json& src = j.contains("exact") && j["exact"].is_array() ? j["exact"] : j["values"];
  const std::string field = j.contains("exact") && j["exact"].is_array() ? "exact" : "values";
  if (!src.is_array() || src.empty()) throw parse_error(field, "expected a non-empty array");

  const bool rational = std::all_of(src.begin(), src.end(), [](const json& v) { return !v.is_array(); }) &&
                        std::none_of(src.begin(), src.end(), [](const json& v) { return v.is_number_float(); });
  Reconstruction r{Circulant::zero(src.size()), false};
  if (rational) {
    std::vector<Rational> lambdas;
    for (std::size_t i = 0; i < src.size(); ++i)
      lambdas.push_back(decode_rational(src[i], field + "[" + std::to_string(i) + "]"));
    r = reconstruct_from_spectrum(lambdas);
  } else {
    std::vector<Complex> lambdas;
    for (std::size_t i = 0; i < src.size(); ++i)
      lambdas.push_back(decode_complex(src[i], field + "[" + std::to_string(i) + "]"));
    const std::size_t n = lambdas.size();
    r.real = true;
    for (std::size_t k = 1; k < n; ++k) {
      if (std::abs(lambdas[k] - std::conj(lambdas[n - k])) > ctx.opt.tol * (1.0 + std::abs(lambdas[k]))) r.real = false;
    }
    if (std::abs(lambdas[0].imag()) > ctx.opt.tol * (1.0 + std::abs(lambdas[0]))) r.real = false;
    auto c = from_spectrum(Spectrum(lambdas));
    if (r.real) {
      std::vector<Complex> row(c.coeffs().begin(), c.coeffs().end());
      for (auto& z : row) z = z.real();
      c = Circulant(row);
    }
    r.circulant = c;
  }
  ctx.results.push_back({{"kind", "reconstruction"}, {"real", r.real}, {"circulant", to_json(make_document(r.circulant))}});
}

void cmd_lattice(Context& ctx) {
  const auto docs = read_documents(ctx);
  if (docs.empty()) throw parse_error("input", "expected n basis documents and a target");
  const std::size_t n = docs.front().n;
  if (docs.size() != n + 1) {
    throw parse_error("input", "expected " + std::to_string(n) + " basis documents and a target, found " +
                                   std::to_string(docs.size()) + " documents");
  }
  RationalMatrix rows(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = to_rational_circulant(docs[i]);
    if (v.order() != n) throw parse_error("document[" + std::to_string(i) + "].n", "basis orders differ");
    for (std::size_t k = 0; k < n; ++k) rows(i, k) = v[k];
  }
  const LatticeBasis basis(rows);
  const auto target = to_rational_circulant(docs.back());
  const auto dec = lattice_decompose(basis, target);
  ctx.results.push_back({{"kind", "lattice_decomposition"},
                         {"coefficients", rational_array(dec.coefficients)},
                         {"member", dec.member},
                         {"basis_inverse_integral", basis_inverse_integral(basis).integral}});
  if (!dec.member) throw domain_failure("target is not a lattice member");
}

void cmd_factorize(Context& ctx) {
  const auto doc = read_one(ctx);
  const auto grid = factorize_dense(to_dense_matrix(doc));
  ctx.results.push_back({{"kind", "factorization"}, {"n", grid.rows()}, {"grid", complex_array(grid.data())}});
}

void cmd_verify_all(Context& ctx) {
  const auto outcomes = verify_all(seed_of(ctx.opt));
  json checks = json::array();
  std::string first_failure;
  for (const auto& o : outcomes) {
    json c = {{"name", o.name}, {"pass", o.pass}, {"max_deviation", o.max_deviation}, {"tolerance", o.tolerance}};
    if (!o.detail.empty()) c["detail"] = o.detail;
    checks.push_back(c);
    if (!o.pass && first_failure.empty()) first_failure = o.name + (o.detail.empty() ? "" : ": " + o.detail);
  }
  ctx.results.push_back({{"kind", "report"}, {"checks", checks}, {"holds", first_failure.empty()}});
  if (!first_failure.empty()) throw domain_failure("check failed: " + first_failure);
}

void cmd_bench(Context& ctx) {
  BenchOptions b;
  b.sizes = ctx.opt.sizes;
  b.reps = ctx.opt.reps;
  b.seed = seed_of(ctx.opt);
  b.methods = default_methods(ctx.opt.dense_max);
  std::vector<BenchResult> results;
  try {
    results = run_bench(b);
  } catch (const std::invalid_argument& e) {
    throw usage_failure(e.what());
  } catch (const bench_disagreement& e) {
    throw domain_failure(std::string("methods disagree, no timings reported: ") + e.what());
  }
  for (const auto& r : results) ctx.results.push_back(json::parse(to_json_line(r)));
}

bool usage_code(errc code) {
  switch (code) {
    case errc::invalid_order:
    case errc::invalid_scalar:
    case errc::dimension:
    case errc::index:
    case errc::invalid_weights:
    case errc::invalid_vector:
      return true;
    default:
      return false;
  }
}

struct Command {
  const char* name;
  const char* help;
  void (*fn)(Context&);
};

const Command kCommands[] = {
    {"eig", "eigenvalues in j-order", cmd_eig},
    {"forms", "characteristic forms q_1..q_n", cmd_forms},
    {"charpoly", "characteristic polynomial, highest degree first", cmd_charpoly},
    {"inverse", "inverse through the conjugate", cmd_inverse},
    {"conjugate", "the conjugate x-bar with x x-bar = q_n", cmd_conjugate},
    {"hopf-counit", "sum of the first row", cmd_counit},
    {"hopf-delta", "comultiplication as a block circulant", cmd_delta},
    {"hopf-antipode", "antipode (transpose)", cmd_antipode},
    {"hopf-verify", "check the Hopf axioms on one element", cmd_hopf_verify},
    {"mu-eig", "eigenvalues and eigenvectors of a mu-circulant", cmd_mu_eig},
    {"cocycle-verify", "check the two-cocycle identity", cmd_cocycle_verify},
    {"skew", "dense form of a skew circulant", cmd_skew},
    {"brandt-check", "Brandt predicate over a set of rational circulants", cmd_brandt},
    {"spectrum-reconstruct", "circulant from its spectrum", cmd_reconstruct},
    {"lattice-solve", "coordinates of a target in a circulant lattice", cmd_lattice},
    {"factorize", "A = sum a(i,k) E_ii P^(k-1)", cmd_factorize},
    {"verify-all", "seeded invariant suite", cmd_verify_all},
    {"bench", "time naive, spectral and dense products", cmd_bench},
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circulant matrix algebra toolkit", "circalg"};
  app.require_subcommand(1);
  Options opt;
  std::string selected;

  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("files", opt.files, "input documents (default: standard input)");
    sub->add_option("--input", opt.inputs, "input document path");
    sub->add_option("--output", opt.output, "write results here instead of standard output");
    sub->add_option("--mode", opt.mode, "exact number domain")->check(CLI::IsMember({"integral", "rational"}));
    sub->add_option("--tol", opt.tol, "verification tolerance");
    sub->add_option("--seed", opt.seed, "random seed, hexadecimal");
    sub->add_option("--sizes", opt.sizes, "bench orders, comma separated")->delimiter(',');
    sub->add_option("--reps", opt.reps, "bench repetitions");
    sub->add_option("--dense-max", opt.dense_max, "largest order timed with the dense product");
    sub->callback([&selected, name = c.name] { selected = name; });
  }

  const std::string prog = "circalg";
  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && !app.get_subcommand_no_throw(args[0])) {
    err << prog << ": unknown subcommand '" << args[0] << "'\n";
    return kExitUsage;
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (auto* s : app.get_subcommands()) target = s;
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << prog << ": " << msg << "\n";
    return kExitUsage;
  }

  const std::string where = prog + ": " + selected + ": ";
  Context ctx{opt, in, {}};
  int status = kExitOk;
  std::string diagnostic;
  try {
    for (const auto& c : kCommands) {
      if (selected == c.name) c.fn(ctx);
    }
  } catch (const parse_error& e) {
    status = kExitUsage;
    diagnostic = e.what();
  } catch (const usage_failure& e) {
    status = kExitUsage;
    diagnostic = e.what();
  } catch (const domain_failure& e) {
    status = kExitDomain;
    diagnostic = e.what();
  } catch (const error& e) {
    status = usage_code(e.code()) ? kExitUsage : kExitDomain;
    diagnostic = e.what();
  } catch (const std::exception& e) {
    status = kExitUsage;
    diagnostic = e.what();
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!opt.output.empty()) {
    file.open(opt.output);
    if (!file) {
      err << where << "output: cannot open '" << opt.output << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }
  for (const auto& r : ctx.results) *sink << r.dump() << "\n";
  sink->flush();
  if (!diagnostic.empty()) {
    std::replace(diagnostic.begin(), diagnostic.end(), '\n', ' ');
    err << where << diagnostic << "\n";
  }
  return status;
}

}  // namespace circalg::cli
