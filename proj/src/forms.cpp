#include "circalg/forms.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace circalg {

FormsVector::FormsVector(std::vector<Complex> q) : q_(std::move(q)) {
  if (q_.empty()) throw error(errc::invalid_order, "forms vector needs at least one value");
}

const Complex& FormsVector::q(std::size_t i) const {
  if (i < 1 || i > q_.size()) {
    throw error(errc::index, "form index " + std::to_string(i) + " outside 1.." + std::to_string(q_.size()));
  }
  return q_[i - 1];
}

SymmetricTables symmetric_tables(const Spectrum& spectrum) {
  const std::size_t n = spectrum.size();
  SymmetricTables t;
  t.power_sums.assign(n, Complex(0.0));
  std::vector<Complex> pw(spectrum.values().begin(), spectrum.values().end());
  for (std::size_t k = 0; k < n; ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += pw[j];
      pw[j] *= spectrum[j];
    }
    t.power_sums[k] = s;
  }

  t.elementary.assign(n + 1, Complex(0.0));
  t.elementary[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    double sign = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
      acc += sign * t.elementary[k - i] * t.power_sums[i - 1];
      sign = -sign;
    }
    t.elementary[k] = acc / static_cast<double>(k);
  }
  return t;
}

FormsVector forms_from_spectrum(const Spectrum& spectrum) {
  auto tables = symmetric_tables(spectrum);
  return FormsVector(std::vector<Complex>(tables.elementary.begin() + 1, tables.elementary.end()));
}

namespace {

bool all_real(const Circulant& c) {
  for (const auto& z : c.coeffs()) {
    if (z.imag() != 0.0) return false;
  }
  return true;
}

std::string format_root(Complex y) {
  auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
  std::ostringstream out;
  out << clean(y.real());
  const double im = clean(y.imag());
  if (im > 0) out << " + " << im << "i";
  if (im < 0) out << " - " << -im << "i";
  return out.str();
}

}  // namespace

FormsVector forms(const Circulant& c) {
  auto f = forms_from_spectrum(eigenvalues(c));
  if (!all_real(c)) return f;
  std::vector<Complex> q(f.values().begin(), f.values().end());
  for (auto& z : q) z = Complex(z.real(), 0.0);
  return FormsVector(std::move(q));
}

std::vector<Complex> char_poly(const Circulant& c) {
  const auto f = forms(c);
  std::vector<Complex> coeffs(c.order() + 1);
  coeffs[0] = 1.0;
  double sign = -1.0;
  for (std::size_t k = 1; k <= c.order(); ++k) {
    coeffs[k] = sign * f.q(k);
    sign = -sign;
  }
  return coeffs;
}

Circulant conjugate(const Circulant& c) {
  const std::size_t n = c.order();
  const auto f = forms(c);
  // Coefficient of x^(n-1-k) is (-1)^(n+1+k) q_k, with q_0 = 1.
  auto coefficient = [&](std::size_t k) {
    const Complex qk = k == 0 ? Complex(1.0) : f.q(k);
    return ((n + 1 + k) % 2 == 0) ? qk : -qk;
  };
  const Circulant id = Circulant::identity(n);
  Circulant acc = linear_combine(coefficient(0), id, 0.0, id);
  for (std::size_t k = 1; k < n; ++k) {
    acc = linear_combine(1.0, mul_naive(acc, c), coefficient(k), id);
  }
  return acc;
}

double singularity_threshold(const Circulant& c) {
  return 1e-9 * std::pow(1.0 + inf_norm(c), static_cast<double>(c.order()));
}

InvertibilityVerdict is_invertible(const Circulant& c) {
  InvertibilityVerdict v;
  const std::size_t n = c.order();
  v.norm = forms(c).q(n);
  v.threshold = singularity_threshold(c);
  v.invertible = std::abs(v.norm) > v.threshold;
  if (v.invertible) return v;

  const auto spectrum = eigenvalues(c);
  const double eigen_tol = 1e-9 * (1.0 + inf_norm(c));
  std::size_t best = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(spectrum[j]) <= eigen_tol) {
      best = j;
      break;
    }
    if (std::abs(spectrum[j]) < std::abs(spectrum[best])) best = j;
  }
  const auto ctx = FourierContext::for_order(n);
  v.witness_index = best + 1;
  v.witness_root = ctx->power(best);
  v.witness_magnitude = std::abs(spectrum[best]);
  return v;
}

Circulant inverse(const Circulant& c) {
  const auto verdict = is_invertible(c);
  if (!verdict.invertible) {
    std::ostringstream msg;
    msg << "q_n = " << std::abs(verdict.norm) << " is below threshold " << verdict.threshold
        << "; p_C vanishes at root of unity y = omega^" << (*verdict.witness_index - 1) << " = "
        << format_root(verdict.witness_root);
    throw singular_matrix_error(msg.str(), *verdict.witness_index, verdict.witness_root,
                                verdict.witness_magnitude);
  }
  const Circulant bar = conjugate(c);
  return linear_combine(1.0 / verdict.norm, bar, 0.0, bar);
}

}  // namespace circalg
