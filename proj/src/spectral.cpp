#include "circalg/spectral.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace circalg {

FourierContext::FourierContext(std::size_t n) {
  if (n == 0) throw error(errc::invalid_order, "order must be at least 1");
  powers_.resize(n);
  // Direct cos/sin per power keeps every entry on the unit circle to
  // rounding, independent of n.
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    powers_[k] = Complex(std::cos(theta), std::sin(theta));
  }
  // Exact values at the quarter turns.
  if (n % 2 == 0) powers_[n / 2] = Complex(-1.0, 0.0);
  if (n % 4 == 0) {
    powers_[n / 4] = Complex(0.0, 1.0);
    powers_[3 * n / 4] = Complex(0.0, -1.0);
  }
}

std::shared_ptr<const FourierContext> FourierContext::for_order(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const FourierContext>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const FourierContext>(n);
  cache.emplace(n, ctx);
  return ctx;
}

Spectrum::Spectrum(std::vector<Complex> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw error(errc::invalid_order, "spectrum needs at least one value");
  for (const auto& z : lambdas_) require_finite(z, "spectrum");
}

Complex RepresenterPolynomial::operator()(Complex x) const {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RepresenterPolynomial representer(const Circulant& c) {
  return {std::vector<Complex>(c.coeffs().begin(), c.coeffs().end())};
}

namespace {

// Positive-exponent transform (omega^(+jk)) or its conjugate.
std::vector<Complex> transform(std::span<const Complex> in, bool conjugate) {
  const std::size_t n = in.size();
  if (n == 0) throw error(errc::invalid_order, "transform of an empty vector");
  const auto ctx = FourierContext::for_order(n);
  auto twiddle = [&](std::size_t k) {
    const Complex w = ctx->power(k);
    return conjugate ? std::conj(w) : w;
  };

  std::vector<Complex> a(in.begin(), in.end());
  if (!std::has_single_bit(n)) {
    std::vector<Complex> out(n);
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      std::size_t e = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += a[k] * twiddle(e);
        e += j;
        if (e >= n) e -= n;
      }
      out[j] = acc;
    }
    return out;
  }

  const int bits = std::countr_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
    if (i < r) std::swap(a[i], a[r]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = a[start + k];
        const Complex v = a[start + k + half] * twiddle(k * step);
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
  return a;
}

}  // namespace

std::vector<Complex> dft(std::span<const Complex> in) { return transform(in, false); }

std::vector<Complex> inverse_dft(std::span<const Complex> in) {
  auto out = transform(in, true);
  const double scale = 1.0 / static_cast<double>(in.size());
  for (auto& z : out) z *= scale;
  return out;
}

Spectrum eigenvalues(const Circulant& c) { return Spectrum(dft(c.coeffs())); }

std::vector<Complex> eigenvector(const FourierContext& ctx, std::size_t j) {
  const std::size_t n = ctx.order();
  if (j < 1 || j > n) {
    throw error(errc::index, "eigenvector index " + std::to_string(j) + " outside 1.." + std::to_string(n));
  }
  std::vector<Complex> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = ctx.power((k * (j - 1)) % n);
  return x;
}

DenseMatrix to_diagonal(const Circulant& c) {
  const Spectrum s = eigenvalues(c);
  DenseMatrix d(s.size(), s.size());
  for (std::size_t j = 0; j < s.size(); ++j) d(j, j) = s[j];
  return d;
}

Circulant from_spectrum(const Spectrum& lambdas) { return Circulant(inverse_dft(lambdas.values())); }

Circulant fast_mul(const Circulant& x, const Circulant& y) {
  if (x.order() != y.order()) {
    throw error(errc::dimension, "orders " + std::to_string(x.order()) + " and " +
                                     std::to_string(y.order()) + " differ");
  }
  auto fx = dft(x.coeffs());
  const auto fy = dft(y.coeffs());
  for (std::size_t j = 0; j < fx.size(); ++j) fx[j] *= fy[j];
  return Circulant(inverse_dft(fx));
}

}  // namespace circalg
