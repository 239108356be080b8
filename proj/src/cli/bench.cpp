#include "circalg/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "circalg/oracle.hpp"
#include "circalg/spectral.hpp"
#include "json_io.hpp"

namespace circalg::cli {

namespace {

Circulant random_circulant(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> row(n);
  for (auto& z : row) {
    const double re = u(rng);
    z = Complex(re, u(rng));
  }
  return Circulant(std::move(row));
}

double checksum(const Circulant& c) {
  double s = 0.0;
  for (const auto& z : c.coeffs()) s += std::abs(z);
  return s;
}

}  // namespace

std::vector<BenchMethod> default_methods(std::size_t dense_max) {
  return {
      {"naive", [](const Circulant& x, const Circulant& y) { return mul_naive(x, y); }, SIZE_MAX},
      {"spectral", [](const Circulant& x, const Circulant& y) { return fast_mul(x, y); }, SIZE_MAX},
      {"dense",
       [](const Circulant& x, const Circulant& y) {
         const auto p = oracle::dense_mul(to_dense(x), to_dense(y));
         return Circulant(std::vector<Complex>(p.data().begin(), p.data().begin() + x.order()));
       },
       dense_max},
  };
}

std::vector<BenchResult> run_bench(const BenchOptions& options) {
  if (options.reps < 3) throw std::invalid_argument("reps must be at least 3");
  if (options.sizes.empty()) throw std::invalid_argument("no sizes given");
  for (auto n : options.sizes) {
    if (n < 2) throw std::invalid_argument("sizes must be at least 2");
  }
  if (options.methods.empty()) throw std::invalid_argument("no methods given");

  std::mt19937_64 rng(options.seed);
  struct Case {
    Circulant x, y;
  };
  std::vector<Case> cases;
  for (auto n : options.sizes) cases.push_back({random_circulant(rng, n), random_circulant(rng, n)});

  // Cross-check every size before timing anything.
  for (const auto& c : cases) {
    const std::size_t n = c.x.order();
    const double tol = 1e-9 * (1.0 + inf_norm(c.x) * inf_norm(c.y));
    const BenchMethod* ref = nullptr;
    Circulant expected = Circulant::zero(n);
    for (const auto& m : options.methods) {
      if (n > m.max_order) continue;
      const auto r = m.multiply(c.x, c.y);
      if (!ref) {
        ref = &m;
        expected = r;
        continue;
      }
      const double diff = r.order() == n ? max_abs_diff(r, expected) : INFINITY;
      const double dsum = std::abs(checksum(r) - checksum(expected));
      if (!(diff <= tol) || !(dsum <= tol * static_cast<double>(n))) {
        throw bench_disagreement("n = " + std::to_string(n) + ": " + m.name + " differs from " + ref->name +
                                 " by " + format_double(diff) + " (tolerance " + format_double(tol) + ")");
      }
    }
  }

  std::vector<BenchResult> results;
  for (const auto& c : cases) {
    const std::size_t n = c.x.order();
    for (const auto& m : options.methods) {
      if (n > m.max_order) continue;
      std::vector<std::int64_t> times;
      Circulant out = Circulant::zero(n);
      for (std::size_t r = 0; r < options.reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        out = m.multiply(c.x, c.y);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
      }
      std::sort(times.begin(), times.end());
      const std::size_t mid = times.size() / 2;
      const std::int64_t median = times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
      results.push_back({n, m.name, options.reps, median, checksum(out)});
    }
  }
  return results;
}

std::string to_json_line(const BenchResult& r) {
  json j;
  j["n"] = r.n;
  j["method"] = r.method;
  j["reps"] = r.reps;
  j["median_ns"] = r.median_ns;
  j["checksum"] = r.checksum;
  return j.dump();
}

}  // namespace circalg::cli
