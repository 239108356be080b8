#pragma once

// Timing harness for circulant products. Every method is run once on the
// same fixed-seed inputs and cross-checked before anything is timed.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circalg/circulant.hpp"

namespace circalg::cli {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct BenchMethod {
  std::string name;
  std::function<Circulant(const Circulant&, const Circulant&)> multiply;
  /// Largest n the method is run at; bigger sizes skip it.
  std::size_t max_order = SIZE_MAX;
};

/// naive, spectral, and dense (the O(n^3) product, capped at dense_max).
std::vector<BenchMethod> default_methods(std::size_t dense_max = 256);

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t reps = 5;
  std::uint64_t seed = kDefaultSeed;
  std::vector<BenchMethod> methods = default_methods();
};

struct BenchResult {
  std::size_t n = 0;
  std::string method;
  std::size_t reps = 0;
  std::int64_t median_ns = 0;
  /// sum of |r_k| over the product's first row
  double checksum = 0.0;
};

/// Methods disagree; no timings are produced for any size.
class bench_disagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument unless reps >= 3 and every size >= 2, and
/// bench_disagreement when two methods differ by more than
/// 1e-9 (1 + ||x|| ||y||) at any size.
std::vector<BenchResult> run_bench(const BenchOptions& options);

/// {"n":..,"method":..,"reps":..,"median_ns":..,"checksum":..}
std::string to_json_line(const BenchResult& r);

}  // namespace circalg::cli
