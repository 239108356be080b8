#pragma once

// Seeded invariant suite behind `circalg verify-all`. Sizes are kept small
// enough to finish in a few seconds.

#include <cstdint>
#include <string>
#include <vector>

namespace circalg::cli {

struct CheckOutcome {
  std::string name;
  bool pass = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

std::vector<CheckOutcome> verify_all(std::uint64_t seed);

}  // namespace circalg::cli
