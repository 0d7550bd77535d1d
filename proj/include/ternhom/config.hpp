#pragma once

#include <chrono>
#include <cstddef>

namespace ternhom {

// Resource limits shared by the heavier operations. All limits are positive;
// a zero time budget means "no time limit".
struct ComputeLimits {
  std::size_t max_cosets = 100000;
  std::size_t max_basis = 2000000;
  int max_degree = 3;  // highest boundary matrix built
  std::size_t max_assignments = 50000000;
  std::size_t max_entry_bits = 1u << 16;
  std::chrono::milliseconds snf_time_budget{0};
  unsigned jobs = 1;
};

}  // namespace ternhom
