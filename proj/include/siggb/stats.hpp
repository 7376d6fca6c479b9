#pragma once

#include <chrono>
#include <cstdint>

namespace siggb {

struct Stats {
  std::uint64_t reduction_steps = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t pairs_generated = 0;
  std::uint64_t rejected_nm = 0;
  std::uint64_t rejected_rw = 0;
  std::uint64_t basis_size_final = 0;
  std::chrono::nanoseconds elapsed{0};

  friend bool operator==(const Stats&, const Stats&) = default;
};

}  // namespace siggb
