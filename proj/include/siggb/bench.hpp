#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "siggb/engine.hpp"
#include "siggb/systems.hpp"

namespace siggb {

struct BenchReport {
  std::string system;
  std::string variant;
  std::uint32_t characteristic = 0;
  Stats stats;
  std::size_t basis_size = 0;
  std::optional<bool> verified;  // set only when verification ran
  bool aborted = false;
};

struct BenchOptions {
  bool verify = false;
  std::uint64_t pair_limit = 0;
  bool parallel = false;  // one thread per variant
};

// Reports are sorted by variant name.
std::vector<BenchReport> run_bench(const SystemSpec& spec, const std::vector<Variant>& variants,
                                   const BenchOptions& options = {});

// Set equality of monic polynomials.
bool same_basis(const PolyBasis& a, const PolyBasis& b);

nlohmann::json stat_report(const Stats& stats);
nlohmann::json to_json(const BenchReport& report);
std::string to_csv(const std::vector<BenchReport>& reports);
std::string to_text(const std::vector<BenchReport>& reports);

}  // namespace siggb
