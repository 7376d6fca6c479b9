#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "siggb/polynomial.hpp"

namespace siggb {

struct SystemSpec {
  std::string name;
  PolyRing ring;
  std::vector<Polynomial> generators;
  bool homogenized = false;
};

// Throw std::invalid_argument for n < 2.
SystemSpec gen_cyclic(unsigned n, PrimeField field = PrimeField{});
SystemSpec gen_katsura(unsigned n, PrimeField field = PrimeField{});
SystemSpec gen_eco(unsigned n, PrimeField field = PrimeField{});

// Appends a smallest variable (named "h", or "h" followed by underscores if
// taken) and pads every term to the generator's top degree.
SystemSpec homogenize(const SystemSpec& spec);
// Sets the last variable to 1 and drops it.
SystemSpec dehomogenize(const SystemSpec& spec);

struct RandomSystemParams {
  unsigned num_vars = 3;
  unsigned max_degree = 2;
  unsigned count = 3;
  std::uint64_t seed = 0;
};

// Deterministic for a given parameter set (mt19937_64, no distributions).
SystemSpec random_system(const RandomSystemParams& params, PrimeField field = PrimeField{});

// Parses "cyclic-N", "katsura-N", "eco-N", optionally suffixed "-h".
SystemSpec named_system(std::string_view name, PrimeField field = PrimeField{});

}  // namespace siggb
