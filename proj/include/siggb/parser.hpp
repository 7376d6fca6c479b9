#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "siggb/systems.hpp"

namespace siggb {

struct ParsedSystem {
  SystemSpec spec;
  std::vector<std::string> warnings;
};

// Line-oriented format:
//   vars: x,y,z
//   char: 32003
//   <one polynomial per nonempty line>
// Throws ParseError with line and column on malformed input. A given
// `characteristic` replaces the one declared in the header.
ParsedSystem parse_system(std::string_view text, std::string name = "file",
                          std::optional<std::uint32_t> characteristic = std::nullopt);

// Parses a single polynomial; `line` is used for error positions.
Polynomial parse_polynomial(std::string_view text, const PolyRing& ring, std::size_t line = 1);

// Inverse of parse_system for canonical systems.
std::string format_system(const SystemSpec& spec);

}  // namespace siggb
