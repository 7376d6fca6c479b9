#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace siggb {

/// Exponent vector over a fixed number of variables (at most kMaxVars) with
/// its total degree cached. Unused trailing slots are always zero, so plain
/// memberwise equality is monomial equality.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 32;
  using Exponent = std::uint16_t;

  Monomial() = default;
  // The monomial 1 in `num_vars` variables.
  explicit Monomial(std::size_t num_vars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t num_vars() const noexcept { return nvars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  bool is_one() const noexcept { return degree_ == 0; }

  // Returns a copy with exponent `i` replaced.
  Monomial with_exponent(std::size_t i, unsigned e) const;
  // Returns a copy extended by one trailing variable of exponent `e`.
  Monomial extended(unsigned e) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;

  friend Monomial operator*(const Monomial&, const Monomial&);
  friend Monomial lcm(const Monomial&, const Monomial&);
  friend Monomial divide_exact(const Monomial&, const Monomial&);
};

// Degree reverse lexicographic order with x1 > x2 > ... > xn.
std::strong_ordering cmp_degrevlex(const Monomial& a, const Monomial& b);

// True iff a | b.
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
// a / b; throws DivisionError unless b | a.
Monomial divide_exact(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace siggb
