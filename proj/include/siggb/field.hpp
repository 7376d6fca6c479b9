#pragma once

#include <cstdint>

namespace siggb {

using Coeff = std::uint32_t;

/// Arithmetic in Z/pZ for an odd prime 3 <= p < 2^31. Elements are the
/// canonical representatives in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint32_t characteristic = kDefaultCharacteristic);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  // Throws std::domain_error on zero.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  // Canonical image of an arbitrary integer.
  Coeff from_int(std::int64_t v) const noexcept;
  // Symmetric representative in (-p/2, p/2], for printing.
  std::int64_t to_signed(Coeff a) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace siggb
