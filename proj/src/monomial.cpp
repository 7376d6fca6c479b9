#include "siggb/monomial.hpp"

#include <limits>
#include <string>

#include "siggb/errors.hpp"

namespace siggb {

namespace {

void check_arity(std::size_t n) {
  if (n > Monomial::kMaxVars) {
    throw ContextError("at most " + std::to_string(Monomial::kMaxVars) +
                       " variables supported, got " + std::to_string(n));
  }
}

void check_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw ContextError("monomials over " + std::to_string(a.num_vars()) + " and " +
                       std::to_string(b.num_vars()) + " variables");
  }
}

Monomial::Exponent narrow_exponent(unsigned e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max()) {
    throw std::overflow_error("exponent overflow: " + std::to_string(e));
  }
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::size_t num_vars) {
  check_arity(num_vars);
  nvars_ = static_cast<std::uint8_t>(num_vars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) {
  check_arity(exponents.size());
  nvars_ = static_cast<std::uint8_t>(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exps_[i] = narrow_exponent(exponents[i]);
    degree_ += exps_[i];
  }
}

Monomial Monomial::with_exponent(std::size_t i, unsigned e) const {
  if (i >= nvars_) throw ContextError("variable index out of range");
  Monomial r = *this;
  r.degree_ = r.degree_ - r.exps_[i] + narrow_exponent(e);
  r.exps_[i] = static_cast<Exponent>(e);
  return r;
}

Monomial Monomial::extended(unsigned e) const {
  check_arity(nvars_ + 1u);
  Monomial r = *this;
  r.exps_[nvars_] = narrow_exponent(e);
  r.degree_ += r.exps_[nvars_];
  r.nvars_ = static_cast<std::uint8_t>(nvars_ + 1);
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering cmp_degrevlex(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) {
      // smaller trailing exponent means larger monomial
      return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    r.exps_[i] = narrow_exponent(static_cast<unsigned>(a.exps_[i]) + b.exps_[i]);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial divide_exact(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw DivisionError("monomial does not divide exactly");
  Monomial r = a;
  for (std::size_t i = 0; i < a.num_vars(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

}  // namespace siggb
