#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "siggb/field.hpp"
#include "siggb/monomial.hpp"

namespace siggb {

struct Term {
  Coeff coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly descending under degrevlex, no zero
/// coefficients, no repeated monomials. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;

  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms, const PrimeField& field);
  // Caller guarantees the canonical form.
  static Polynomial from_canonical(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  Coeff lc() const { return terms_.front().coeff; }
  bool is_monic() const noexcept { return !terms_.empty() && terms_.front().coeff == 1; }
  bool is_homogeneous() const noexcept;
  std::uint32_t max_degree() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q, const PrimeField& field);
Polynomial sub(const Polynomial& p, const Polynomial& q, const PrimeField& field);
Polynomial negate(const Polynomial& p, const PrimeField& field);
Polynomial scale(const Polynomial& p, Coeff c, const PrimeField& field);
Polynomial mul_term(const Polynomial& p, const Term& t, const PrimeField& field);
Polynomial mul(const Polynomial& p, const Polynomial& q, const PrimeField& field);
// p * lc(p)^-1; make_monic(0) = 0.
Polynomial make_monic(const Polynomial& p, const PrimeField& field);
// p - c * m * q, the elementary reduction step.
Polynomial sub_mul_term(const Polynomial& p, Coeff c, const Monomial& m, const Polynomial& q,
                        const PrimeField& field);

/// Ring context: coefficient field plus named variables, ordered
/// x1 > x2 > ... > xn under degrevlex.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variable_names, PrimeField field);
  // Variables named x1..xn.
  PolyRing(std::size_t num_vars, PrimeField field);

  std::size_t num_vars() const noexcept { return names_.size(); }
  const PrimeField& field() const noexcept { return field_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  Monomial one() const { return Monomial(num_vars()); }
  Monomial var(std::size_t i, unsigned exponent = 1) const;
  Polynomial constant(std::int64_t c) const;

  std::string format(const Monomial& m) const;
  std::string format(const Polynomial& p) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  std::vector<std::string> names_;
  PrimeField field_;
};

}  // namespace siggb
