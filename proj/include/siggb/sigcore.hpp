#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>

#include "siggb/polynomial.hpp"
#include "siggb/stats.hpp"

namespace siggb {

/// Module monomial mono * e_index, index >= 1. Coefficients are never stored.
struct Signature {
  Monomial mono;
  std::uint32_t index = 1;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Position over term: index first, then degrevlex on the monomial.
std::strong_ordering sig_cmp(const Signature& s, const Signature& t);
Signature sig_mul(const Monomial& u, const Signature& s);

struct LabeledPoly {
  Signature sig;
  Polynomial poly;  // monic or zero
};

/// S-pair (f, g) stored by basis position. `f` is always the side whose
/// multiplied signature u_f * sig(f) is the pair signature.
struct CriticalPair {
  Signature sig;
  std::size_t f_idx;
  std::size_t g_idx;
  Monomial u_f;
  Monomial u_g;
  Monomial lcm;
};

struct EqualSignature {};
struct TrivialPair {};

using SPairResult = std::variant<CriticalPair, EqualSignature, TrivialPair>;

// Throws std::invalid_argument on zero polynomials.
SPairResult make_spair(const LabeledPoly& f, const LabeledPoly& g, std::size_t f_idx,
                       std::size_t g_idx);

// u_f * poly(f) - lc(f)/lc(g) * u_g * poly(g); throws ContextError on stale indices.
Polynomial spair_poly(const CriticalPair& pair, std::span<const LabeledPoly> basis,
                      const PrimeField& field);

/// Top-reduces r by elements g of `reducers` with t*lm(g) = lm(r) and
/// t*sig(g) < sig(r). Among admissible reducers the one with minimal
/// t*sig(g) is used, ties broken by position. Returns nullopt when the
/// polynomial vanishes, otherwise the monic result under sig(r).
std::optional<LabeledPoly> sig_safe_reduce(LabeledPoly r, std::span<const LabeledPoly> reducers,
                                           const PrimeField& field, Stats& stats);

}  // namespace siggb
