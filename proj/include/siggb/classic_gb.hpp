#pragma once

#include <span>
#include <vector>

#include "siggb/polynomial.hpp"

namespace siggb {

/// Sequence of nonzero monic polynomials. Bases returned by interreduce() and
/// buchberger() are reduced and sorted ascending by leading monomial.
struct PolyBasis {
  std::vector<Polynomial> elems;

  bool empty() const noexcept { return elems.empty(); }
  std::size_t size() const noexcept { return elems.size(); }

  friend bool operator==(const PolyBasis&, const PolyBasis&) = default;
};

enum class ReductionMode { TopOnly, Full };

// Reducer choice: smallest leading monomial among divisors, then lowest position.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis,
                       ReductionMode mode, const PrimeField& field);

Polynomial spoly(const Polynomial& f, const Polynomial& g, const PrimeField& field);

PolyBasis interreduce(std::span<const Polynomial> polys, const PrimeField& field);

PolyBasis buchberger(std::span<const Polynomial> generators, const PrimeField& field);

bool is_groebner(std::span<const Polynomial> basis, const PrimeField& field);

// Monic, lm-minimal and tail-reduced, checked by direct scan.
bool is_reduced(std::span<const Polynomial> basis);

// Sorts ascending by leading monomial.
void sort_by_lm(std::vector<Polynomial>& polys);

}  // namespace siggb
