#include "siggb/classic_gb.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>

namespace siggb {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t find_reducer(const Monomial& m, std::span<const Polynomial> basis,
                         std::size_t skip = kNone) {
  std::size_t best = kNone;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == skip || basis[k].is_zero()) continue;
    const Monomial& lm = basis[k].lm();
    if (!divides(lm, m)) continue;
    if (best == kNone || cmp_degrevlex(lm, basis[best].lm()) < 0) best = k;
  }
  return best;
}

Polynomial normal_form_impl(const Polynomial& p, std::span<const Polynomial> basis,
                            ReductionMode mode, const PrimeField& field,
                            std::size_t skip = kNone) {
  std::vector<Term> remainder;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Term& lead = rest.leading_term();
    std::size_t k = find_reducer(lead.mono, basis, skip);
    if (k != kNone) {
      const Polynomial& b = basis[k];
      rest = sub_mul_term(rest, field.div(lead.coeff, b.lc()), divide_exact(lead.mono, b.lm()), b,
                          field);
      continue;
    }
    if (mode == ReductionMode::TopOnly) break;
    remainder.push_back(lead);
    auto tail = rest.terms().subspan(1);
    rest = Polynomial::from_canonical(std::vector<Term>(tail.begin(), tail.end()));
  }
  if (remainder.empty()) return rest;
  // every remainder term exceeds every term still in rest
  remainder.insert(remainder.end(), rest.terms().begin(), rest.terms().end());
  return Polynomial::from_canonical(std::move(remainder));
}

}  // namespace

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis,
                       ReductionMode mode, const PrimeField& field) {
  return normal_form_impl(p, basis, mode, field);
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const PrimeField& field) {
  const Monomial tau = lcm(f.lm(), g.lm());
  Polynomial uf = mul_term(f, Term{1, divide_exact(tau, f.lm())}, field);
  return sub_mul_term(uf, field.div(f.lc(), g.lc()), divide_exact(tau, g.lm()), g, field);
}

void sort_by_lm(std::vector<Polynomial>& polys) {
  std::stable_sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    return cmp_degrevlex(a.lm(), b.lm()) < 0;
  });
}

PolyBasis interreduce(std::span<const Polynomial> polys, const PrimeField& field) {
  std::vector<Polynomial> todo;
  for (const Polynomial& p : polys) {
    if (!p.is_zero()) todo.push_back(make_monic(p, field));
  }
  std::vector<Polynomial> kept;
  while (!todo.empty()) {
    // smallest leading monomial first; earliest wins ties
    auto it = std::min_element(todo.begin(), todo.end(), [](const Polynomial& a, const Polynomial& b) {
      return cmp_degrevlex(a.lm(), b.lm()) < 0;
    });
    Polynomial p = std::move(*it);
    todo.erase(it);
    p = make_monic(normal_form(p, kept, ReductionMode::TopOnly, field), field);
    if (p.is_zero()) continue;
    for (std::size_t k = 0; k < kept.size();) {
      if (divides(p.lm(), kept[k].lm())) {
        todo.push_back(std::move(kept[k]));
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        ++k;
      }
    }
    kept.push_back(std::move(p));
  }
  // lms are now pairwise non-divisible; one tail pass reaches the fixpoint
  for (std::size_t k = 0; k < kept.size(); ++k) {
    kept[k] = make_monic(normal_form_impl(kept[k], kept, ReductionMode::Full, field, k), field);
  }
  sort_by_lm(kept);
  return PolyBasis{std::move(kept)};
}

namespace {

struct BuchbergerPair {
  std::size_t i, j;
  Monomial lcm;
};

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < a.num_vars(); ++v) {
    if (a[v] != 0 && b[v] != 0) return false;
  }
  return true;
}

}  // namespace

PolyBasis buchberger(std::span<const Polynomial> generators, const PrimeField& field) {
  // start from an interreduced generating set; cheap and keeps the pair set small
  std::vector<Polynomial> basis = interreduce(generators, field).elems;
  std::vector<BuchbergerPair> pending;
  // done[i][j] (i > j): pair (i, j) is no longer pending
  std::vector<std::vector<bool>> done;

  auto add_element = [&](std::size_t n) {
    done.emplace_back(n, false);
    for (std::size_t k = 0; k < n; ++k) {
      pending.push_back(BuchbergerPair{n, k, lcm(basis[n].lm(), basis[k].lm())});
    }
  };
  for (std::size_t n = 0; n < basis.size(); ++n) add_element(n);

  auto is_done = [&](std::size_t a, std::size_t b) {
    return a > b ? done[a][b] : done[b][a];
  };

  while (!pending.empty()) {
    // normal strategy: lowest lcm first
    auto it = std::min_element(pending.begin(), pending.end(),
                               [](const BuchbergerPair& a, const BuchbergerPair& b) {
                                 return cmp_degrevlex(a.lcm, b.lcm) < 0;
                               });
    BuchbergerPair pair = *it;
    pending.erase(it);
    done[pair.i][pair.j] = true;

    const Polynomial& f = basis[pair.i];
    const Polynomial& g = basis[pair.j];
    if (coprime(f.lm(), g.lm())) continue;  // product criterion
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = divides(basis[k].lm(), pair.lcm) && is_done(pair.i, k) && is_done(pair.j, k);
    }
    if (chain) continue;

    Polynomial r = normal_form(spoly(f, g, field), basis, ReductionMode::Full, field);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r, field));
    add_element(basis.size() - 1);
  }
  return interreduce(basis, field);
}

bool is_groebner(std::span<const Polynomial> basis, const PrimeField& field) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!normal_form(spoly(basis[i], basis[j], field), basis, ReductionMode::Full, field).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool is_reduced(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_monic()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : basis[i].terms()) {
        if (divides(basis[j].lm(), t.mono)) return false;
      }
    }
  }
  return true;
}

}  // namespace siggb
