#include "siggb/sigcore.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>
#include <vector>

#include "siggb/errors.hpp"

namespace siggb {

std::strong_ordering sig_cmp(const Signature& s, const Signature& t) {
  if (s.index != t.index) return s.index <=> t.index;
  return cmp_degrevlex(s.mono, t.mono);
}

Signature sig_mul(const Monomial& u, const Signature& s) { return Signature{u * s.mono, s.index}; }

SPairResult make_spair(const LabeledPoly& f, const LabeledPoly& g, std::size_t f_idx,
                       std::size_t g_idx) {
  if (f.poly.is_zero() || g.poly.is_zero()) {
    throw std::invalid_argument("s-pair of a zero polynomial");
  }
  if (f_idx == g_idx) return TrivialPair{};
  Monomial tau = lcm(f.poly.lm(), g.poly.lm());
  Monomial u_f = divide_exact(tau, f.poly.lm());
  Monomial u_g = divide_exact(tau, g.poly.lm());
  Signature sf = sig_mul(u_f, f.sig);
  Signature sg = sig_mul(u_g, g.sig);
  auto ord = sig_cmp(sf, sg);
  if (ord == 0) return EqualSignature{};
  if (ord > 0) return CriticalPair{std::move(sf), f_idx, g_idx, std::move(u_f), std::move(u_g), tau};
  return CriticalPair{std::move(sg), g_idx, f_idx, std::move(u_g), std::move(u_f), std::move(tau)};
}

Polynomial spair_poly(const CriticalPair& pair, std::span<const LabeledPoly> basis,
                      const PrimeField& field) {
  if (pair.f_idx >= basis.size() || pair.g_idx >= basis.size()) {
    throw ContextError("critical pair refers to positions outside the basis");
  }
  const Polynomial& f = basis[pair.f_idx].poly;
  const Polynomial& g = basis[pair.g_idx].poly;
  if (f.is_zero() || g.is_zero() || f.lm() * pair.u_f != pair.lcm || g.lm() * pair.u_g != pair.lcm) {
    throw ContextError("critical pair does not match the basis");
  }
  Polynomial uf = mul_term(f, Term{1, pair.u_f}, field);
  return sub_mul_term(uf, field.div(f.lc(), g.lc()), pair.u_g, g, field);
}

namespace {

// Cheap divisibility pre-filter: bit v is set iff variable v occurs.
std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t v = 0; v < m.num_vars(); ++v) {
    if (m[v] != 0) mask |= 1u << v;
  }
  return mask;
}

}  // namespace

std::optional<LabeledPoly> sig_safe_reduce(LabeledPoly r, std::span<const LabeledPoly> reducers,
                                           const PrimeField& field, Stats& stats) {
  if (r.poly.is_zero()) return std::nullopt;
  std::vector<std::uint32_t> masks(reducers.size());
  for (std::size_t k = 0; k < reducers.size(); ++k) {
    masks[k] = reducers[k].poly.is_zero() ? ~0u : support_mask(reducers[k].poly.lm());
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  [[maybe_unused]] Monomial last_lm = r.poly.lm();
  while (!r.poly.is_zero()) {
    const Monomial& lm = r.poly.lm();
    const std::uint32_t lm_mask = support_mask(lm);
    std::size_t best = kNone;
    Signature best_sig;
    Monomial best_t;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      if ((masks[k] & ~lm_mask) != 0) continue;
      const LabeledPoly& g = reducers[k];
      if (!divides(g.poly.lm(), lm)) continue;
      // reducers of lower index are always sig-safe and beat higher indices
      if (best != kNone && g.sig.index > best_sig.index) continue;
      Monomial t = divide_exact(lm, g.poly.lm());
      Signature ts = sig_mul(t, g.sig);
      if (sig_cmp(ts, r.sig) >= 0) continue;
      if (best == kNone || sig_cmp(ts, best_sig) < 0) {
        best = k;
        best_sig = std::move(ts);
        best_t = std::move(t);
      }
    }
    if (best == kNone) break;
    assert(sig_cmp(best_sig, r.sig) < 0);
    const Polynomial& g = reducers[best].poly;
    r.poly = sub_mul_term(r.poly, field.div(r.poly.lc(), g.lc()), best_t, g, field);
    ++stats.reduction_steps;
    assert(r.poly.is_zero() || cmp_degrevlex(r.poly.lm(), last_lm) < 0);
    if (!r.poly.is_zero()) last_lm = r.poly.lm();
  }
  if (r.poly.is_zero()) return std::nullopt;
  r.poly = make_monic(r.poly, field);
  return r;
}

}  // namespace siggb
