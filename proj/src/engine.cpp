#include "siggb/engine.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <string>

namespace siggb {

namespace {

constexpr std::array<Variant, 6> kAllVariants = {Variant::Ggv, Variant::GgvI, Variant::F5C,
                                                 Variant::F5CI, Variant::F5A, Variant::F5AI};

}  // namespace

VariantConfig config_for(Variant v) noexcept {
  switch (v) {
    case Variant::Ggv: return {NmMode::PsyzPlusCurrentZero, RwMode::GgvDedup};
    case Variant::GgvI: return {NmMode::PsyzPlusAllS, RwMode::GgvDedup};
    case Variant::F5C: return {NmMode::PsyzOnly, RwMode::F5Rules};
    case Variant::F5CI: return {NmMode::PsyzPlusPriorS, RwMode::F5Rules};
    case Variant::F5A: return {NmMode::PsyzPlusCurrentZero, RwMode::F5Rules};
    case Variant::F5AI: return {NmMode::PsyzPlusAllS, RwMode::F5Rules};
  }
  return {};
}

std::string_view variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::Ggv: return "ggv";
    case Variant::GgvI: return "ggv-i";
    case Variant::F5C: return "f5c";
    case Variant::F5CI: return "f5c-i";
    case Variant::F5A: return "f5a";
    case Variant::F5AI: return "f5a-i";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  for (Variant v : kAllVariants) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

std::span<const Variant> all_variants() noexcept { return kAllVariants; }

bool SigGbEngine::QueueOrder::operator()(const QueuedPair& a, const QueuedPair& b) const {
  auto ord = sig_cmp(a.pair.sig, b.pair.sig);
  if (ord != 0) return ord > 0;
  return a.seq > b.seq;
}

SigGbEngine::SigGbEngine(PrimeField field, VariantConfig cfg, EngineOptions options)
    : field_(field), cfg_(cfg), options_(options) {}

void SigGbEngine::record_s_set(std::span<const Polynomial> basis) {
  auto index = static_cast<std::uint32_t>(basis.size());
  std::vector<Monomial> s = build_s_from_interreduction(basis);
  if (options_.observer) options_.observer->on_s_set(index, s);
  // labels are reassigned by every interreduction, so older sets no longer apply
  recorded_.clear();
  recorded_indices_.clear();
  if (s.empty()) return;
  recorded_.insert_all(index, s);
  recorded_indices_.insert(index);
}

bool SigGbEngine::nm_side(const Monomial& u, std::size_t idx, const SyzygySigSet* prior,
                          bool with_zero) const {
  const Signature s = sig_mul(u, basis_[idx].sig);
  if (s.index == current_index_) {
    if (nm_check(s, psyz_)) return true;
    if (with_zero && nm_check(s, zero_sigs_)) return true;
  }
  return prior != nullptr && nm_check(s, *prior);
}

NmVerdicts SigGbEngine::nm_verdicts(const CriticalPair& p) const {
  NmVerdicts v;
  v.basic = nm_side(p.u_f, p.f_idx, nullptr, false) || nm_side(p.u_g, p.g_idx, nullptr, false);
  v.improved = v.basic || nm_side(p.u_f, p.f_idx, nullptr, true) || nm_side(p.u_g, p.g_idx, nullptr, true);
  v.strengthened = v.improved || nm_side(p.u_f, p.f_idx, &prior_, true) ||
                   nm_side(p.u_g, p.g_idx, &prior_, true);
  return v;
}

bool SigGbEngine::rw_rejects(const CriticalPair& p) const {
  const std::size_t sides[2] = {p.f_idx, p.g_idx};
  const Monomial* us[2] = {&p.u_f, &p.u_g};
  for (int k = 0; k < 2; ++k) {
    const std::size_t idx = sides[k];
    if (!rule_pos_[idx]) continue;  // element of the previous basis
    const LabeledPoly& h = basis_[idx];
    if (rw_check_f5(*us[k] * h.sig.mono, h.sig.index, *rule_pos_[idx], rules_)) return true;
  }
  return false;
}

void SigGbEngine::add_pairs_for(std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    SPairResult res = make_spair(basis_[n], basis_[k], n, k);
    auto* pair = std::get_if<CriticalPair>(&res);
    if (pair == nullptr) continue;
    ++stats_.pairs_generated;
    if (options_.pair_limit != 0 && stats_.pairs_generated > options_.pair_limit) {
      throw PairLimitExceeded("pair limit of " + std::to_string(options_.pair_limit) + " exceeded");
    }

    if (options_.observer) {
      NmVerdicts v = nm_verdicts(*pair);
      options_.observer->on_pair_created(*pair, v);
    }
    const bool with_zero = cfg_.uses_zero_signatures();
    const SyzygySigSet* prior = cfg_.uses_cross_step_sets() ? &prior_ : nullptr;
    const bool reject = nm_side(pair->u_f, pair->f_idx, prior, with_zero) ||
             nm_side(pair->u_g, pair->g_idx, prior, with_zero);
    if (reject) {
      ++stats_.rejected_nm;
      continue;
    }
    if (cfg_.rw_mode == RwMode::GgvDedup && !enqueued_.insert(pair->sig)) {
      ++stats_.rejected_rw;
      continue;
    }
    queue_.push_back(QueuedPair{std::move(*pair), seq_++});
    std::push_heap(queue_.begin(), queue_.end(), QueueOrder{});
  }
}

std::vector<LabeledPoly> SigGbEngine::inc_sig(const Polynomial& f_new,
                                              std::span<const Polynomial> prev) {
  const auto ell = static_cast<std::uint32_t>(prev.size());
  const Monomial one(f_new.lm().num_vars());
  current_index_ = ell + 1;

  basis_.clear();
  rule_pos_.clear();
  queue_.clear();
  rules_.clear();
  enqueued_.clear();
  psyz_.clear();
  zero_sigs_.clear();
  prior_.clear();

  for (std::uint32_t k = 0; k < ell; ++k) {
    basis_.push_back(LabeledPoly{Signature{one, k + 1}, prev[k]});
    rule_pos_.emplace_back();
  }
  basis_.push_back(LabeledPoly{Signature{one, current_index_}, make_monic(f_new, field_)});
  rule_pos_.emplace_back(rules_.append(current_index_, one));

  psyz_.insert_all(current_index_, psyz_signatures(prev));
  // cross-step witnesses: the S-set of the latest interreduction plus the
  // basis's own principal syzygies at indices it does not cover
  for (std::uint32_t index : recorded_.indices()) prior_.insert_all(index, recorded_.bucket(index));
  for (const IndexedMonomial& e : corollary_filter(lower_index_psyz_signatures(prev), recorded_indices_)) {
    prior_.insert(e.index, e.mono);
  }

  add_pairs_for(basis_.size() - 1);

  [[maybe_unused]] std::optional<Signature> last_sig;
  while (!queue_.empty()) {
    std::pop_heap(queue_.begin(), queue_.end(), QueueOrder{});
    CriticalPair pair = std::move(queue_.back().pair);
    queue_.pop_back();
    assert(!last_sig || sig_cmp(*last_sig, pair.sig) <= 0);
    last_sig = pair.sig;
    if (options_.observer) options_.observer->on_pair_popped(pair);

    // dedup has no later rewrite stage, so zero signatures found after
    // enqueueing are applied here
    if (cfg_.rw_mode == RwMode::GgvDedup) {
      const SyzygySigSet* prior = cfg_.uses_cross_step_sets() ? &prior_ : nullptr;
      const bool wz = cfg_.uses_zero_signatures();
      if (nm_side(pair.u_f, pair.f_idx, prior, wz)) {
        ++stats_.rejected_nm;
        continue;
      }
    }
    if (cfg_.rw_mode == RwMode::F5Rules) {
      if (rw_rejects(pair)) {
        ++stats_.rejected_rw;
        continue;
      }
    }
    std::optional<std::size_t> rule;
    if (cfg_.rw_mode == RwMode::F5Rules) rule = rules_.append(pair.sig.index, pair.sig.mono);

    LabeledPoly s{pair.sig, spair_poly(pair, basis_, field_)};
    std::optional<LabeledPoly> reduced = sig_safe_reduce(std::move(s), basis_, field_, stats_);
    if (!reduced) {
      ++stats_.zero_reductions;
      zero_sigs_.insert(pair.sig.index, pair.sig.mono);
      if (options_.observer) options_.observer->on_zero_reduction(pair.sig);
      continue;
    }
    basis_.push_back(std::move(*reduced));
    rule_pos_.push_back(rule);
    if (options_.observer) options_.observer->on_new_element(basis_.back());
    add_pairs_for(basis_.size() - 1);
  }
  return basis_;
}

std::vector<Polynomial> SigGbEngine::engine_order(const std::vector<LabeledPoly>& g) const {
  std::vector<Polynomial> polys;
  polys.reserve(g.size());
  for (const LabeledPoly& lp : g) polys.push_back(lp.poly);
  std::vector<Polynomial> b = interreduce(polys, field_).elems;
  if (b.size() < 2) return b;
  // the survivor descending from the highest signature becomes the last element
  std::size_t pinned = b.size() - 1;
  const Signature* best = nullptr;
  for (std::size_t k = 0; k < b.size(); ++k) {
    for (const LabeledPoly& lp : g) {
      if (lp.poly.is_zero() || lp.poly.lm() != b[k].lm()) continue;
      if (best == nullptr || sig_cmp(lp.sig, *best) > 0) {
        best = &lp.sig;
        pinned = k;
      }
    }
  }
  std::rotate(b.begin() + static_cast<std::ptrdiff_t>(pinned),
              b.begin() + static_cast<std::ptrdiff_t>(pinned) + 1, b.end());
  return b;
}

SigGbResult SigGbEngine::run(std::span<const Polynomial> generators) {
  if (generators.empty()) throw std::invalid_argument("sig_gb needs at least one generator");
  const auto start = std::chrono::steady_clock::now();
  stats_ = Stats{};
  recorded_.clear();
  recorded_indices_.clear();

  std::vector<Polynomial> gens;
  for (const Polynomial& f : generators) {
    if (!f.is_zero()) gens.push_back(f);
  }
  if (gens.empty()) {
    stats_.elapsed = std::chrono::steady_clock::now() - start;
    return SigGbResult{PolyBasis{}, stats_};
  }

  const Monomial one(gens.front().lm().num_vars());
  std::vector<LabeledPoly> g{LabeledPoly{Signature{one, 1}, make_monic(gens.front(), field_)}};
  for (std::size_t i = 1; i < gens.size(); ++i) {
    std::vector<Polynomial> b = engine_order(g);
    if (options_.observer) options_.observer->on_interreduced(i, b);
    Polynomial f = make_monic(normal_form(gens[i], b, ReductionMode::Full, field_), field_);
    if (options_.observer) options_.observer->on_generator_reduced(i + 1, f);
    if (f.is_zero()) continue;
    // recorded in every mode so the strengthened verdict is always defined
    record_s_set(b);
    g = inc_sig(f, b);
    if (options_.observer) options_.observer->on_step_finished(i + 1, g);
  }

  std::vector<Polynomial> polys;
  for (const LabeledPoly& lp : g) polys.push_back(lp.poly);
  PolyBasis result = interreduce(polys, field_);
  if (options_.observer) options_.observer->on_interreduced(gens.size(), result.elems);
  stats_.basis_size_final = result.size();
  stats_.elapsed = std::chrono::steady_clock::now() - start;
  return SigGbResult{std::move(result), stats_};
}

SigGbResult sig_gb(std::span<const Polynomial> generators, const PrimeField& field,
                   VariantConfig cfg, const EngineOptions& options) {
  SigGbEngine engine(field, cfg, options);
  return engine.run(generators);
}

}  // namespace siggb
