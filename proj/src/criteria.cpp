#include "siggb/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace siggb {

void SyzygySigSet::insert(std::uint32_t index, const Monomial& mono) {
  auto& bucket = buckets_[index];
  if (prune_) {
    if (std::any_of(bucket.begin(), bucket.end(), [&](const Monomial& m) { return divides(m, mono); })) {
      return;
    }
    std::erase_if(bucket, [&](const Monomial& m) { return divides(mono, m); });
  }
  bucket.push_back(mono);
}

void SyzygySigSet::insert_all(std::uint32_t index, std::span<const Monomial> monos) {
  for (const Monomial& m : monos) insert(index, m);
}

bool SyzygySigSet::has_divisor(std::uint32_t index, const Monomial& mono) const {
  auto it = buckets_.find(index);
  if (it == buckets_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const Monomial& m) { return divides(m, mono); });
}

std::span<const Monomial> SyzygySigSet::bucket(std::uint32_t index) const {
  auto it = buckets_.find(index);
  if (it == buckets_.end()) return {};
  return it->second;
}

std::vector<std::uint32_t> SyzygySigSet::indices() const {
  std::vector<std::uint32_t> out;
  for (const auto& [index, bucket] : buckets_) {
    if (!bucket.empty()) out.push_back(index);
  }
  return out;
}

std::size_t SyzygySigSet::size() const noexcept {
  std::size_t n = 0;
  for (const auto& [index, bucket] : buckets_) n += bucket.size();
  return n;
}

bool nm_check(const Signature& s, const SyzygySigSet& syz) { return syz.has_divisor(s.index, s.mono); }

std::size_t RuleList::append(std::uint32_t index, const Monomial& mono) {
  auto& bucket = buckets_[index];
  bucket.push_back(mono);
  return bucket.size() - 1;
}

std::span<const Monomial> RuleList::bucket(std::uint32_t index) const {
  auto it = buckets_.find(index);
  if (it == buckets_.end()) return {};
  return it->second;
}

bool rw_check_f5(const Monomial& sig_mono, std::uint32_t index, std::size_t own_rule_position,
                 const RuleList& rules) {
  auto bucket = rules.bucket(index);
  if (bucket.empty()) return false;
  if (own_rule_position >= bucket.size()) throw std::out_of_range("unknown rule position");
  for (std::size_t k = bucket.size(); k-- > own_rule_position + 1;) {
    if (divides(bucket[k], sig_mono)) return true;
  }
  return false;
}

bool GgvSignatureFilter::contains(const Signature& s) const { return seen_.contains(s); }

bool GgvSignatureFilter::insert(const Signature& s) { return seen_.insert(s).second; }

bool rw_check_ggv(const Signature& pair_sig, const GgvSignatureFilter& enqueued) {
  return enqueued.contains(pair_sig);
}

std::vector<Monomial> psyz_signatures(std::span<const Polynomial> basis) {
  std::vector<Monomial> out;
  out.reserve(basis.size());
  for (const Polynomial& b : basis) out.push_back(b.lm());
  return out;
}

std::vector<IndexedMonomial> lower_index_psyz_signatures(std::span<const Polynomial> basis) {
  std::vector<IndexedMonomial> out;
  for (std::size_t k = 1; k < basis.size(); ++k) {
    for (std::size_t m = 0; m < k; ++m) {
      out.push_back(IndexedMonomial{static_cast<std::uint32_t>(k + 1), basis[m].lm()});
    }
  }
  return out;
}

std::vector<Monomial> build_s_from_interreduction(std::span<const Polynomial> basis) {
  std::vector<Monomial> out;
  if (basis.size() < 2) return out;
  const Monomial& last = basis.back().lm();
  for (std::size_t k = 0; k + 1 < basis.size(); ++k) {
    Monomial u = divide_exact(lcm(last, basis[k].lm()), last);
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(std::move(u));
  }
  return out;
}

std::vector<IndexedMonomial> corollary_filter(std::vector<IndexedMonomial> entries,
                                              const std::set<std::uint32_t>& recorded_indices) {
  std::erase_if(entries, [&](const IndexedMonomial& e) { return recorded_indices.contains(e.index); });
  return entries;
}

}  // namespace siggb
