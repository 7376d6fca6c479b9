#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <unordered_set>
#include <vector>

#include "siggb/monomial.hpp"
#include "siggb/polynomial.hpp"
#include "siggb/sigcore.hpp"

namespace siggb {

/// Syzygy signatures m * e_j stored per module index j. Buckets are kept
/// divisor-minimal when pruning is on; queries are unaffected by pruning.
class SyzygySigSet {
 public:
  explicit SyzygySigSet(bool prune = true) : prune_(prune) {}

  void insert(std::uint32_t index, const Monomial& mono);
  void insert_all(std::uint32_t index, std::span<const Monomial> monos);
  // True iff some m in bucket `index` divides `mono`.
  bool has_divisor(std::uint32_t index, const Monomial& mono) const;
  std::span<const Monomial> bucket(std::uint32_t index) const;
  std::vector<std::uint32_t> indices() const;
  std::size_t size() const noexcept;
  void clear() noexcept { buckets_.clear(); }

 private:
  bool prune_;
  std::map<std::uint32_t, std::vector<Monomial>> buckets_;
};

// Reject iff a stored syzygy signature of the same index divides s.
bool nm_check(const Signature& s, const SyzygySigSet& syz);

/// F5 rewrite rules: per index, signature monomials in creation order.
class RuleList {
 public:
  // Returns the position of the new rule within its bucket.
  std::size_t append(std::uint32_t index, const Monomial& mono);
  std::span<const Monomial> bucket(std::uint32_t index) const;
  void clear() noexcept { buckets_.clear(); }

 private:
  std::map<std::uint32_t, std::vector<Monomial>> buckets_;
};

// True iff a rule registered after `own_rule_position` in bucket `index`
// divides `sig_mono` (= u_h * t_h). Throws std::out_of_range on an unknown
// position.
bool rw_check_f5(const Monomial& sig_mono, std::uint32_t index, std::size_t own_rule_position,
                 const RuleList& rules);

/// Signatures of every pair enqueued in the current incremental step.
class GgvSignatureFilter {
 public:
  bool contains(const Signature& s) const;
  // Returns false if s was already present.
  bool insert(const Signature& s);
  void clear() noexcept { seen_.clear(); }

 private:
  struct Hash {
    std::size_t operator()(const Signature& s) const noexcept {
      return s.mono.hash() * 31u + s.index;
    }
  };
  std::unordered_set<Signature, Hash> seen_;
};

// True iff a pair of exactly this signature was enqueued before.
bool rw_check_ggv(const Signature& pair_sig, const GgvSignatureFilter& enqueued);

// lm(b_k) for every b_k: the principal syzygies b_k e_{l+1} - f e_k have
// leading signature lm(b_k) e_{l+1}.
std::vector<Monomial> psyz_signatures(std::span<const Polynomial> basis);

struct IndexedMonomial {
  std::uint32_t index;
  Monomial mono;

  friend bool operator==(const IndexedMonomial&, const IndexedMonomial&) = default;
};

// Principal syzygy signatures among the basis itself: lm(b_m) e_k for m < k
// (1-based indices, basis in engine order).
std::vector<IndexedMonomial> lower_index_psyz_signatures(std::span<const Polynomial> basis);

// { lcm(lm(b_l), lm(b_k)) / lm(b_l) : k < l } where b_l is the last element;
// registered under index l = basis.size(). Empty for a singleton.
std::vector<Monomial> build_s_from_interreduction(std::span<const Polynomial> basis);

// Drops entries whose index is one of the recorded S-set indices.
std::vector<IndexedMonomial> corollary_filter(std::vector<IndexedMonomial> entries,
                                              const std::set<std::uint32_t>& recorded_indices);

}  // namespace siggb
