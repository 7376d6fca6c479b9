#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "siggb/classic_gb.hpp"
#include "siggb/criteria.hpp"
#include "siggb/sigcore.hpp"
#include "siggb/stats.hpp"

namespace siggb {

/// Witness sets consulted by the non-minimal signature criterion.
enum class NmMode {
  PsyzOnly,             // principal syzygies of the current index
  PsyzPlusCurrentZero,  // + signatures of this step's zero reductions
  PsyzPlusPriorS,       // PsyzOnly + cross-step sets on lower-index generators
  PsyzPlusAllS,         // PsyzPlusCurrentZero + cross-step sets
};

enum class RwMode { F5Rules, GgvDedup };

struct VariantConfig {
  NmMode nm_mode = NmMode::PsyzOnly;
  RwMode rw_mode = RwMode::F5Rules;

  bool uses_zero_signatures() const noexcept {
    return nm_mode == NmMode::PsyzPlusCurrentZero || nm_mode == NmMode::PsyzPlusAllS;
  }
  bool uses_cross_step_sets() const noexcept {
    return nm_mode == NmMode::PsyzPlusPriorS || nm_mode == NmMode::PsyzPlusAllS;
  }

  friend bool operator==(const VariantConfig&, const VariantConfig&) = default;
};

enum class Variant { Ggv, GgvI, F5C, F5CI, F5A, F5AI };

VariantConfig config_for(Variant v) noexcept;
std::string_view variant_name(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;
std::span<const Variant> all_variants() noexcept;

/// The three NM witness families evaluated on the same engine state.
struct NmVerdicts {
  bool basic = false;         // principal syzygies
  bool improved = false;      // + current zero reductions
  bool strengthened = false;  // + cross-step sets on lower-index generators
};

/// Hooks for tracing a computation. All callbacks default to no-ops.
class EngineObserver {
 public:
  virtual ~EngineObserver() = default;
  // B_{step} in engine order (element k gets label e_{k+1} next step).
  virtual void on_interreduced(std::size_t /*step*/, std::span<const Polynomial> /*basis*/) {}
  // Generator `step` after reduction by the previous basis; zero means skipped.
  virtual void on_generator_reduced(std::size_t /*step*/, const Polynomial& /*reduced*/) {}
  virtual void on_s_set(std::uint32_t /*index*/, std::span<const Monomial> /*monos*/) {}
  virtual void on_pair_created(const CriticalPair& /*pair*/, const NmVerdicts& /*nm*/) {}
  virtual void on_pair_popped(const CriticalPair& /*pair*/) {}
  virtual void on_zero_reduction(const Signature& /*sig*/) {}
  virtual void on_new_element(const LabeledPoly& /*elem*/) {}
  virtual void on_step_finished(std::size_t /*step*/, std::span<const LabeledPoly> /*basis*/) {}
};

struct EngineOptions {
  std::uint64_t pair_limit = 0;  // 0: unlimited
  EngineObserver* observer = nullptr;
};

class PairLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SigGbResult {
  PolyBasis basis;
  Stats stats;
};

/// Incremental signature-based Groebner basis computation. One instance runs
/// one computation on one thread.
class SigGbEngine {
 public:
  SigGbEngine(PrimeField field, VariantConfig cfg, EngineOptions options = {});

  // Throws std::invalid_argument on an empty generator list.
  SigGbResult run(std::span<const Polynomial> generators);

  // One incremental step. `prev` is B_{i} in engine order (labels e_1..e_l),
  // `f_new` nonzero and reduced against it. Returns G_{i+1}.
  std::vector<LabeledPoly> inc_sig(const Polynomial& f_new, std::span<const Polynomial> prev);

  // Registers S built from `basis` (engine order) under index |basis|.
  void record_s_set(std::span<const Polynomial> basis);

  const Stats& stats() const noexcept { return stats_; }
  const SyzygySigSet& cross_step_sets() const noexcept { return recorded_; }
  const std::set<std::uint32_t>& recorded_indices() const noexcept { return recorded_indices_; }

 private:
  struct QueuedPair {
    CriticalPair pair;
    std::uint64_t seq;
  };
  struct QueueOrder {
    bool operator()(const QueuedPair& a, const QueuedPair& b) const;
  };

  void add_pairs_for(std::size_t n);
  NmVerdicts nm_verdicts(const CriticalPair& pair) const;
  bool nm_side(const Monomial& u, std::size_t idx, const SyzygySigSet* prior, bool with_zero) const;
  bool rw_rejects(const CriticalPair& pair) const;
  std::vector<Polynomial> engine_order(const std::vector<LabeledPoly>& g) const;

  PrimeField field_;
  VariantConfig cfg_;
  EngineOptions options_;
  Stats stats_;

  // per-step state
  std::uint32_t current_index_ = 0;
  std::vector<LabeledPoly> basis_;
  std::vector<std::optional<std::size_t>> rule_pos_;
  std::vector<QueuedPair> queue_;
  std::uint64_t seq_ = 0;
  SyzygySigSet psyz_;
  SyzygySigSet zero_sigs_;
  SyzygySigSet prior_;
  RuleList rules_;
  GgvSignatureFilter enqueued_;

  // S-set of the latest interreduction, indexed by the basis size
  SyzygySigSet recorded_;
  std::set<std::uint32_t> recorded_indices_;
};

SigGbResult sig_gb(std::span<const Polynomial> generators, const PrimeField& field,
                   VariantConfig cfg, const EngineOptions& options = {});

}  // namespace siggb
