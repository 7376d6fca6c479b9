#include "siggb/bench.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>

namespace siggb {

namespace {

double to_ms(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

BenchReport run_one(const SystemSpec& spec, Variant v, const BenchOptions& options,
                    const PolyBasis* oracle) {
  BenchReport r;
  r.system = spec.name;
  r.variant = std::string(variant_name(v));
  r.characteristic = spec.ring.field().characteristic();
  EngineOptions eo;
  eo.pair_limit = options.pair_limit;
  SigGbEngine engine(spec.ring.field(), config_for(v), eo);
  try {
    SigGbResult res = engine.run(spec.generators);
    r.stats = res.stats;
    r.basis_size = res.basis.size();
    if (oracle) r.verified = same_basis(res.basis, *oracle);
  } catch (const PairLimitExceeded&) {
    r.stats = engine.stats();
    r.aborted = true;
    if (oracle) r.verified = false;
  }
  return r;
}

}  // namespace

bool same_basis(const PolyBasis& a, const PolyBasis& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.elems.begin(), a.elems.end(), [&](const Polynomial& p) {
    return std::find(b.elems.begin(), b.elems.end(), p) != b.elems.end();
  });
}

std::vector<BenchReport> run_bench(const SystemSpec& spec, const std::vector<Variant>& variants,
                                   const BenchOptions& options) {
  std::vector<BenchReport> reports;
  if (variants.empty()) return reports;
  std::optional<PolyBasis> oracle;
  if (options.verify) oracle = buchberger(spec.generators, spec.ring.field());
  const PolyBasis* oracle_ptr = oracle ? &*oracle : nullptr;

  if (options.parallel) {
    std::vector<std::future<BenchReport>> jobs;
    for (Variant v : variants) {
      jobs.push_back(std::async(std::launch::async, [&, v] {
        return run_one(spec, v, options, oracle_ptr);
      }));
    }
    for (auto& j : jobs) reports.push_back(j.get());
  } else {
    for (Variant v : variants) reports.push_back(run_one(spec, v, options, oracle_ptr));
  }
  std::sort(reports.begin(), reports.end(),
            [](const BenchReport& a, const BenchReport& b) { return a.variant < b.variant; });
  return reports;
}

nlohmann::json stat_report(const Stats& s) {
  return nlohmann::json{{"reduction_steps", s.reduction_steps},
                        {"zero_reductions", s.zero_reductions},
                        {"pairs_generated", s.pairs_generated},
                        {"rejected_nm", s.rejected_nm},
                        {"rejected_rw", s.rejected_rw},
                        {"basis_size", s.basis_size_final},
                        {"elapsed_ms", to_ms(s.elapsed)}};
}

nlohmann::json to_json(const BenchReport& r) {
  nlohmann::json j = stat_report(r.stats);
  j["system"] = r.system;
  j["variant"] = r.variant;
  j["char"] = r.characteristic;
  j["basis_size"] = r.basis_size;
  j["verified"] = r.verified ? nlohmann::json(*r.verified) : nlohmann::json(nullptr);
  j["aborted"] = r.aborted;
  return j;
}

std::string to_csv(const std::vector<BenchReport>& reports) {
  std::ostringstream os;
  os << "system,variant,char,reduction_steps,zero_reductions,pairs_generated,rejected_nm,"
        "rejected_rw,basis_size,elapsed_ms,verified\n";
  for (const BenchReport& r : reports) {
    os << r.system << ',' << r.variant << ',' << r.characteristic << ',' << r.stats.reduction_steps
       << ',' << r.stats.zero_reductions << ',' << r.stats.pairs_generated << ','
       << r.stats.rejected_nm << ',' << r.stats.rejected_rw << ',' << r.basis_size << ','
       << std::fixed << std::setprecision(3) << to_ms(r.stats.elapsed) << ','
       << (r.aborted ? "aborted" : r.verified ? (*r.verified ? "true" : "false") : "") << '\n';
  }
  return os.str();
}

std::string to_text(const std::vector<BenchReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "system" << std::setw(8) << "variant" << std::right
     << std::setw(14) << "red. steps" << std::setw(8) << "zero" << std::setw(10) << "pairs"
     << std::setw(10) << "rej NM" << std::setw(10) << "rej RW" << std::setw(7) << "|G|"
     << std::setw(12) << "time [ms]" << "  verified\n";
  for (const BenchReport& r : reports) {
    os << std::left << std::setw(16) << r.system << std::setw(8) << r.variant << std::right
       << std::setw(14) << r.stats.reduction_steps << std::setw(8) << r.stats.zero_reductions
       << std::setw(10) << r.stats.pairs_generated << std::setw(10) << r.stats.rejected_nm
       << std::setw(10) << r.stats.rejected_rw << std::setw(7) << r.basis_size << std::setw(12)
       << std::fixed << std::setprecision(3) << to_ms(r.stats.elapsed) << "  "
       << (r.aborted ? "aborted" : r.verified ? (*r.verified ? "yes" : "NO") : "-") << '\n';
  }
  return os.str();
}

}  // namespace siggb
