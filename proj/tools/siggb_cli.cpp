// siggb: run the signature-based Groebner basis variants on a benchmark system.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "siggb/bench.hpp"
#include "siggb/errors.hpp"
#include "siggb/parser.hpp"
#include "siggb/systems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

siggb::RandomSystemParams parse_random(const std::string& arg) {
  siggb::RandomSystemParams params;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value in '" + item + "'");
    std::string key = item.substr(0, eq);
    std::uint64_t value = std::stoull(item.substr(eq + 1));
    if (key == "n") {
      params.num_vars = static_cast<unsigned>(value);
    } else if (key == "deg") {
      params.max_degree = static_cast<unsigned>(value);
    } else if (key == "count") {
      params.count = static_cast<unsigned>(value);
    } else if (key == "seed") {
      params.seed = value;
    } else {
      throw std::invalid_argument("unknown random-system key '" + key + "'");
    }
  }
  return params;
}

siggb::SystemSpec load_system(const std::string& system, const std::string& random,
                              std::optional<std::uint32_t> characteristic) {
  siggb::PrimeField field(characteristic.value_or(siggb::PrimeField::kDefaultCharacteristic));
  if (!random.empty()) return siggb::random_system(parse_random(random), field);
  if (system.starts_with("file:")) {
    std::string path = system.substr(5);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    siggb::ParsedSystem parsed = siggb::parse_system(buf.str(), path, characteristic);
    for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
    return parsed.spec;
  }
  return siggb::named_system(system, field);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental signature-based Groebner bases (GGV, F5C, F5A and -i variants)"};
  std::string system;
  std::string variant = "all";
  std::string output = "text";
  std::string random;
  bool homog = false;
  bool verify = false;
  bool parallel = false;
  std::optional<std::uint32_t> characteristic;
  std::uint64_t pair_limit = 0;

  auto* sys_opt = app.add_option("--system", system, "cyclic-N | katsura-N | eco-N | file:PATH");
  app.add_flag("--homogenize", homog, "homogenize the input system");
  app.add_option("--char", characteristic, "prime field characteristic (default 32003)");
  app.add_option("--variant", variant, "ggv | ggv-i | f5c | f5c-i | f5a | f5a-i | all")
      ->check(CLI::IsMember({"ggv", "ggv-i", "f5c", "f5c-i", "f5a", "f5a-i", "all"}));
  app.add_flag("--verify", verify, "compare every result with the Buchberger oracle");
  app.add_option("--output", output, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--pair-limit", pair_limit, "abort a run after this many pairs (0: no limit)");
  auto* rnd_opt = app.add_option("--seed-random", random, "random system n=N,deg=D,count=C,seed=S");
  app.add_flag("--parallel", parallel, "run variants on separate threads");
  sys_opt->excludes(rnd_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }
  if (system.empty() && random.empty()) {
    std::cerr << "error: one of --system or --seed-random is required\n";
    return kExitInputError;
  }

  siggb::SystemSpec spec{"", siggb::PolyRing(1, siggb::PrimeField{}), {}, false};
  try {
    spec = load_system(system, random, characteristic);
    if (homog && !spec.homogenized) spec = siggb::homogenize(spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  std::vector<siggb::Variant> variants;
  if (variant == "all") {
    variants.assign(siggb::all_variants().begin(), siggb::all_variants().end());
  } else {
    variants.push_back(*siggb::parse_variant(variant));
  }

  siggb::BenchOptions options{verify, pair_limit, parallel};
  std::vector<siggb::BenchReport> reports = siggb::run_bench(spec, variants, options);

  if (output == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(siggb::to_json(r));
    std::cout << arr.dump(2) << '\n';
  } else if (output == "csv") {
    std::cout << siggb::to_csv(reports);
  } else {
    std::cout << siggb::to_text(reports);
  }

  for (const auto& r : reports) {
    if (r.verified && !*r.verified) return kExitVerifyFailed;
  }
  return kExitOk;
}
