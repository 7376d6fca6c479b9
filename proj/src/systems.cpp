#include "siggb/systems.hpp"

#include <charconv>
#include <random>
#include <stdexcept>

namespace siggb {

namespace {

void require_size(unsigned n, const char* family) {
  if (n < 2) throw std::invalid_argument(std::string(family) + " needs n >= 2");
}

Term monomial_term(const PolyRing& ring, std::initializer_list<std::size_t> vars, Coeff c = 1) {
  Monomial m = ring.one();
  for (std::size_t v : vars) m = m * ring.var(v);
  return Term{c, m};
}

}  // namespace

SystemSpec gen_cyclic(unsigned n, PrimeField field) {
  require_size(n, "cyclic");
  PolyRing ring(n, field);
  std::vector<Polynomial> gens;
  for (unsigned k = 1; k < n; ++k) {
    std::vector<Term> terms;
    for (unsigned i = 0; i < n; ++i) {
      Monomial m = ring.one();
      for (unsigned j = 0; j < k; ++j) m = m * ring.var((i + j) % n);
      terms.push_back(Term{1, m});
    }
    gens.push_back(Polynomial::from_terms(std::move(terms), field));
  }
  Monomial all = ring.one();
  for (unsigned i = 0; i < n; ++i) all = all * ring.var(i);
  gens.push_back(Polynomial::from_terms({Term{1, all}, Term{field.neg(1), ring.one()}}, field));
  return SystemSpec{"cyclic-" + std::to_string(n), std::move(ring), std::move(gens), false};
}

SystemSpec gen_katsura(unsigned n, PrimeField field) {
  require_size(n, "katsura");
  std::vector<std::string> names;
  for (unsigned i = 0; i <= n; ++i) names.push_back("u" + std::to_string(i));
  PolyRing ring(std::move(names), field);
  const int N = static_cast<int>(n);
  // u_{-l} = u_l, zero outside [-n, n]
  auto var_of = [&](int l) -> std::optional<std::size_t> {
    int a = l < 0 ? -l : l;
    if (a > N) return std::nullopt;
    return static_cast<std::size_t>(a);
  };
  std::vector<Polynomial> gens;
  for (int m = 0; m < N; ++m) {
    std::vector<Term> terms;
    for (int l = -N; l <= N; ++l) {
      auto a = var_of(l);
      auto b = var_of(m - l);
      if (a && b) terms.push_back(monomial_term(ring, {*a, *b}));
    }
    terms.push_back(Term{field.neg(1), ring.var(static_cast<std::size_t>(m))});
    gens.push_back(Polynomial::from_terms(std::move(terms), field));
  }
  std::vector<Term> sum;
  for (int l = -N; l <= N; ++l) sum.push_back(Term{1, ring.var(*var_of(l))});
  sum.push_back(Term{field.neg(1), ring.one()});
  gens.push_back(Polynomial::from_terms(std::move(sum), field));
  return SystemSpec{"katsura-" + std::to_string(n), std::move(ring), std::move(gens), false};
}

SystemSpec gen_eco(unsigned n, PrimeField field) {
  require_size(n, "eco");
  PolyRing ring(n, field);
  const std::size_t last = n - 1;
  std::vector<Polynomial> gens;
  for (unsigned k = 1; k < n; ++k) {
    // (x_k + sum_{i=1}^{n-k-1} x_i x_{i+k}) x_n - k, with 1-based names
    std::vector<Term> terms{monomial_term(ring, {k - 1, last})};
    for (unsigned i = 1; i + k + 1 <= n; ++i) {
      terms.push_back(monomial_term(ring, {i - 1, i + k - 1, last}));
    }
    terms.push_back(Term{field.from_int(-static_cast<std::int64_t>(k)), ring.one()});
    gens.push_back(Polynomial::from_terms(std::move(terms), field));
  }
  std::vector<Term> sum;
  for (unsigned i = 0; i + 1 < n; ++i) sum.push_back(Term{1, ring.var(i)});
  sum.push_back(Term{1, ring.one()});
  gens.push_back(Polynomial::from_terms(std::move(sum), field));
  return SystemSpec{"eco-" + std::to_string(n), std::move(ring), std::move(gens), false};
}

SystemSpec homogenize(const SystemSpec& spec) {
  std::vector<std::string> names = spec.ring.variable_names();
  std::string h = "h";
  while (spec.ring.variable_index(h)) h += '_';
  names.push_back(h);
  PolyRing ring(std::move(names), spec.ring.field());
  std::vector<Polynomial> gens;
  for (const Polynomial& f : spec.generators) {
    const std::uint32_t top = f.max_degree();
    std::vector<Term> terms;
    for (const Term& t : f.terms()) terms.push_back(Term{t.coeff, t.mono.extended(top - t.mono.degree())});
    gens.push_back(Polynomial::from_terms(std::move(terms), ring.field()));
  }
  return SystemSpec{spec.name + "-h", std::move(ring), std::move(gens), true};
}

SystemSpec dehomogenize(const SystemSpec& spec) {
  std::vector<std::string> names = spec.ring.variable_names();
  names.pop_back();
  PolyRing ring(names, spec.ring.field());
  std::vector<Polynomial> gens;
  for (const Polynomial& f : spec.generators) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      std::vector<unsigned> e;
      for (std::size_t v = 0; v < names.size(); ++v) e.push_back(t.mono[v]);
      terms.push_back(Term{t.coeff, Monomial(std::span<const unsigned>(e))});
    }
    gens.push_back(Polynomial::from_terms(std::move(terms), ring.field()));
  }
  std::string name = spec.name;
  if (name.size() > 2 && name.ends_with("-h")) name.resize(name.size() - 2);
  return SystemSpec{std::move(name), std::move(ring), std::move(gens), false};
}

SystemSpec random_system(const RandomSystemParams& params, PrimeField field) {
  if (params.num_vars == 0 || params.count == 0) throw std::invalid_argument("empty random system");
  PolyRing ring(params.num_vars, field);
  std::mt19937_64 rng(params.seed);
  auto below = [&](std::uint64_t bound) { return rng() % bound; };
  std::vector<Polynomial> gens;
  while (gens.size() < params.count) {
    const std::uint64_t num_terms = 2 + below(4);
    std::vector<Term> terms;
    for (std::uint64_t t = 0; t < num_terms; ++t) {
      const auto degree = static_cast<unsigned>(below(params.max_degree + 1));
      std::vector<unsigned> e(params.num_vars, 0);
      for (unsigned d = 0; d < degree; ++d) ++e[below(params.num_vars)];
      terms.push_back(Term{static_cast<Coeff>(1 + below(field.characteristic() - 1)),
                           Monomial(std::span<const unsigned>(e))});
    }
    Polynomial f = Polynomial::from_terms(std::move(terms), field);
    if (f.is_zero() || f.lm().is_one()) continue;
    gens.push_back(std::move(f));
  }
  std::string name = "random-n" + std::to_string(params.num_vars) + "-d" +
                     std::to_string(params.max_degree) + "-c" + std::to_string(params.count) +
                     "-s" + std::to_string(params.seed);
  return SystemSpec{std::move(name), std::move(ring), std::move(gens), false};
}

SystemSpec named_system(std::string_view name, PrimeField field) {
  bool homog = false;
  if (name.ends_with("-h")) {
    homog = true;
    name.remove_suffix(2);
  }
  auto dash = name.rfind('-');
  if (dash == std::string_view::npos) throw std::invalid_argument("unknown system: " + std::string(name));
  std::string_view family = name.substr(0, dash);
  std::string_view num = name.substr(dash + 1);
  unsigned n = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  if (ec != std::errc{} || ptr != num.data() + num.size()) {
    throw std::invalid_argument("bad system size in " + std::string(name));
  }
  SystemSpec spec = family == "cyclic"  ? gen_cyclic(n, field)
                    : family == "katsura" ? gen_katsura(n, field)
                    : family == "eco"     ? gen_eco(n, field)
                                          : throw std::invalid_argument("unknown system family: " +
                                                                        std::string(family));
  return homog ? homogenize(spec) : spec;
}

}  // namespace siggb
