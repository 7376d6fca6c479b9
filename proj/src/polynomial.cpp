#include "siggb/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "siggb/errors.hpp"

namespace siggb {

Polynomial Polynomial::from_terms(std::vector<Term> terms, const PrimeField& field) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return cmp_degrevlex(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    t.coeff %= field.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial Polynomial::from_canonical(std::vector<Term> terms) {
  return Polynomial(std::move(terms));
}

bool Polynomial::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

std::uint32_t Polynomial::max_degree() const noexcept {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial sub_mul_term(const Polynomial& p, Coeff c, const Monomial& m, const Polynomial& q,
                        const PrimeField& field) {
  if (c == 0 || q.is_zero()) return p;
  const auto pt = p.terms();
  const auto qt = q.terms();
  std::vector<Term> out;
  out.reserve(pt.size() + qt.size());
  const Coeff neg_c = field.neg(c);
  std::size_t i = 0, j = 0;
  while (i < pt.size() && j < qt.size()) {
    Monomial qm = m * qt[j].mono;
    auto ord = cmp_degrevlex(pt[i].mono, qm);
    if (ord > 0) {
      out.push_back(pt[i++]);
    } else if (ord < 0) {
      out.push_back(Term{field.mul(neg_c, qt[j].coeff), qm});
      ++j;
    } else {
      Coeff s = field.add(pt[i].coeff, field.mul(neg_c, qt[j].coeff));
      if (s != 0) out.push_back(Term{s, pt[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < pt.size(); ++i) out.push_back(pt[i]);
  for (; j < qt.size(); ++j) out.push_back(Term{field.mul(neg_c, qt[j].coeff), m * qt[j].mono});
  return Polynomial::from_canonical(std::move(out));
}

Polynomial add(const Polynomial& p, const Polynomial& q, const PrimeField& field) {
  if (q.is_zero()) return p;
  return sub_mul_term(p, field.neg(1), Monomial(q.lm().num_vars()), q, field);
}

Polynomial sub(const Polynomial& p, const Polynomial& q, const PrimeField& field) {
  if (q.is_zero()) return p;
  return sub_mul_term(p, 1, Monomial(q.lm().num_vars()), q, field);
}

Polynomial negate(const Polynomial& p, const PrimeField& field) {
  return scale(p, field.neg(1), field);
}

Polynomial scale(const Polynomial& p, Coeff c, const PrimeField& field) {
  c %= field.characteristic();
  if (c == 0) return {};
  std::vector<Term> out(p.terms().begin(), p.terms().end());
  for (Term& t : out) t.coeff = field.mul(t.coeff, c);
  return Polynomial::from_canonical(std::move(out));
}

Polynomial mul_term(const Polynomial& p, const Term& t, const PrimeField& field) {
  const Coeff c = t.coeff % field.characteristic();
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(p.size());
  // multiplication by a monomial preserves the order
  for (const Term& s : p.terms()) out.push_back(Term{field.mul(s.coeff, c), s.mono * t.mono});
  return Polynomial::from_canonical(std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q, const PrimeField& field) {
  Polynomial acc;
  for (const Term& t : q.terms()) acc = add(acc, mul_term(p, t, field), field);
  return acc;
}

Polynomial make_monic(const Polynomial& p, const PrimeField& field) {
  if (p.is_zero() || p.lc() == 1) return p;
  return scale(p, field.inv(p.lc()), field);
}

PolyRing::PolyRing(std::vector<std::string> variable_names, PrimeField field)
    : names_(std::move(variable_names)), field_(field) {
  if (names_.empty()) throw ContextError("ring needs at least one variable");
  if (names_.size() > Monomial::kMaxVars) {
    throw ContextError("at most " + std::to_string(Monomial::kMaxVars) + " variables supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw ContextError("duplicate variable name " + names_[i]);
    }
  }
}

namespace {
std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}
}  // namespace

PolyRing::PolyRing(std::size_t num_vars, PrimeField field)
    : PolyRing(default_names(num_vars), field) {}

std::optional<std::size_t> PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Monomial PolyRing::var(std::size_t i, unsigned exponent) const {
  return one().with_exponent(i, exponent);
}

Polynomial PolyRing::constant(std::int64_t c) const {
  return Polynomial::from_terms({Term{field_.from_int(c), one()}}, field_);
}

std::string PolyRing::format(const Monomial& m) const {
  if (m.num_vars() != num_vars()) throw ContextError("monomial from a different ring");
  std::string s;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names_[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::format(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : p.terms()) {
    std::int64_t c = field_.to_signed(t.coeff);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (t.mono.is_one()) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << format(t.mono);
    }
    first = false;
  }
  return os.str();
}

}  // namespace siggb
