#include "siggb/parser.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

#include "siggb/errors.hpp"

namespace siggb {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRing& ring, std::size_t line)
      : text_(text), ring_(ring), field_(ring.field()), line_(line) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      if (at_end()) fail("dangling operator");
      Term t = parse_term();
      if (negative) t.coeff = field_.neg(t.coeff);
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return Polynomial::from_terms(std::move(terms), field_);
  }

 private:
  Term parse_term() {
    Coeff c = 1;
    Monomial m = ring_.one();
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::uint64_t v = parse_uint();
        c = field_.mul(c, field_.from_int(static_cast<std::int64_t>(v % field_.characteristic())));
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        auto idx = ring_.variable_index(name);
        if (!idx) fail("unknown variable '" + std::string(name) + "'", start);
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          std::uint64_t v = parse_uint();
          if (v == 0 || v > std::numeric_limits<Monomial::Exponent>::max()) {
            fail("exponent must be a positive integer below 65536");
          }
          e = static_cast<unsigned>(v);
        }
        m = m * ring_.var(*idx, e);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      // coefficient directly followed by a variable, e.g. "3x"
      expect_factor = !at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_');
    }
    return Term{c, m};
  }

  std::uint64_t parse_uint() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) fail("integer too large", start);
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, line_, at + 1);
  }

  std::string_view text_;
  const PolyRing& ring_;
  const PrimeField& field_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view header_value(std::string_view line, std::string_view key, std::size_t lineno) {
  std::string_view t = trim(line);
  if (!t.starts_with(key) || trim(t.substr(key.size())).substr(0, 1) != ":") {
    throw ParseError("expected '" + std::string(key) + ":' header", lineno, 1);
  }
  t = trim(t.substr(key.size()));
  return trim(t.substr(1));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring, std::size_t line) {
  return PolyParser(text, ring, line).parse();
}

ParsedSystem parse_system(std::string_view text, std::string name,
                          std::optional<std::uint32_t> characteristic) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (lines.size() < 2) throw ParseError("expected 'vars:' and 'char:' header lines", lines.size(), 1);

  std::vector<std::string> names;
  std::string_view vars = header_value(lines[0], "vars", 1);
  for (std::size_t start = 0; start <= vars.size();) {
    std::size_t end = vars.find(',', start);
    if (end == std::string_view::npos) end = vars.size();
    std::string_view v = trim(vars.substr(start, end - start));
    bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
    for (char ch : v) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw ParseError("invalid variable name '" + std::string(v) + "'", 1, 1);
    names.emplace_back(v);
    start = end + 1;
  }

  std::string_view ch = header_value(lines[1], "char", 2);
  std::uint64_t p = 0;
  if (ch.empty()) throw ParseError("missing characteristic", 2, 1);
  for (char c : ch) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || p > (1ull << 32)) {
      throw ParseError("characteristic must be a prime below 2^31", 2, 1);
    }
    p = p * 10 + static_cast<unsigned>(c - '0');
  }
  if (p >= (1ull << 31) || !is_prime(p) || p < 3) {
    throw ParseError("characteristic must be an odd prime below 2^31", 2, 1);
  }

  if (characteristic) p = *characteristic;
  PolyRing ring = [&] {
    try {
      return PolyRing(names, PrimeField(static_cast<std::uint32_t>(p)));
    } catch (const ContextError& e) {
      throw ParseError(e.what(), 1, 1);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 2, 1);
    }
  }();

  ParsedSystem out{SystemSpec{std::move(name), ring, {}, false}, {}};
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    Polynomial f = parse_polynomial(lines[i], ring, i + 1);
    if (f.is_zero()) out.warnings.push_back("line " + std::to_string(i + 1) + ": polynomial is zero");
    out.spec.generators.push_back(std::move(f));
  }
  if (out.spec.generators.empty()) throw ParseError("no polynomials given", lines.size(), 1);
  return out;
}

std::string format_system(const SystemSpec& spec) {
  std::string out = "vars: ";
  const auto& names = spec.ring.variable_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  out += "\nchar: " + std::to_string(spec.ring.field().characteristic()) + "\n";
  for (const Polynomial& f : spec.generators) out += spec.ring.format(f) + "\n";
  return out;
}

}  // namespace siggb
