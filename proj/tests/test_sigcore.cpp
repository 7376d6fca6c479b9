#include <random>

#include "doctest.h"
#include "siggb/errors.hpp"
#include "siggb/sigcore.hpp"
#include "test_util.hpp"

using namespace siggb;
using testutil::P;

namespace {

struct ExampleLabels {
  testutil::ExampleSystem ex;
  PrimeField f;
  LabeledPoly f1{Signature{Monomial{0, 0, 0}, 1}, ex.p1};
  LabeledPoly f2{Signature{Monomial{0, 0, 0}, 2}, ex.p2};
  LabeledPoly f3{Signature{Monomial{0, 0, 1}, 2}, ex.p3};
};

Signature random_sig(std::mt19937_64& rng, std::size_t n) {
  return Signature{testutil::random_monomial(rng, n, 4), static_cast<std::uint32_t>(1 + rng() % 4)};
}

}  // namespace

TEST_CASE("signature order examples") {
  Monomial one{0, 0, 0}, z{0, 0, 1}, yz{0, 1, 1}, big{5, 5, 5};
  CHECK(sig_cmp({big, 1}, {one, 2}) < 0);
  CHECK(sig_cmp({z, 2}, {yz, 2}) < 0);
  CHECK(sig_cmp({yz, 2}, {yz, 2}) == 0);
  CHECK(sig_cmp({yz, 3}, {yz, 2}) > 0);
}

TEST_CASE("sig_mul examples") {
  Monomial y{0, 1, 0}, z{0, 0, 1}, x{1, 0, 0};
  CHECK(sig_mul(y, {z, 2}) == Signature{Monomial{0, 1, 1}, 2});
  CHECK(sig_mul(Monomial{0, 0, 0}, {z, 2}) == Signature{z, 2});
  CHECK(sig_mul(x, {x, 3}) == Signature{Monomial{2, 0, 0}, 3});
}

TEST_CASE("signature order properties") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 3000; ++iter) {
    Signature a = random_sig(rng, 3), b = random_sig(rng, 3), c = random_sig(rng, 3);
    Monomial u = testutil::random_monomial(rng, 3, 3);
    auto ab = sig_cmp(a, b);
    CHECK((ab == 0) == (a == b));
    CHECK((sig_cmp(b, a) < 0) == (ab > 0));
    if (ab < 0 && sig_cmp(b, c) < 0) CHECK(sig_cmp(a, c) < 0);
    if (a.index < b.index) CHECK(ab < 0);
    // multiplicative monotonicity
    if (ab < 0) CHECK(sig_cmp(sig_mul(u, a), sig_mul(u, b)) < 0);
  }
}

TEST_CASE("make_spair on the worked example") {
  ExampleLabels e;
  SPairResult r21 = make_spair(e.f2, e.f1, 1, 0);
  auto* p21 = std::get_if<CriticalPair>(&r21);
  REQUIRE(p21 != nullptr);
  CHECK(p21->sig == Signature{Monomial{0, 0, 1}, 2});
  CHECK(p21->f_idx == 1);
  CHECK(p21->u_f == Monomial{0, 0, 1});
  CHECK(p21->u_g == Monomial{1, 0, 0});
  CHECK(p21->lcm == Monomial{1, 1, 1});

  // argument order does not matter: f is the side realizing the signature
  SPairResult r31 = make_spair(e.f1, e.f3, 0, 2);
  auto* p31 = std::get_if<CriticalPair>(&r31);
  REQUIRE(p31 != nullptr);
  CHECK(p31->sig == Signature{Monomial{0, 1, 1}, 2});
  CHECK(p31->f_idx == 2);
  CHECK(p31->u_f == Monomial{0, 1, 0});
  CHECK(p31->u_g == Monomial{1, 0, 1});

  CHECK(std::holds_alternative<TrivialPair>(make_spair(e.f1, e.f1, 0, 0)));
  LabeledPoly zero{Signature{Monomial{0, 0, 0}, 3}, Polynomial{}};
  CHECK_THROWS_AS(make_spair(zero, e.f1, 3, 0), std::invalid_argument);
}

TEST_CASE("equal multiplied signatures are reported") {
  PolyRing r({"x", "y"}, PrimeField{});
  LabeledPoly a{Signature{Monomial{1, 0}, 1}, P(r, "x")};
  LabeledPoly b{Signature{Monomial{0, 1}, 1}, P(r, "y")};
  CHECK(std::holds_alternative<EqualSignature>(make_spair(a, b, 0, 1)));
}

TEST_CASE("spair_poly on the worked example") {
  ExampleLabels e;
  std::vector<LabeledPoly> g{e.f1, e.f2, e.f3};
  auto p21 = std::get<CriticalPair>(make_spair(e.f2, e.f1, 1, 0));
  CHECK(make_monic(spair_poly(p21, g, e.f), e.f) ==
        make_monic(P(e.ex.ring, "10668*x*z^2 + 21336*z - 2*x"), e.f));
  auto p31 = std::get<CriticalPair>(make_spair(e.f3, e.f1, 2, 0));
  CHECK(make_monic(spair_poly(p31, g, e.f), e.f) ==
        make_monic(P(e.ex.ring, "-6*x*y - 2*x*z + 2*y*z"), e.f));

  LabeledPoly twin{Signature{Monomial{0, 0, 0}, 3}, e.ex.p1};
  std::vector<LabeledPoly> g2{e.f1, twin};
  auto same = std::get<CriticalPair>(make_spair(twin, e.f1, 1, 0));
  CHECK(spair_poly(same, g2, e.f).is_zero());

  std::vector<LabeledPoly> shorter{e.f1};
  CHECK_THROWS_AS(spair_poly(p21, shorter, e.f), ContextError);
}

TEST_CASE("sig-safe reduction of the worked example pairs") {
  ExampleLabels e;
  SUBCASE("pair (f3, f1) vanishes after two steps") {
    std::vector<LabeledPoly> g{e.f1, e.f2, e.f3};
    auto pair = std::get<CriticalPair>(make_spair(e.f3, e.f1, 2, 0));
    Stats st;
    auto out = sig_safe_reduce({pair.sig, spair_poly(pair, g, e.f)}, g, e.f, st);
    CHECK_FALSE(out.has_value());
    CHECK(st.reduction_steps == 2);
  }
  SUBCASE("pair (f2, f1) is irreducible and yields f3") {
    std::vector<LabeledPoly> g{e.f1, e.f2};
    auto pair = std::get<CriticalPair>(make_spair(e.f2, e.f1, 1, 0));
    Stats st;
    auto out = sig_safe_reduce({pair.sig, spair_poly(pair, g, e.f)}, g, e.f, st);
    REQUIRE(out.has_value());
    CHECK(out->sig == Signature{Monomial{0, 0, 1}, 2});
    CHECK(out->poly == e.ex.p3);
    CHECK(st.reduction_steps == 0);
  }
  SUBCASE("no reducers") {
    Stats st;
    auto out = sig_safe_reduce({Signature{Monomial{0, 0, 0}, 1}, P(e.ex.ring, "3*x + 3")}, {},
                               e.f, st);
    REQUIRE(out.has_value());
    CHECK(out->poly == P(e.ex.ring, "x + 1"));
    CHECK(st.reduction_steps == 0);
    CHECK_FALSE(sig_safe_reduce({Signature{Monomial{0, 0, 0}, 1}, Polynomial{}}, {}, e.f, st));
  }
}

TEST_CASE("sig-safe reducer selection") {
  PrimeField f;
  PolyRing r({"x", "y"}, f);
  Monomial one{0, 0}, y{0, 1}, x{1, 0};
  Stats st;
  SUBCASE("a reducer of equal multiplied signature is not admissible") {
    std::vector<LabeledPoly> g{{Signature{one, 2}, P(r, "x + y")}};
    auto out = sig_safe_reduce({Signature{x, 2}, P(r, "x^2")}, g, f, st);
    REQUIRE(out.has_value());
    CHECK(out->poly == P(r, "x^2"));
  }
  SUBCASE("smallest multiplied signature wins") {
    std::vector<LabeledPoly> g{{Signature{y, 1}, P(r, "x + y")}, {Signature{one, 1}, P(r, "x + 1")}};
    auto out = sig_safe_reduce({Signature{one, 2}, P(r, "x")}, g, f, st);
    REQUIRE(out.has_value());
    CHECK(out->poly == r.constant(1));
  }
  SUBCASE("ties go to the earlier position") {
    std::vector<LabeledPoly> g{{Signature{one, 1}, P(r, "x + y")}, {Signature{one, 1}, P(r, "x + 1")}};
    auto out = sig_safe_reduce({Signature{one, 2}, P(r, "x")}, g, f, st);
    REQUIRE(out.has_value());
    CHECK(out->poly == P(r, "y"));
  }
  SUBCASE("tails are left alone") {
    std::vector<LabeledPoly> g{{Signature{one, 1}, P(r, "y")}};
    auto out = sig_safe_reduce({Signature{one, 2}, P(r, "x + y")}, g, f, st);
    REQUIRE(out.has_value());
    CHECK(out->poly == P(r, "x + y"));
  }
}

TEST_CASE("sig-safe reduction properties on random data") {
  PrimeField f(211);
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<LabeledPoly> g;
    for (int k = 0; k < 5; ++k) {
      Polynomial p = make_monic(testutil::random_poly(rng, 3, 2, 3, f), f);
      if (!p.is_zero()) g.push_back({random_sig(rng, 3), p});
    }
    Polynomial start = testutil::random_poly(rng, 3, 3, 5, f);
    if (start.is_zero()) continue;
    Signature s = random_sig(rng, 3);
    Stats st;
    auto out = sig_safe_reduce({s, start}, g, f, st);
    if (!out) continue;
    CHECK(out->sig == s);
    CHECK(out->poly.is_monic());
    CHECK(cmp_degrevlex(out->poly.lm(), start.lm()) <= 0);
    if (st.reduction_steps == 0) CHECK(out->poly == make_monic(start, f));
    // no admissible top reducer is left
    for (const LabeledPoly& h : g) {
      if (!divides(h.poly.lm(), out->poly.lm())) continue;
      Monomial t = divide_exact(out->poly.lm(), h.poly.lm());
      CHECK(sig_cmp(sig_mul(t, h.sig), s) >= 0);
    }
  }
}

TEST_CASE("s-polynomial leading monomial is below the lcm") {
  PrimeField f(211);
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<LabeledPoly> g;
    for (int k = 0; k < 2; ++k) {
      Polynomial p = make_monic(testutil::random_poly(rng, 3, 3, 4, f), f);
      if (p.is_zero()) p = P(testutil::xyz_ring(f), "x");
      g.push_back({random_sig(rng, 3), p});
    }
    SPairResult res = make_spair(g[0], g[1], 0, 1);
    auto* pair = std::get_if<CriticalPair>(&res);
    if (pair == nullptr) continue;
    CHECK(pair->u_f * g[pair->f_idx].poly.lm() == pair->lcm);
    CHECK(pair->u_g * g[pair->g_idx].poly.lm() == pair->lcm);
    CHECK(sig_cmp(pair->sig, sig_mul(pair->u_g, g[pair->g_idx].sig)) > 0);
    CHECK(pair->sig == sig_mul(pair->u_f, g[pair->f_idx].sig));
    Polynomial s = spair_poly(*pair, g, f);
    if (!s.is_zero()) CHECK(cmp_degrevlex(s.lm(), pair->lcm) < 0);
  }
}
