#include <algorithm>
#include <random>

#include "mestre.hpp"
#include "refvals.hpp"
#include "seeded_main.hpp"

using namespace ellrank;

static PolyQ tp(const char* s) { return parse_polyq(s, "x"); }

TEST_CASE("square split of a plain quartic") {
  PolyQ p = tp("x^2 - 1") * tp("x^2 - 4");
  auto sp = square_split(p);
  CHECK(sp.q == tp("x^2 - 5/2"));
  CHECK(sp.r == PolyQ(Rat(9, 4)));
  CHECK(sp.q * sp.q - sp.r == p);

  CHECK_THROWS_AS(square_split(tp("x^3 - 1")), math_error);
  CHECK_THROWS_AS(square_split(tp("2*x^2 - 1")), math_error);
}

TEST_CASE("obstruction vanishes for both published seeds") {
  CHECK(s_coefficient(ref::seed_nagao()) == Rat(0));
  CHECK(s_coefficient(ref::seed_mestre()) == Rat(0));
}

TEST_CASE("obstruction rejects repeated entries") {
  MestreSeed s{{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(1)}};
  CHECK_THROWS_AS(s_coefficient(s), math_error);
}

TEST_CASE("obstruction is symmetric in the seed entries") {
  std::mt19937_64 rng(prop_seed);
  std::array<Rat, 6> base{Rat(3), Rat(-7), Rat(12), Rat(1, 2), Rat(9), Rat(-2)};
  Rat s0 = s_coefficient({base});
  for (int trial = 0; trial < 10; ++trial) {
    auto perm = base;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(s_coefficient({perm}) == s0);
  }
}

TEST_CASE("sixth-entry search recovers both seeds") {
  auto nag = search_b6({Rat(148), Rat(116), Rat(104), Rat(57), Rat(25)});
  CHECK(nag == std::vector<Rat>{Rat(0), Rat(69)});
  auto mes = search_b6({Rat(-17), Rat(-16), Rat(10), Rat(11), Rat(14)});
  CHECK(mes == std::vector<Rat>{Rat(-20), Rat(17)});
}

TEST_CASE("derived scale reproduces the first published quartic") {
  FuncQ sc = derive_scale(ref::quartic_nagao(), ref::seed_nagao());
  CHECK(sc == ref::scale_nagao());
  QuarticCurve c = build_quartic(ref::seed_nagao(), sc);
  for (int i = 0; i <= 4; ++i) CHECK(c.a[i] == ref::quartic_nagao()[i]);
  CHECK(sc == default_scale());
}

TEST_CASE("published scale reproduces the second published quartic") {
  QuarticCurve c = build_quartic(ref::seed_mestre(), ref::scale_mestre());
  for (int i = 0; i <= 4; ++i) CHECK(c.a[i] == ref::quartic_mestre()[i]);
  CHECK(fmt(c.a[4], "t") == "429*t^2 + 213040");
  CHECK(derive_scale(ref::quartic_mestre(), ref::seed_mestre()) == ref::scale_mestre());
}

TEST_CASE("marked sections lie on the model") {
  QuarticCurve c = build_quartic(ref::seed_nagao(), ref::scale_nagao());
  CHECK(c.marked.size() == 24);
  for (const auto& P : c.marked) CHECK(c.contains(P));

  // the sixth seed entry is 0, so x = t carries the base section (t, zero_y)
  FuncQ t = FuncQ::x();
  bool found = false;
  for (const auto& P : c.marked)
    if (P.x == t && P.y == FuncQ(ref::zero_y())) found = true;
  CHECK(found);

  CHECK(c.contains({ref::extra_x(), ref::extra_y()}));

  QuarticCurve m = build_quartic(ref::seed_mestre(), ref::scale_mestre());
  CHECK(m.marked.size() == 24);
  for (const auto& P : m.marked) CHECK(m.contains(P));
}

TEST_CASE("build_quartic rejects bad input") {
  // arithmetic progressions happen to close the family; perturb the last entry
  CHECK(s_coefficient({{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)}}) == Rat(0));
  MestreSeed open{{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(7)}};
  CHECK(s_coefficient(open) == Rat(560));
  CHECK_THROWS_AS(build_quartic(open, default_scale()), math_error);
  CHECK_THROWS_AS(build_quartic(ref::seed_nagao(), FuncQ(2)), math_error);
  CHECK_THROWS_AS(build_quartic(ref::seed_nagao(), FuncQ(0)), math_error);
}

TEST_CASE("scale derivation rejects non-square and non-constant ratios") {
  auto target = ref::quartic_nagao();
  for (auto& f : target) f = f * FuncQ(2);
  CHECK_THROWS_AS(derive_scale(target, ref::seed_nagao()), math_error);
  target = ref::quartic_nagao();
  target[0] = target[0] * FuncQ(4);
  CHECK_THROWS_AS(derive_scale(target, ref::seed_nagao()), math_error);
}

TEST_CASE("polynomial square roots") {
  PolyQ f = tp("3*x + 1");
  CHECK(*poly_sqrt(f * f) == f);
  CHECK(*poly_sqrt(f * f * tp("x^2")) == f * tp("x"));
  CHECK(!poly_sqrt(tp("x^2 + 1")).has_value());
  CHECK(!poly_sqrt(tp("x^3")).has_value());
  CHECK(!poly_sqrt(tp("2*x^2")).has_value());
  CHECK(poly_sqrt(PolyQ())->zero());

  auto r = ratfunc_sqrt(ref::scale_mestre());
  REQUIRE(r.has_value());
  CHECK(*r == FuncQ(PolyQ(Rat(2, 9)), PolyQ::x()));
  CHECK(!ratfunc_sqrt(FuncQ(PolyQ(2), PolyQ::x())).has_value());
}

TEST_CASE("leading conics and published substitutions") {
  QuarticCurve cn = build_quartic(ref::seed_nagao(), ref::scale_nagao());
  auto [An, Bn] = leading_conic(cn);
  CHECK(An == Rat("330112972800"));
  CHECK(Bn == Rat(14017536));
  CHECK(conic_identity_holds(An, Bn, ref::conic_nagao()));

  QuarticCurve cm = build_quartic(ref::seed_mestre(), ref::scale_mestre());
  auto [Am, Bm] = leading_conic(cm);
  CHECK(Am == Rat(213040));
  CHECK(Bm == Rat(429));
  CHECK(conic_identity_holds(Am, Bm, ref::conic_mestre()));
}

TEST_CASE("chord parametrization through a rational base") {
  // (6, 478) lies on the second conic and recovers the published substitution
  // up to the sign of u
  auto cp = conic_parametrize(Rat(213040), Rat(429), Rat(6), Rat(478));
  CHECK(cp.t == ref::conic_mestre().t);
  CHECK(cp.u == -ref::conic_mestre().u);
  CHECK(conic_identity_holds(Rat(213040), Rat(429), cp));
  CHECK(cp.t.n.deg() <= 2);
  CHECK(cp.u.n.deg() <= 2);

  // a base on the first conic, found from the factorization 23550 = 2 * 11775
  Rat t0(11773, 2), u0(22046544);
  auto cq = conic_parametrize(Rat("330112972800"), Rat(14017536), t0, u0);
  CHECK(conic_identity_holds(Rat("330112972800"), Rat(14017536), cq));

  CHECK_THROWS_AS(conic_parametrize(Rat(1), Rat(1), Rat(1), Rat(1)), math_error);
}

TEST_CASE("reference strings survive a format round trip") {
  CHECK(fmt(FuncQ(ref::curve_A()), "u") ==
        "-432*u^4 - 4435200*u^3 + 38353513056*u^2 - 18899197014000*u - 340079781902569707");
  CHECK(parse_ratfunc_q("2/4 + t", "t") == parse_ratfunc_q("1/2 + t", "t"));
  CHECK(fmt(ref::q14_x(), "u") ==
        "12*u^2 + (129032 + 27432*sqrt(-3))*u + (-757109813 - 168316272*sqrt(-3))");
}
