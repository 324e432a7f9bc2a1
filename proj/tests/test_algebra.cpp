#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linalg.hpp"
#include "polyio.hpp"
#include "polyq.hpp"
#include "quadext.hpp"
#include "ratfunc.hpp"

using namespace ellrank;

static PolyQ P(const std::string& s) { return parse_polyq(s, "x"); }

TEST_CASE("integer helpers") {
  CHECK(igcd(Int(12), Int(18)) == 6);
  CHECK(ipow(Int(3), 7) == 2187);
  CHECK(is_square(Int("1557504")));
  CHECK(*sqrt_int(Int("1557504")) == 1248);
  CHECK(!sqrt_int(Int(2)).has_value());
  CHECK(valuation(Int(48), Int(2)) == 4);
  CHECK(squarefree_kernel(Int(48)) == 3);
  CHECK(squarefree_kernel(Int(-12)) == -3);
}

TEST_CASE("rational helpers") {
  CHECK(rpow(ratio(Int(2), Int(3)), -2) == ratio(Int(9), Int(4)));
  CHECK(*sqrt_rat(ratio(Int(9), Int(4))) == ratio(Int(3), Int(2)));
  CHECK(!sqrt_rat(ratio(Int(-9), Int(4))).has_value());
  CHECK(valuation(ratio(Int(9), Int(8)), Int(2)) == -3);
  CHECK(round_to_multiple(ratio(Int(149), Int(100)), Int(4)) == ratio(Int(3), Int(2)));
  CHECK(round_to_multiple(ratio(Int(160), Int(100)), Int(4)) == ratio(Int(3), Int(2)));
  CHECK(round_to_multiple(ratio(Int(-149), Int(100)), Int(4)) == ratio(Int(-3), Int(2)));
}

TEST_CASE("polynomial arithmetic") {
  PolyQ a = P("x^2 - 1"), b = P("x + 1");
  CHECK(a.deg() == 2);
  CHECK((a * b) == P("x^3 + x^2 - x - 1"));
  PolyQ q, r;
  divrem(a, b, q, r);
  CHECK(q == P("x - 1"));
  CHECK(r.zero());
  CHECK(a.deriv() == P("2*x"));
  CHECK(a.eval(Rat(3)) == 8);
  CHECK(a.compose(P("x + 2")) == P("x^2 + 4*x + 3"));
  CHECK(P("x^3 + 2*x").reversed() == P("2*x^2 + 1"));
  CHECK(P("x^3 + 2*x").reversed(4) == P("2*x^3 + x"));
}

TEST_CASE("gcd over the rationals") {
  PolyQ a = P("x^4 - 1") * P("x^2 + 3*x + 1");
  PolyQ b = P("x^2 - 1") * P("x^2 + 3*x + 1");
  CHECK(gcd(a, b) == P("x^2 + 3*x + 1") * P("x^2 - 1"));
  CHECK(gcd(P("x^2 + 1"), P("x^2 - 1")) == PolyQ(1));
  // a case with large coefficients
  PolyQ big = P("123456789123456789*x^3 - 987654321*x + 1");
  CHECK(gcd(big * P("x - 7"), big * P("x + 5")) == monic(big));
}

TEST_CASE("resultant and discriminant") {
  CHECK(resultant(P("x^2 - 1"), P("x - 2")) == 3);
  CHECK(resultant(P("x - 2"), P("x^2 - 1")) == 3);
  CHECK(discriminant(P("x^2 + x + 1")) == -3);
  CHECK(discriminant(P("x^3 - x")) == 4);
  // res(f, g) = lc(f)^deg g * prod g(roots of f)
  CHECK(resultant(P("2*x^2 - 2"), P("x - 3")) == Rat(2) * Rat(2) * Rat(-4) / Rat(-1));
}

TEST_CASE("interpolation") {
  std::vector<std::pair<Rat, Rat>> pts;
  PolyQ f = P("7*x^3 - x/2 + 5");
  for (long x = 0; x < 4; ++x) pts.push_back({Rat(x), f.eval(Rat(x))});
  CHECK(lagrange(pts) == f);
}

TEST_CASE("squarefree decomposition") {
  PolyQ f = P("x - 1") * P("x - 1") * P("x + 2") * P("x^2 + 1") * P("x^2 + 1") * P("x^2 + 1");
  auto parts = squarefree_decomp(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].f == P("x + 2"));
  CHECK(parts[0].mult == 1);
  CHECK(parts[1].f == P("x - 1"));
  CHECK(parts[1].mult == 2);
  CHECK(parts[2].f == P("x^2 + 1"));
  CHECK(parts[2].mult == 3);
}

TEST_CASE("quadratic field arithmetic") {
  QuadExt w(Rat(0), Rat(1), Int(-3));  // sqrt(-3)
  CHECK(w * w == QuadExt(-3));
  QuadExt x = QuadExt(2) + w;
  CHECK(x.norm() == 7);
  CHECK((x / x) == QuadExt(1));
  CHECK(x * x.conj() == QuadExt(7));
  CHECK_THROWS(x + QuadExt(Rat(0), Rat(1), Int(5)));
}

TEST_CASE("square roots in quadratic fields") {
  QuadExt w(Rat(0), Rat(1), Int(-3));
  QuadExt x = QuadExt(2) + w;
  auto r = sqrt_same_field(x * x);
  REQUIRE(r.has_value());
  CHECK((*r == x || *r == -x));
  CHECK(!sqrt_same_field(w).has_value());
  auto s = sqrt_in_field(QuadExt(-12), Int(-3));
  REQUIRE(s.has_value());
  CHECK(*s == QuadExt(Rat(0), Rat(2), Int(-3)));
  CHECK(!sqrt_in_field(QuadExt(-12), Int(-5)).has_value());
  CHECK(*sqrt_in_field(QuadExt(Rat(9), Rat(0), Int(0)), Int(-3)) == QuadExt(3));
  auto t = sqrt_any(QuadExt(18));
  REQUIRE(t.has_value());
  CHECK(*t == QuadExt(Rat(0), Rat(3), Int(2)));
}

TEST_CASE("gcd over a quadratic field") {
  QuadExt w(Rat(0), Rat(1), Int(-3));
  PolyE x = PolyE::x();
  PolyE a = (x - PolyE(w)) * (x + PolyE(QuadExt(2)));
  PolyE b = (x - PolyE(w)) * (x - PolyE(QuadExt(5)));
  CHECK(gcd(a, b) == x - PolyE(w));
  // force the modular path with a common factor of degree 9
  PolyE common(1), pa(1), pb(1);
  for (long k = 1; k <= 9; ++k) common *= x - PolyE(QuadExt(Rat(k), Rat(1), Int(-3)));
  for (long k = 1; k <= 3; ++k) pa *= x - PolyE(QuadExt(Rat(-k), Rat(k), Int(-3)));
  for (long k = 4; k <= 6; ++k) pb *= x - PolyE(QuadExt(Rat(-k), Rat(k), Int(-3)));
  CHECK(gcd(common * pa, common * pb) == common);
}

TEST_CASE("rational functions") {
  using RF = RatFunc<Rat>;
  RF t = RF::x();
  RF f = (t * t - RF(1)) / (t - RF(1));
  CHECK(f.is_poly());
  CHECK(f == t + RF(1));
  RF g = RF(1) / (t - RF(2)) + RF(1) / (t + RF(2));
  CHECK(g == RF(Poly<Rat>(std::vector<Rat>{Rat(0), Rat(2)}),
               Poly<Rat>(std::vector<Rat>{Rat(-4), Rat(0), Rat(1)})));
  CHECK(g.map_degree() == 2);
  CHECK(g.compose(t + RF(1)).eval(Rat(2)) == g.eval(Rat(3)));
}

TEST_CASE("format and parse round trips") {
  for (const char* s : {"0", "x", "-x", "x^2 - 1", "14017536*x^2 + 330112972800",
                        "-3/2*x^3 + x - 5/2", "x^6 - 4*x^4 + 13/7"}) {
    CHECK(fmt(P(s), "x") == s);
  }
  QuadExt q = parse_quadext("129032 + 27432*sqrt(-3)");
  CHECK(q.a == 129032);
  CHECK(q.b == 27432);
  CHECK(q.D == -3);
  CHECK(fmt(q) == "129032 + 27432*sqrt(-3)");
  PolyE pe = parse_polye("(164592 + 404592*sqrt(-3))*u^2 - 15516067218048 + 7021689895536*sqrt(-3)", "u");
  CHECK(fmt(pe, "u") == "(164592 + 404592*sqrt(-3))*u^2 + (-15516067218048 + 7021689895536*sqrt(-3))");
  auto rf = parse_ratfunc_q("(x^2 + 1)/(x - 2)", "x");
  CHECK(fmt(rf, "x") == "(x^2 + 1)/(x - 2)");
  CHECK(fmt(parse_ratfunc_q("(2*x^2 + 2)/(2*x - 4)", "x"), "x") == "(x^2 + 1)/(x - 2)");
}

TEST_CASE("matrix rank and determinant") {
  Matrix<Rat> m = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(matrix_rank(m) == 1);
  Matrix<Rat> g = {{Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
  CHECK(matrix_rank(g) == 2);
  CHECK(matrix_det(g) == 3);
  Matrix<Rat> z = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  CHECK(matrix_det(z) == -1);
}
