#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyfac.hpp"
#include "polyio.hpp"

using namespace ellrank;

static PolyQ P(const std::string& s) { return parse_polyq(s, "x"); }

static PolyQ reassemble(const QFactorization& fz) {
  PolyQ out(fz.unit);
  for (auto& [f, m] : fz.factors)
    for (int i = 0; i < m; ++i) out *= f;
  return out;
}

TEST_CASE("integer factorization") {
  auto fz = factor_int(Int("963761198400"));  // 2^6 3^4 5^2 7 11 13 17 19
  Int back(1);
  for (auto& [p, e] : fz) back *= ipow(p, e);
  CHECK(back == Int("963761198400"));
  CHECK(fz.front().first == 2);
  CHECK(fz.front().second == 6);
  auto big = factor_int(Int("2305843009213693951") * 1000003);  // M61 * prime
  CHECK(big.size() == 2);
}

TEST_CASE("linear and quadratic factors") {
  auto fz = factor_poly(P("6*x^2 - 5*x + 1"));
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.unit == 6);
  CHECK(fz.factors[0].f == P("x - 1/2"));
  CHECK(fz.factors[1].f == P("x - 1/3"));
  CHECK(reassemble(fz) == P("6*x^2 - 5*x + 1"));
}

TEST_CASE("multiplicities survive") {
  PolyQ f = P("x - 1") * P("x - 1") * P("x - 1") * P("x^2 + x + 1") * P("x^2 + x + 1");
  auto fz = factor_poly(f);
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.factors[0].f == P("x - 1"));
  CHECK(fz.factors[0].mult == 3);
  CHECK(fz.factors[1].f == P("x^2 + x + 1"));
  CHECK(fz.factors[1].mult == 2);
}

TEST_CASE("irreducibles stay whole") {
  PolyQ f = P("x^8 + 1");
  auto fz = factor_poly(f);
  REQUIRE(fz.factors.size() == 1);
  CHECK(fz.factors[0].f == f);
  CHECK(fz.factors[0].mult == 1);
  // not irreducible, but the factors have no roots; a recombination exercise
  auto gz = factor_poly(P("x^8 + x^4 + x^2 + x + 1"));
  REQUIRE(gz.factors.size() == 2);
  CHECK(gz.factors[0].f == P("x^4 - x^3 + 1"));
  CHECK(gz.factors[1].f == P("x^4 + x^3 + x^2 + x + 1"));
}

TEST_CASE("mixed product with large coefficients") {
  PolyQ f = P("x^2 - 2") * P("x^2 - 3") * P("x^4 + 17") * P("12345678901234567*x - 1");
  auto fz = factor_poly(f);
  CHECK(fz.factors.size() == 4);
  CHECK(reassemble(fz) == f);
  for (auto& [g, m] : fz.factors) CHECK(m == 1);
}

TEST_CASE("cyclotomic-style products") {
  // x^12 - 1 = product of cyclotomic polynomials of degrees 1,1,2,2,2,4
  auto fz = factor_poly(P("x^12 - 1"));
  REQUIRE(fz.factors.size() == 6);
  int degsum = 0;
  for (auto& [g, m] : fz.factors) degsum += (int)g.deg();
  CHECK(degsum == 12);
  CHECK(fz.factors[0].f == P("x - 1"));
  CHECK(fz.factors[1].f == P("x + 1"));
  CHECK(fz.factors.back().f == P("x^4 - x^2 + 1"));
}

TEST_CASE("rational roots") {
  auto roots = rational_roots(P("x^3 - x") * P("3*x - 2"));
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].first == Rat(-1));
  CHECK(roots[1].first == Rat(0));
  CHECK(roots[2].first == ratio(Int(2), Int(3)));
  CHECK(roots[3].first == Rat(1));
  for (auto& [r, m] : roots) CHECK(m == 1);
  auto dbl = rational_roots(P("x - 5") * P("x - 5"));
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].second == 2);
  CHECK(rational_roots(P("x^2 + 1")).empty());
}

TEST_CASE("degenerate inputs") {
  auto fz = factor_poly(P("5"));
  CHECK(fz.unit == 5);
  CHECK(fz.factors.empty());
  auto fx = factor_poly(P("x"));
  REQUIRE(fx.factors.size() == 1);
  CHECK(fx.factors[0].f == P("x"));
}
