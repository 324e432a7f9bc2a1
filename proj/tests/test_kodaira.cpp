#include "kodaira.hpp"
#include "polyio.hpp"
#include "refvals.hpp"
#include "seeded_main.hpp"

using namespace ellrank;

namespace {

WCurve<FuncQ> shortc(const char* A, const char* B) {
  return WCurve<FuncQ>::short_form(parse_ratfunc_q(A, "t"), parse_ratfunc_q(B, "t"));
}

WCurve<FuncQ> published_min() {
  return WCurve<FuncQ>::short_form(FuncQ(ref::curve_A()), FuncQ(ref::curve_B()));
}

Place at0() { return Place::finite(PolyQ::x()); }

const FibreType* find_entry(const FibreConfiguration& cfg, const Place& v) {
  for (const auto& e : cfg.entries)
    if (e.place == v) return &e.type;
  return nullptr;
}

FibreType ft(FibreSymbol s, int n = 0) {
  FibreType t;
  t.sym = s;
  t.n = n;
  return t;
}

}  // namespace

TEST_CASE("valuations at places of the function field") {
  PolyQ pi = parse_polyq("t^2 + 1", "t");
  CHECK(place_valuation(pi * pi * parse_polyq("t - 3", "t"), pi) == 2);
  CHECK(place_valuation(parse_polyq("t - 3", "t"), pi) == 0);

  Place inf = Place::at_infinity();
  CHECK(place_valuation(FuncQ::x(), inf) == -1);
  CHECK(place_valuation(FuncQ(1) / FuncQ::x(), inf) == 1);
  CHECK(place_valuation(FuncQ(7), inf) == 0);
}

TEST_CASE("reduction table covers every fibre symbol") {
  CHECK(type_from_valuations(0, 0).name() == "I0");
  CHECK(type_from_valuations(0, 5).name() == "I5");
  CHECK(type_from_valuations(1, 2).name() == "II");
  CHECK(type_from_valuations(1, 3).name() == "III");
  CHECK(type_from_valuations(2, 4).name() == "IV");
  CHECK(type_from_valuations(2, 6).name() == "I0*");
  CHECK(type_from_valuations(2, 9).name() == "I3*");
  CHECK(type_from_valuations(3, 8).name() == "IV*");
  CHECK(type_from_valuations(3, 9).name() == "III*");
  CHECK(type_from_valuations(4, 10).name() == "II*");
  CHECK_THROWS_WITH(type_from_valuations(4, 12), "model is not minimal at the place");
  CHECK_THROWS_WITH(type_from_valuations(1, 5), "valuations do not match a fibre type");

  CHECK(ft(FibreSymbol::I, 4).components() == 4);
  CHECK(ft(FibreSymbol::I, 4).euler() == 4);
  CHECK(ft(FibreSymbol::Istar, 3).components() == 8);
  CHECK(ft(FibreSymbol::Istar, 3).euler() == 9);
  CHECK(ft(FibreSymbol::IIstar).components() == 9);
  CHECK(ft(FibreSymbol::II).components() == 1);
  CHECK(!ft(FibreSymbol::I, 0).reducible());
}

TEST_CASE("local types of small models at the origin") {
  CHECK(local_type(shortc("0", "t"), at0()) == ft(FibreSymbol::II));
  CHECK(local_type(shortc("t", "0"), at0()) == ft(FibreSymbol::III));
  CHECK(local_type(shortc("0", "t^2"), at0()) == ft(FibreSymbol::IV));
  CHECK(local_type(shortc("t^2", "t^3"), at0()) == ft(FibreSymbol::Istar, 0));
  CHECK(local_type(shortc("-3*t^2", "2*t^3 + t^4"), at0()) == ft(FibreSymbol::Istar, 1));
  CHECK(local_type(shortc("t^3", "t^4"), at0()) == ft(FibreSymbol::IVstar));
  CHECK(local_type(shortc("t^3", "t^5"), at0()) == ft(FibreSymbol::IIIstar));
  CHECK(local_type(shortc("t^4", "t^5"), at0()) == ft(FibreSymbol::IIstar));
  CHECK(local_type(shortc("1", "t"), at0()) == ft(FibreSymbol::I, 0));

  CHECK_THROWS_WITH(local_type(shortc("t^4", "t^6"), at0()),
                    "model is not minimal at the place");
  CHECK_THROWS_WITH(local_type(shortc("1", "1"), Place::finite(parse_polyq("2*t", "t"))),
                    "place must be monic of positive degree");
}

TEST_CASE("multiplicative places carry the node splitting") {
  auto split = local_type(shortc("-27", "54 + t"), at0());
  CHECK(split == ft(FibreSymbol::I, 1));
  REQUIRE(split.split.has_value());
  CHECK(*split.split);

  auto nonsplit = local_type(shortc("-3", "2 + t"), at0());
  CHECK(nonsplit == ft(FibreSymbol::I, 1));
  REQUIRE(nonsplit.split.has_value());
  CHECK(!*nonsplit.split);

  auto two = local_type(shortc("-27", "54 + t^2"), at0());
  CHECK(two == ft(FibreSymbol::I, 2));
  CHECK(*two.split);
}

TEST_CASE("local types are stable under translation and unit rescaling") {
  WCurve<FuncQ> E = shortc("-3*t^2", "2*t^3 + t^4");
  FuncQ t = FuncQ::x();
  WCurve<FuncQ> shiftedE = base_change(E, t + FuncQ(5));
  Place moved = Place::finite(PolyQ::x() + PolyQ(Rat(5)));
  CHECK(local_type(shiftedE, moved) == local_type(E, at0()));

  WCurve<FuncQ> scaled = WCurve<FuncQ>::short_form(FuncQ(16) * E.a4, FuncQ(64) * E.a6);
  CHECK(local_type(scaled, at0()) == local_type(E, at0()));
}

TEST_CASE("fibre configuration of the published minimal model") {
  auto cfg = fibre_configuration(published_min());
  CHECK(cfg.chi == 1);
  CHECK(cfg.rational_surface);

  const FibreType* inf = find_entry(cfg, Place::at_infinity());
  REQUIRE(inf != nullptr);
  CHECK(*inf == ft(FibreSymbol::I, 2));

  int reducible = 0;
  for (const auto& e : cfg.entries) reducible += e.type.reducible();
  CHECK(reducible == 1);  // only the fibre at infinity
  CHECK(cfg.component_excess() == 1);
  CHECK(shioda_tate_rank(cfg, 10) == 7);

  CHECK(is_rational_surface(published_min()));
}

TEST_CASE("fibre configuration of the squared-parameter model") {
  WCurve<FuncQ> E = pullback_square(published_min());
  auto cfg = fibre_configuration(E);
  CHECK(cfg.chi == 2);
  CHECK(!cfg.rational_surface);
  CHECK(!is_rational_surface(E));

  const FibreType* inf = find_entry(cfg, Place::at_infinity());
  REQUIRE(inf != nullptr);
  CHECK(*inf == ft(FibreSymbol::I, 4));
  REQUIRE(inf->split.has_value());
  CHECK(*inf->split);

  long euler = 0;
  for (const auto& e : cfg.entries) euler += (long)e.place.degree() * e.type.euler();
  CHECK(euler == 24);

  for (const auto& e : cfg.entries) {
    if (e.place.infinite) continue;
    CHECK(!e.type.reducible());
    long a = place_valuation(E.c4(), e.place);
    CHECK(e.type.multiplicative() == (a == 0));
  }
  CHECK(cfg.component_excess() == 3);
  CHECK(shioda_tate_rank(cfg, 18) == 13);
}

TEST_CASE("configuration guards") {
  CHECK_THROWS_WITH(fibre_configuration(shortc("0", "1")),
                    "constant discriminant: the surface is isotrivial");
  CHECK_THROWS_WITH(fibre_configuration(shortc("0", "0")), "curve is singular");

  FibreConfiguration empty;
  empty.chi = 1;
  CHECK(shioda_tate_rank(empty, 10) == 8);
  FibreConfiguration heavy;
  heavy.entries.push_back({Place::at_infinity(), ft(FibreSymbol::IIstar)});
  CHECK_THROWS_WITH(shioda_tate_rank(heavy, 9), "rank is below the fibre contribution");
}

TEST_CASE("small surfaces classify as rational") {
  CHECK(is_rational_surface(shortc("0", "t")));
  auto cfg = fibre_configuration(shortc("0", "t"));
  CHECK(cfg.chi == 1);
  const FibreType* zero = find_entry(cfg, at0());
  REQUIRE(zero != nullptr);
  CHECK(*zero == ft(FibreSymbol::II));
  const FibreType* inf = find_entry(cfg, Place::at_infinity());
  REQUIRE(inf != nullptr);
  CHECK(*inf == ft(FibreSymbol::IIstar));
}
