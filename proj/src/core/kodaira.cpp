#include "kodaira.hpp"

#include "polyfac.hpp"

namespace ellrank {

namespace {

constexpr long kInfVal = 1L << 20;  // valuation of the zero polynomial

}  // namespace

long place_valuation(const PolyQ& f, const PolyQ& pi) {
  if (f.zero()) return kInfVal;
  long v = 0;
  PolyQ r = f;
  for (;;) {
    PolyQ q, rem;
    divrem(r, pi, q, rem);
    if (!rem.zero()) return v;
    r = q;
    v++;
  }
}

long place_valuation(const FuncQ& f, const Place& v) {
  if (f.zero()) return kInfVal;
  if (v.infinite) return f.d.deg() - f.n.deg();
  return place_valuation(f.n, v.pi) - place_valuation(f.d, v.pi);
}

int FibreType::components() const {
  switch (sym) {
    case FibreSymbol::I: return n == 0 ? 1 : n;
    case FibreSymbol::II: return 1;
    case FibreSymbol::III: return 2;
    case FibreSymbol::IV: return 3;
    case FibreSymbol::Istar: return n + 5;
    case FibreSymbol::IVstar: return 7;
    case FibreSymbol::IIIstar: return 8;
    case FibreSymbol::IIstar: return 9;
  }
  return 0;
}

int FibreType::euler() const {
  switch (sym) {
    case FibreSymbol::I: return n;
    case FibreSymbol::II: return 2;
    case FibreSymbol::III: return 3;
    case FibreSymbol::IV: return 4;
    case FibreSymbol::Istar: return n + 6;
    case FibreSymbol::IVstar: return 8;
    case FibreSymbol::IIIstar: return 9;
    case FibreSymbol::IIstar: return 10;
  }
  return 0;
}

std::string FibreType::name() const {
  switch (sym) {
    case FibreSymbol::I: return "I" + std::to_string(n);
    case FibreSymbol::II: return "II";
    case FibreSymbol::III: return "III";
    case FibreSymbol::IV: return "IV";
    case FibreSymbol::Istar: return "I" + std::to_string(n) + "*";
    case FibreSymbol::IVstar: return "IV*";
    case FibreSymbol::IIIstar: return "III*";
    case FibreSymbol::IIstar: return "II*";
  }
  return "?";
}

FibreType type_from_valuations(long vc4, long vdisc) {
  FibreType t;
  if (vdisc == 0) return t;  // I0
  if (vc4 == 0) {
    t.n = (int)vdisc;
    return t;
  }
  if (vdisc >= 12 && vc4 >= 4) throw math_error("model is not minimal at the place");
  if (vc4 == 2 && vdisc >= 7) {
    t.sym = FibreSymbol::Istar;
    t.n = (int)vdisc - 6;
    return t;
  }
  switch (vdisc) {
    case 2: t.sym = FibreSymbol::II; return t;
    case 3: t.sym = FibreSymbol::III; return t;
    case 4: t.sym = FibreSymbol::IV; return t;
    case 6: t.sym = FibreSymbol::Istar; return t;
    case 8: t.sym = FibreSymbol::IVstar; return t;
    case 9: t.sym = FibreSymbol::IIIstar; return t;
    case 10: t.sym = FibreSymbol::IIstar; return t;
  }
  throw math_error("valuations do not match a fibre type");
}

namespace {

// coefficients of the chart at infinity with twist k: s^(4k) A(1/s), s^(6k) B(1/s)
PolyQ chart_reverse(const PolyQ& p, int len) {
  PolyQ r;
  r.c.assign(len + 1, Rat(0));
  for (int i = 0; i <= p.deg(); i++) r.c[len - i] = p.get(i);
  r.trim();
  return r;
}

int chart_twist(const PolyQ& A, const PolyQ& B) {
  int k = 0;
  if (!A.zero()) k = std::max(k, (A.deg() + 3) / 4);
  if (!B.zero()) k = std::max(k, (B.deg() + 5) / 6);
  return k;
}

// splitness of a node: the tangent slopes are rational iff three times the
// double root of the reduced cubic is a square
std::optional<bool> node_split(const Rat& A0, const Rat& B0) {
  Rat x0 = Rat(-3) * B0 / (Rat(2) * A0);
  return sqrt_rat(Rat(3) * x0).has_value();
}

FibreType finite_type(const PolyQ& A, const PolyQ& B, const PolyQ& c4n, const PolyQ& dn,
                      const PolyQ& pi) {
  long a = place_valuation(c4n, pi);
  long d = place_valuation(dn, pi);
  FibreType t = type_from_valuations(a, d);
  if (t.multiplicative() && pi.deg() == 1) {
    Rat c = -pi.get(0);
    t.split = node_split(A.eval<Rat>(c), B.eval<Rat>(c));
  }
  return t;
}

FibreType infinite_type(const PolyQ& A, const PolyQ& B) {
  int k = chart_twist(A, B);
  PolyQ Ai = A.zero() ? PolyQ() : chart_reverse(A, 4 * k);
  PolyQ Bi = B.zero() ? PolyQ() : chart_reverse(B, 6 * k);
  WCurve<FuncQ> chart = WCurve<FuncQ>::short_form(FuncQ(Ai), FuncQ(Bi));
  PolyQ s = PolyQ::x();
  long a = place_valuation(chart.c4().n, s);
  long d = place_valuation(chart.disc().n, s);
  FibreType t = type_from_valuations(a, d);
  if (t.multiplicative()) t.split = node_split(Ai.get(0), Bi.get(0));
  return t;
}

// integral short coefficients of the model, demanded by every entry point
std::pair<PolyQ, PolyQ> short_poly_coeffs(const WCurve<FuncQ>& c) {
  WCurve<FuncQ> E = c.is_short() ? c : to_short(c).first;
  if (!E.a4.is_poly() || !E.a6.is_poly()) throw math_error("model is not integral");
  return {E.a4.n, E.a6.n};
}

}  // namespace

FibreType local_type(const WCurve<FuncQ>& c, const Place& v) {
  auto [A, B] = short_poly_coeffs(c);
  WCurve<FuncQ> E = WCurve<FuncQ>::short_form(FuncQ(A), FuncQ(B));
  if (E.disc().zero()) throw math_error("curve is singular");
  if (v.infinite) return infinite_type(A, B);
  if (v.pi.deg() < 1 || v.pi.lc() != 1) throw math_error("place must be monic of positive degree");
  return finite_type(A, B, E.c4().n, E.disc().n, v.pi);
}

FibreConfiguration fibre_configuration(const WCurve<FuncQ>& c) {
  auto [A, B] = short_poly_coeffs(c);
  WCurve<FuncQ> E = WCurve<FuncQ>::short_form(FuncQ(A), FuncQ(B));
  PolyQ D = E.disc().n;
  if (D.zero()) throw math_error("curve is singular");
  if (D.deg() == 0) throw math_error("constant discriminant: the surface is isotrivial");

  FibreConfiguration out;
  out.chi = chart_twist(A, B);
  out.rational_surface = out.chi == 1;

  PolyQ c4n = E.c4().n;
  for (const auto& g : factor_poly(D).factors)
    out.entries.push_back({Place::finite(g.f), finite_type(A, B, c4n, D, g.f)});

  FibreType inf = infinite_type(A, B);
  if (inf.euler() > 0) out.entries.push_back({Place::at_infinity(), inf});

  long esum = 0;
  for (const auto& e : out.entries) esum += (long)e.place.degree() * e.type.euler();
  if (esum != 12L * out.chi) throw math_error("fibre Euler numbers do not balance");
  return out;
}

bool is_rational_surface(const WCurve<FuncQ>& c) {
  auto [A, B] = short_poly_coeffs(c);
  return chart_twist(A, B) == 1;
}

long FibreConfiguration::component_excess() const {
  long s = 0;
  for (const auto& e : entries) s += (long)e.place.degree() * (e.type.components() - 1);
  return s;
}

long shioda_tate_rank(const FibreConfiguration& config, long rank_ns) {
  long excess = config.component_excess();
  if (rank_ns < 2 + excess) throw math_error("rank is below the fibre contribution");
  return rank_ns - 2 - excess;
}

}  // namespace ellrank
