#include "mestre.hpp"

#include <algorithm>

#include "polyfac.hpp"

namespace ellrank {

namespace {

FuncQ tpoly() { return FuncQ::x(); }

// prod_i (x - b_i - t)(x - b_i + t), monic of degree 12 over Q(t)
Poly<FuncQ> seed_product(const MestreSeed& seed) {
  for (size_t i = 0; i < seed.b.size(); ++i)
    for (size_t j = i + 1; j < seed.b.size(); ++j)
      if (seed.b[i] == seed.b[j]) throw math_error("seed entries must be distinct");
  Poly<FuncQ> p(1);
  Poly<FuncQ> x = Poly<FuncQ>::x();
  FuncQ t = tpoly();
  for (const Rat& b : seed.b) {
    p *= x - Poly<FuncQ>(FuncQ(b) + t);
    p *= x - Poly<FuncQ>(FuncQ(b) - t);
  }
  return p;
}

// x^5 coefficient of the split remainder, divided by t^2
Rat obstruction(const Poly<FuncQ>& r) {
  FuncQ c5 = r.get(5);
  if (c5.zero()) return Rat(0);
  FuncQ s = c5 / FuncQ(PolyQ::mono(Rat(1), 2));
  if (!s.is_poly() || s.n.deg() > 0)
    throw math_error("split remainder has an unexpected x^5 coefficient");
  return s.n.get(0);
}

}  // namespace

FuncQ QuarticCurve::rhs(const FuncQ& x) const {
  FuncQ v = a[4];
  for (int i = 3; i >= 0; --i) v = v * x + a[i];
  return v;
}

bool QuarticCurve::contains(const QuarticPoint& P) const { return P.y * P.y == rhs(P.x); }

Rat s_coefficient(const MestreSeed& seed) {
  auto sp = square_split(seed_product(seed));
  return obstruction(sp.r);
}

std::vector<Rat> search_b6(const std::array<Rat, 5>& b) {
  // the obstruction is a quintic polynomial in the sixth entry with no t left
  // in it; fit it through six samples and keep two more as a cross-check
  std::vector<std::pair<Rat, Rat>> samples;
  long y = 1000;
  while (samples.size() < 8) {
    Rat yv(y++);
    if (std::find(b.begin(), b.end(), yv) != b.end()) continue;
    MestreSeed s{{b[0], b[1], b[2], b[3], b[4], yv}};
    samples.push_back({yv, s_coefficient(s)});
  }
  PolyQ s = lagrange({samples.begin(), samples.begin() + 6});
  for (size_t i = 6; i < samples.size(); ++i)
    if (s.eval(samples[i].first) != samples[i].second)
      throw math_error("obstruction is not a quintic in the sixth entry");
  if (s.zero()) throw math_error("obstruction vanishes identically");
  std::vector<Rat> out;
  for (const auto& [root, mult] : rational_roots(s)) out.push_back(root);
  return out;
}

QuarticCurve build_quartic(const MestreSeed& seed, const FuncQ& scale) {
  auto root = ratfunc_sqrt(scale);
  if (!root || scale.zero()) throw math_error("scale must be a nonzero square in Q(t)");
  auto sp = square_split(seed_product(seed));
  if (sgn(obstruction(sp.r)) != 0) throw math_error("seed obstruction does not vanish");
  QuarticCurve c;
  for (int i = 0; i <= 4; ++i) c.a[i] = scale * sp.r.get(i);
  // at x = b_i -+ t the product vanishes, so r = q^2 there and the scaled
  // model has y = root * q
  FuncQ t = tpoly();
  for (int sign = 0; sign < 2; ++sign)
    for (const Rat& b : seed.b) {
      FuncQ xa = sign == 0 ? FuncQ(b) + t : FuncQ(b) - t;
      FuncQ ya = *root * sp.q.eval(xa);
      c.marked.push_back({xa, ya});
      c.marked.push_back({xa, -ya});
    }
  return c;
}

FuncQ default_scale() { return FuncQ(PolyQ(1), PolyQ::mono(Rat(1), 2)); }

FuncQ derive_scale(const std::array<FuncQ, 5>& target, const MestreSeed& seed) {
  auto sp = square_split(seed_product(seed));
  FuncQ ratio;
  bool found = false;
  for (int i = 0; i <= 4; ++i) {
    FuncQ ri = sp.r.get(i);
    if (ri.zero() != target[i].zero()) throw math_error("target does not match the split remainder");
    if (ri.zero()) continue;
    FuncQ q = target[i] / ri;
    if (!found) {
      ratio = q;
      found = true;
    } else if (q != ratio) {
      throw math_error("target is not a constant multiple of the split remainder");
    }
  }
  if (!found) throw math_error("split remainder is zero");
  if (!ratfunc_sqrt(ratio)) throw math_error("scale ratio is not a square in Q(t)");
  return ratio;
}

std::optional<PolyQ> poly_sqrt(const PolyQ& f) {
  if (f.zero()) return PolyQ();
  if (f.deg() % 2 != 0) return std::nullopt;
  auto lr = sqrt_rat(f.lc());
  if (!lr) return std::nullopt;
  auto sp = square_split(f.scaled(Rat(1) / f.lc()));
  if (!sp.r.zero()) return std::nullopt;
  return sp.q.scaled(*lr);
}

std::optional<FuncQ> ratfunc_sqrt(const FuncQ& f) {
  auto n = poly_sqrt(f.n);
  if (!n) return std::nullopt;
  auto d = poly_sqrt(f.d);
  if (!d) return std::nullopt;
  return FuncQ(*n, *d);
}

std::pair<Rat, Rat> leading_conic(const QuarticCurve& c) {
  const FuncQ& a4 = c.a[4];
  if (!a4.is_poly() || a4.n.deg() != 2 || sgn(a4.n.get(1)) != 0)
    throw math_error("x^4 coefficient is not of the form B*t^2 + A");
  return {a4.n.get(0), a4.n.get(2)};
}

ConicParam conic_parametrize(const Rat& A, const Rat& B, const Rat& t0, const Rat& u0) {
  if (u0 * u0 != A + B * t0 * t0) throw math_error("base point is not on the conic");
  PolyQ z = PolyQ::x();
  PolyQ z2 = z * z;
  PolyQ den = z2 - PolyQ(B);
  ConicParam cp;
  cp.t = FuncQ(z2.scaled(t0) - z.scaled(2 * u0) + PolyQ(Rat(B * t0)), den);
  cp.u = FuncQ(-z2.scaled(u0) + z.scaled(Rat(2 * B * t0)) - PolyQ(Rat(u0 * B)), den);
  if (!conic_identity_holds(A, B, cp)) throw math_error("chord parametrization left the conic");
  return cp;
}

bool conic_identity_holds(const Rat& A, const Rat& B, const ConicParam& cp) {
  return (cp.u * cp.u - FuncQ(A) - FuncQ(B) * cp.t * cp.t).zero();
}

}  // namespace ellrank
