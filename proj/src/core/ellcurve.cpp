#include "ellcurve.hpp"

#include "polyfac.hpp"

namespace ellrank {

namespace {

Poly<FuncQ> quartic_poly(const std::array<FuncQ, 5>& a) {
  Poly<FuncQ> p;
  p.c.assign(a.begin(), a.end());
  p.trim();
  return p;
}

// x -> 1/x, y -> y/x^2 swaps the two ends of the quartic model
std::array<FuncQ, 5> reverse_coeffs(const std::array<FuncQ, 5>& a) {
  return {a[4], a[3], a[2], a[1], a[0]};
}

QPoint flip(const QPoint& P) {
  if (P.inf) return QPoint(FuncQ(0), P.y);
  if (P.x.zero()) return QPoint::mark(P.y);
  FuncQ xi = FuncQ(1) / P.x;
  return QPoint(xi, P.y * xi * xi);
}

Poly<FuncQ> trunc(Poly<FuncQ> p, int n) {
  if ((int)p.c.size() > n) p.c.resize(n);
  p.trim();
  return p;
}

}  // namespace

QuarticJacobian quartic_to_weierstrass(const QuarticCurve& c, const QPoint& zero) {
  QuarticJacobian J;
  if (zero.inf) {
    if (zero.y * zero.y != c.a[4]) throw math_error("zero point is not on the quartic");
    J.reversed = true;
    J.f = reverse_coeffs(c.a);
    J.x0 = FuncQ(0);
  } else {
    if (zero.y * zero.y != c.rhs(zero.x)) throw math_error("zero point is not on the quartic");
    J.f = c.a;
    J.x0 = zero.x;
  }
  J.q = zero.y;

  Poly<FuncQ> shifted = quartic_poly(J.f).compose(Poly<FuncQ>::x() + Poly<FuncQ>(J.x0));
  for (int i = 0; i < 5; i++) J.sh[i] = shifted.get(i);
  // sh[0] = f(x0) = q^2 by the membership check

  const FuncQ &s1 = J.sh[1], &s2 = J.sh[2], &s3 = J.sh[3], &s4 = J.sh[4], &q = J.q;
  if (q.zero()) {
    if (s1.zero()) throw math_error("quartic is singular at the zero point");
    J.root_base = true;
    J.curve.a2 = s2;
    J.curve.a4 = s1 * s3;
    J.curve.a6 = s1 * s1 * s4;
  } else {
    FuncQ q2 = q * q;
    J.curve.a1 = s1 / q;
    J.curve.a2 = s2 - s1 * s1 / (FuncQ(4) * q2);
    J.curve.a3 = FuncQ(2) * s3 * q;
    J.curve.a4 = FuncQ(-4) * s4 * q2;
    J.curve.a6 = s4 * (s1 * s1 - FuncQ(4) * s2 * q2);
  }
  if (J.curve.disc().zero()) throw math_error("quartic model is singular");
  return J;
}

WPoint<FuncQ> QuarticJacobian::to_curve(const QPoint& Pin) const {
  QPoint P = reversed ? flip(Pin) : Pin;
  const FuncQ &s1 = sh[1], &s2 = sh[2], &s3 = sh[3], &s4 = sh[4];

  if (P.inf) {
    if (P.y * P.y != f[4]) throw math_error("point is not on the quartic");
    if (root_base) return WPoint<FuncQ>(FuncQ(0), s1 * P.y);
    return WPoint<FuncQ>(FuncQ(2) * q * P.y, FuncQ(0));
  }

  FuncQ fx = f[0] + P.x * (f[1] + P.x * (f[2] + P.x * (f[3] + P.x * f[4])));
  if (P.y * P.y != fx) throw math_error("point is not on the quartic");

  FuncQ u = P.x - x0;
  if (root_base) {
    if (u.zero()) return WPoint<FuncQ>::O();
    return WPoint<FuncQ>(s1 / u, s1 * P.y / (u * u));
  }
  if (!u.zero()) {
    FuncQ X = (FuncQ(2) * q * (P.y + q) + s1 * u) / (u * u);
    FuncQ Y = (FuncQ(4) * q * q * (P.y + q) + FuncQ(2) * q * (s1 * u + s2 * u * u) -
               s1 * s1 * u * u / (FuncQ(2) * q)) /
              (u * u * u);
    return WPoint<FuncQ>(std::move(X), std::move(Y));
  }
  if (P.y == q) return WPoint<FuncQ>::O();

  // the second point over x0 needs the local expansion of the branch
  // y = -q sqrt(1 + w(s)),  w = (s4 s^4 + s3 s^3 + s2 s^2 + s1 s)/q^2
  FuncQ q2 = q * q;
  Poly<FuncQ> s = Poly<FuncQ>::x();
  Poly<FuncQ> w;
  w.c = {FuncQ(0), s1 / q2, s2 / q2, s3 / q2, s4 / q2};
  w.trim();
  Poly<FuncQ> w2 = trunc(w * w, 5), w3 = trunc(w2 * w, 5), w4 = trunc(w2 * w2, 5);
  Poly<FuncQ> ser = w.scaled(FuncQ(Rat(1, 2))) - w2.scaled(FuncQ(Rat(1, 8))) +
                    w3.scaled(FuncQ(Rat(1, 16))) - w4.scaled(FuncQ(Rat(5, 128)));
  ser = ser.scaled(-q);  // expansion of y + q
  Poly<FuncQ> NX = ser.scaled(FuncQ(2) * q) + s.scaled(s1);
  if (!NX.get(0).zero() || !NX.get(1).zero()) throw math_error("branch expansion failed");
  Poly<FuncQ> NY = ser.scaled(FuncQ(4) * q2) + s.scaled(FuncQ(2) * q * s1) +
                   (s * s).scaled(FuncQ(2) * q * s2 - s1 * s1 / (FuncQ(2) * q));
  if (!NY.get(0).zero() || !NY.get(1).zero() || !NY.get(2).zero())
    throw math_error("branch expansion failed");
  return WPoint<FuncQ>(NX.get(2), NY.get(3));
}

QPoint QuarticJacobian::to_quartic(const WPoint<FuncQ>& P) const {
  const FuncQ &s1 = sh[1], &s2 = sh[2], &s4 = sh[4];
  auto out = [&](const QPoint& R) { return reversed ? flip(R) : R; };

  if (P.inf) return out(QPoint(x0, q));
  if (!curve.contains(P)) throw math_error("point is not on the curve");

  if (root_base) {
    if (P.x.zero()) return out(QPoint::mark(P.y / s1));
    FuncQ u = s1 / P.x;
    return out(QPoint(x0 + u, u * u * P.y / s1));
  }

  if (P.y.zero()) {
    auto lam = ratfunc_sqrt(s4);
    if (lam) {
      FuncQ Xp = FuncQ(2) * q * *lam;
      if (P.x == Xp) return out(QPoint::mark(*lam));
      if (!lam->zero() && P.x == -Xp) return out(QPoint::mark(-*lam));
    }
    QPoint cand(x0, -q);
    if (to_curve(out(cand)) == P) return out(cand);
    throw math_error("map is undefined at this point");
  }

  FuncQ u = (FuncQ(2) * q * P.x + FuncQ(2) * q * s2 - s1 * s1 / (FuncQ(2) * q)) / P.y;
  if (u.zero()) {
    QPoint cand(x0, -q);
    if (to_curve(out(cand)) == P) return out(cand);
    throw math_error("map is undefined at this point");
  }
  FuncQ v = (u * u * P.x - s1 * u) / (FuncQ(2) * q) - q;
  QPoint R(x0 + u, v);
  FuncQ fx = f[0] + R.x * (f[1] + R.x * (f[2] + R.x * (f[3] + R.x * f[4])));
  if (R.y * R.y != fx) throw math_error("map is undefined at this point");
  return out(R);
}

namespace {

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// exponent shift making (va + 4k, vb + 6k) nonnegative and reduced
long scale_exponent(long va, long vb) {
  long k = std::max(ceil_div(-va, 4), ceil_div(-vb, 6));
  if (k > 0) return k;
  return -std::min(va / 4, vb / 6);
}

long mult_of(const QFactorization& fac, const PolyQ& pi) {
  for (const auto& g : fac.factors)
    if (g.f == pi) return g.mult;
  return 0;
}

Rat content_of(const PolyQ& p) {
  Int cden(1);
  for (const auto& c : p.c) cden = ilcm(cden, den(c));
  Int cnum(0);
  for (const auto& c : p.c) cnum = igcd(cnum, num(c) * idivexact(cden, den(c)));
  return Rat(cnum, cden);
}

}  // namespace

MinimalModel minimal_model(const WCurve<FuncQ>& c) {
  if (c.disc().zero()) throw math_error("curve is singular");
  auto [sc, smap] = to_short(c);
  FuncQ A = sc.a4, B = sc.a6;

  QFactorization fan, fad, fbn, fbd;
  if (!A.zero()) fan = factor_poly(A.n), fad = factor_poly(A.d);
  if (!B.zero()) fbn = factor_poly(B.n), fbd = factor_poly(B.d);
  std::vector<PolyQ> pis;
  auto note = [&](const QFactorization& f) {
    for (const auto& g : f.factors) {
      bool seen = false;
      for (const auto& h : pis) seen = seen || h == g.f;
      if (!seen) pis.push_back(g.f);
    }
  };
  note(fan), note(fad), note(fbn), note(fbd);

  FuncQ uscale(1);
  for (const auto& pi : pis) {
    long va = A.zero() ? 0 : mult_of(fan, pi) - mult_of(fad, pi);
    long vb = B.zero() ? 0 : mult_of(fbn, pi) - mult_of(fbd, pi);
    if (A.zero()) va = 4 * std::abs(vb) + 8;  // no constraint from A
    if (B.zero()) vb = 6 * std::abs(va) + 12;
    long k = scale_exponent(va, vb);
    if (k == 0) continue;
    FuncQ pk = rpowf(FuncQ(pi), k);
    A *= pk * pk * pk * pk;
    B *= rpowf(pk, 6);
    uscale = uscale / pk;
  }
  if (!A.is_poly() || !B.is_poly()) throw math_error("place reduction failed");

  Rat ca = A.zero() ? Rat(0) : content_of(A.n);
  Rat cb = B.zero() ? Rat(0) : content_of(B.n);
  std::vector<Int> primes;
  auto note_p = [&](const Int& v) {
    for (auto& [p, e] : factor_int(v)) {
      bool seen = false;
      for (const auto& x : primes) seen = seen || x == p;
      if (!seen) primes.push_back(p);
    }
  };
  if (ca != 0) note_p(num(ca)), note_p(den(ca));
  if (cb != 0) note_p(num(cb)), note_p(den(cb));

  for (const auto& p : primes) {
    long va = ca == 0 ? 0 : valuation(ca, p);
    long vb = cb == 0 ? 0 : valuation(cb, p);
    if (ca == 0) va = 4 * std::abs(vb) + 8;
    if (cb == 0) vb = 6 * std::abs(va) + 12;
    long k = scale_exponent(va, vb);
    if (k == 0) continue;
    Rat pk = rpow(Rat(p), k);
    A *= FuncQ(pk * pk * pk * pk);
    B *= FuncQ(rpow(pk, 6));
    uscale = uscale / FuncQ(pk);
  }

  MinimalModel m;
  m.curve = WCurve<FuncQ>::short_form(A, B);
  m.map = smap;
  m.map.u = smap.u * uscale;
  return m;
}

WCurve<FuncQ> base_change(const WCurve<FuncQ>& c, const FuncQ& phi) {
  if (phi.map_degree() <= 0) throw math_error("substitution must not be constant");
  WCurve<FuncQ> out;
  out.a1 = c.a1.compose(phi);
  out.a2 = c.a2.compose(phi);
  out.a3 = c.a3.compose(phi);
  out.a4 = c.a4.compose(phi);
  out.a6 = c.a6.compose(phi);
  return out;
}

QuarticCurve base_change(const QuarticCurve& c, const FuncQ& phi) {
  if (phi.map_degree() <= 0) throw math_error("substitution must not be constant");
  QuarticCurve out;
  for (int i = 0; i < 5; i++) out.a[i] = c.a[i].compose(phi);
  for (const auto& P : c.marked)
    out.marked.push_back({P.x.compose(phi), P.y.compose(phi)});
  return out;
}

SpecializedCurve specialize(const WCurve<FuncQ>& c, const Rat& t0) {
  auto ev = [&](const FuncQ& f) -> Rat {
    Rat dv = f.d.eval<Rat>(t0);
    if (dv == 0) throw math_error("coefficient has a pole at the substitution");
    return f.n.eval<Rat>(t0) / dv;
  };
  SpecializedCurve out;
  out.curve.a1 = ev(c.a1);
  out.curve.a2 = ev(c.a2);
  out.curve.a3 = ev(c.a3);
  out.curve.a4 = ev(c.a4);
  out.curve.a6 = ev(c.a6);
  out.singular = out.curve.disc() == 0;
  return out;
}

namespace {

PolyQ subs_neg(const PolyQ& p) {
  PolyQ r = p;
  for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
  return r;
}

PolyQ halve_exponents(const PolyQ& p) {
  PolyQ r;
  for (size_t i = 0; i < p.c.size(); i++) {
    if (i % 2) {
      if (p.c[i] != 0) throw math_error("odd exponent survived the descent");
    } else {
      r.c.push_back(p.c[i]);
    }
  }
  r.trim();
  return r;
}

}  // namespace

FuncQ descend_even(const FuncQ& f) {
  if (FuncQ(subs_neg(f.n), subs_neg(f.d)) != f)
    throw math_error("function is not stable under t -> -t");
  PolyQ n = f.n, d = f.d;
  if (subs_neg(d) != d) {
    n = n.shifted(1);
    d = d.shifted(1);
  }
  return FuncQ(halve_exponents(n), halve_exponents(d));
}

WCurve<FuncQ> descend_even_curve(const WCurve<FuncQ>& c) {
  WCurve<FuncQ> out;
  out.a1 = descend_even(c.a1);
  out.a2 = descend_even(c.a2);
  out.a3 = descend_even(c.a3);
  out.a4 = descend_even(c.a4);
  out.a6 = descend_even(c.a6);
  return out;
}

WCurve<FuncQ> pullback_square(const WCurve<FuncQ>& c) {
  FuncQ t2 = FuncQ::x() * FuncQ::x();
  WCurve<FuncQ> out;
  out.a1 = c.a1.compose(t2);
  out.a2 = c.a2.compose(t2);
  out.a3 = c.a3.compose(t2);
  out.a4 = c.a4.compose(t2);
  out.a6 = c.a6.compose(t2);
  return out;
}

}  // namespace ellrank
