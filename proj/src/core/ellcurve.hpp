#pragma once
#include "mestre.hpp"
#include "quadext.hpp"

namespace ellrank {

using FuncE = RatFunc<QuadExt>;

template <class K>
struct WPoint {
  K x{0}, y{0};
  bool inf = true;

  WPoint() = default;
  WPoint(K x_, K y_) : x(std::move(x_)), y(std::move(y_)), inf(false) {}
  static WPoint O() { return WPoint(); }

  bool operator==(const WPoint& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }
  bool operator!=(const WPoint& o) const { return !(*this == o); }
};

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over a field of
// characteristic 0 or >= 5
template <class K>
struct WCurve {
  K a1{0}, a2{0}, a3{0}, a4{0}, a6{0};

  static WCurve short_form(K A, K B) {
    WCurve c;
    c.a4 = std::move(A);
    c.a6 = std::move(B);
    return c;
  }
  bool is_short() const { return a1 == K(0) && a2 == K(0) && a3 == K(0); }

  K b2() const { return a1 * a1 + K(4) * a2; }
  K b4() const { return K(2) * a4 + a1 * a3; }
  K b6() const { return a3 * a3 + K(4) * a6; }
  K b8() const { return a1 * a1 * a6 + K(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
  K c4() const {
    K b = b2();
    return b * b - K(24) * b4();
  }
  K c6() const {
    K b = b2();
    return -(b * b * b) + K(36) * b * b4() - K(216) * b6();
  }
  K disc() const {
    K B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -(B2 * B2 * B8) - K(8) * B4 * B4 * B4 - K(27) * B6 * B6 + K(9) * B2 * B4 * B6;
  }

  bool operator==(const WCurve& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
  }
  bool operator!=(const WCurve& o) const { return !(*this == o); }

  bool contains(const WPoint<K>& P) const {
    if (P.inf) return true;
    return P.y * P.y + a1 * P.x * P.y + a3 * P.y ==
           P.x * P.x * P.x + a2 * P.x * P.x + a4 * P.x + a6;
  }

  WPoint<K> neg(const WPoint<K>& P) const {
    if (P.inf) return P;
    return WPoint<K>(P.x, -P.y - a1 * P.x - a3);
  }

  WPoint<K> add(const WPoint<K>& P, const WPoint<K>& Q) const {
    if (!contains(P) || !contains(Q)) throw math_error("point is not on the curve");
    if (P.inf) return Q;
    if (Q.inf) return P;
    K lam;
    if (P.x == Q.x) {
      if (P.y + Q.y + a1 * P.x + a3 == K(0)) return WPoint<K>::O();
      K den = K(2) * P.y + a1 * P.x + a3;
      lam = (K(3) * P.x * P.x + K(2) * a2 * P.x + a4 - a1 * P.y) / den;
    } else {
      lam = (Q.y - P.y) / (Q.x - P.x);
    }
    K nu = P.y - lam * P.x;
    K x3 = lam * lam + a1 * lam - a2 - P.x - Q.x;
    K y3 = -(lam + a1) * x3 - nu - a3;
    return WPoint<K>(std::move(x3), std::move(y3));
  }

  WPoint<K> sub(const WPoint<K>& P, const WPoint<K>& Q) const { return add(P, neg(Q)); }

  WPoint<K> mul(long n, const WPoint<K>& P) const {
    if (n < 0) return mul(-n, neg(P));
    WPoint<K> acc = WPoint<K>::O(), base = P;
    while (n) {
      if (n & 1) acc = add(acc, base);
      if (n >>= 1) base = add(base, base);
    }
    return acc;
  }
};

// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t; primed coordinates are the new
// model's
template <class K>
struct WMap {
  K u{1}, r{0}, s{0}, t{0};

  WPoint<K> to_new(const WPoint<K>& P) const {
    if (P.inf) return P;
    K xp = (P.x - r) / (u * u);
    K yp = (P.y - s * (P.x - r) - t) / (u * u * u);
    return WPoint<K>(std::move(xp), std::move(yp));
  }
  WPoint<K> to_old(const WPoint<K>& P) const {
    if (P.inf) return P;
    K x = u * u * P.x + r;
    K y = u * u * u * P.y + s * u * u * P.x + t;
    return WPoint<K>(std::move(x), std::move(y));
  }
};

// completing the square and the quadratic term shift; valid away from
// characteristic 2, 3
template <class K>
std::pair<WCurve<K>, WMap<K>> to_short(const WCurve<K>& c) {
  WCurve<K> out = WCurve<K>::short_form(-c.c4() / K(48), -c.c6() / K(864));
  WMap<K> m;
  m.r = -c.b2() / K(12);
  m.s = -c.a1 / K(2);
  m.t = c.a1 * c.b2() / K(24) - c.a3 / K(2);
  return {out, m};
}

// Point of a quartic model y^2 = f(x): affine, or one of the two marks over
// x = infinity identified by the limit of y/x^2 (a square root of the
// leading coefficient).
struct QPoint {
  FuncQ x, y;
  bool inf = false;

  QPoint() = default;
  QPoint(FuncQ x_, FuncQ y_) : x(std::move(x_)), y(std::move(y_)) {}
  static QPoint mark(FuncQ lead_root) {
    QPoint P;
    P.y = std::move(lead_root);
    P.inf = true;
    return P;
  }
  bool operator==(const QPoint& o) const {
    if (inf != o.inf) return false;
    return inf ? y == o.y : (x == o.x && y == o.y);
  }
};

// Weierstrass model of a quartic together with the birational point maps.
// The inverse is undefined at finitely many points and says so.
struct QuarticJacobian {
  WCurve<FuncQ> curve;

  WPoint<FuncQ> to_curve(const QPoint& P) const;
  QPoint to_quartic(const WPoint<FuncQ>& P) const;

  // construction state
  bool reversed = false;   // model was flipped x -> 1/x to bring the zero to 0
  bool root_base = false;  // zero has y = 0
  std::array<FuncQ, 5> f;  // quartic after the reversal, if any
  FuncQ x0, q;             // zero point of that quartic
  std::array<FuncQ, 5> sh;  // f shifted by x0; sh[0] = q^2
};

QuarticJacobian quartic_to_weierstrass(const QuarticCurve& c, const QPoint& zero);

// Globally minimal short model over Q(t): polynomial coefficients, reduced
// at every finite place and at the content primes; map.to_new lands input
// points on it.
struct MinimalModel {
  WCurve<FuncQ> curve;
  WMap<FuncQ> map;
};
MinimalModel minimal_model(const WCurve<FuncQ>& c);

// coefficientwise substitution t <- phi(z); phi must not be constant
WCurve<FuncQ> base_change(const WCurve<FuncQ>& c, const FuncQ& phi);
QuarticCurve base_change(const QuarticCurve& c, const FuncQ& phi);

struct SpecializedCurve {
  WCurve<Rat> curve;
  bool singular;  // the fibre degenerates there; not an error
};
// evaluation t <- t0; a pole of any coefficient is an error
SpecializedCurve specialize(const WCurve<FuncQ>& c, const Rat& t0);

// rewrite f(t) = g(t^2) as g(u); rejects functions not stable under t -> -t
FuncQ descend_even(const FuncQ& f);
WCurve<FuncQ> descend_even_curve(const WCurve<FuncQ>& c);
// substitution u <- t^2
WCurve<FuncQ> pullback_square(const WCurve<FuncQ>& c);

}  // namespace ellrank
