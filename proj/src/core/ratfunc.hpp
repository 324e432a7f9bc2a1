#pragma once
#include "poly.hpp"

namespace ellrank {

// Reduced fraction of polynomials; denominator monic and coprime to the
// numerator. Requires a GcdImpl for K.
template <class K>
struct RatFunc {
  Poly<K> n, d;

  RatFunc() : n(), d(1) {}
  RatFunc(const K& k) : n(k), d(1) {}
  RatFunc(long v) : n(v), d(1) {}
  RatFunc(const Poly<K>& p) : n(p), d(1) {}
  RatFunc(Poly<K> num, Poly<K> den) : n(std::move(num)), d(std::move(den)) { reduce(); }

  static RatFunc x() { return RatFunc(Poly<K>::x()); }

  void reduce() {
    if (d.zero()) throw math_error("division by zero");
    if (n.zero()) {
      d = Poly<K>(1);
      return;
    }
    Poly<K> g = gcd(n, d);
    if (g.deg() > 0) {
      n = pdiv(n, g);
      d = pdiv(d, g);
    }
    K li = K(1) / d.lc();
    n = n.scaled(li);
    d = d.scaled(li);
  }

  bool zero() const { return n.zero(); }
  bool is_poly() const { return d.deg() == 0; }

  bool operator==(const RatFunc& o) const { return n == o.n && d == o.d; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.n = -r.n;
    return r;
  }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.n * y.d + y.n * x.d, x.d * y.d);
  }
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.n * y.d - y.n * x.d, x.d * y.d);
  }
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.n * y.n, x.d * y.d);
  }
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
    if (y.zero()) throw math_error("division by zero");
    return RatFunc(x.n * y.d, x.d * y.n);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  // degree of the induced map to the projective line (max of num/den degrees);
  // zero maps to minus infinity, reported as -1
  int map_degree() const { return zero() ? -1 : std::max(n.deg(), d.deg()); }

  K eval(const K& x) const {
    K dv = d.template eval<K>(x);
    if (dv == K(0)) throw math_error("pole");
    return n.template eval<K>(x) / dv;
  }

  // substitution of a rational function for the variable
  RatFunc compose(const RatFunc& g) const {
    RatFunc num(0), den(0);
    for (size_t i = n.c.size(); i-- > 0;) num = num * g + RatFunc(Poly<K>(n.c[i]));
    for (size_t i = d.c.size(); i-- > 0;) den = den * g + RatFunc(Poly<K>(d.c[i]));
    return num / den;
  }
};

template <class K>
RatFunc<K> rpowf(const RatFunc<K>& a, long e) {
  RatFunc<K> r(1), base = e < 0 ? RatFunc<K>(1) / a : a;
  unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
  while (k) {
    if (k & 1) r *= base;
    if (k >>= 1) base *= base;
  }
  return r;
}

}  // namespace ellrank
