#pragma once
#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "intx.hpp"

namespace ellrank {

// Dense univariate polynomial, ascending coefficients, highest one nonzero.
template <class K>
struct Poly {
  std::vector<K> c;

  Poly() = default;
  Poly(const K& k) {
    if (!(k == K(0))) c.push_back(k);
  }
  Poly(long v) : Poly(K(v)) {}
  explicit Poly(std::vector<K> v) : c(std::move(v)) { trim(); }

  static Poly x() { return mono(K(1), 1); }
  static Poly mono(const K& k, int n) {
    Poly p;
    if (!(k == K(0))) {
      p.c.assign(n + 1, K(0));
      p.c[n] = k;
    }
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == K(0)) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }
  K get(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : K(0); }
  const K& lc() const {
    assert(!c.empty());
    return c.back();
  }

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& k : r.c) k = -k;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size(), K(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size(), K(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == K(0)) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const K& k) const {
    Poly r;
    if (k == K(0)) return r;
    r.c = c;
    for (auto& x : r.c) x = x * k;
    r.trim();
    return r;
  }

  // multiply by x^n
  Poly shifted(int n) const {
    if (zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + n, K(0));
    std::copy(c.begin(), c.end(), r.c.begin() + n);
    return r;
  }

  Poly deriv() const {
    Poly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * K((long)i);
    r.trim();
    return r;
  }

  template <class L>
  L eval(const L& x) const {
    L r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * x + L(c[i]);
    return r;
  }

  // substitution of another polynomial for the variable
  Poly compose(const Poly& g) const {
    Poly r;
    for (size_t i = c.size(); i-- > 0;) r = r * g + Poly(c[i]);
    return r;
  }

  // coefficients reversed: x^n * f(1/x) for n = deg f (or given n >= deg)
  Poly reversed(int n = -1) const {
    if (zero()) return Poly();
    if (n < 0) n = deg();
    assert(n >= deg());
    Poly r;
    r.c.assign(n + 1, K(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[n - i] = c[i];
    r.trim();
    return r;
  }
};

// Division with remainder; leading coefficient of b must be invertible in K.
template <class K>
void divrem(Poly<K> a, const Poly<K>& b, Poly<K>& q, Poly<K>& r) {
  if (b.zero()) throw math_error("polynomial division by zero");
  int db = b.deg();
  K li = K(1) / b.lc();
  q = Poly<K>();
  if (a.deg() >= db) q.c.assign(a.deg() - db + 1, K(0));
  while (!a.zero() && a.deg() >= db) {
    int k = a.deg() - db;
    K coeff = a.lc() * li;
    q.c[k] = coeff;
    for (int i = 0; i <= db; ++i) a.c[k + i] -= coeff * b.c[i];
    a.trim();
  }
  q.trim();
  r = std::move(a);
}

template <class K>
Poly<K> pmod(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> q, r;
  divrem(a, b, q, r);
  return r;
}

template <class K>
Poly<K> pdiv(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> q, r;
  divrem(a, b, q, r);
  return q;
}

template <class K>
bool divides(const Poly<K>& d, const Poly<K>& a) {
  if (a.zero()) return true;
  if (d.zero() || a.deg() < d.deg()) return false;
  return pmod(a, d).zero();
}

template <class K>
Poly<K> monic(Poly<K> a) {
  if (a.zero()) return a;
  K li = K(1) / a.lc();
  for (auto& x : a.c) x = x * li;
  return a;
}

template <class K>
Poly<K> ppow(const Poly<K>& a, unsigned long e) {
  Poly<K> r(1), base = a;
  while (e) {
    if (e & 1) r *= base;
    if (e >>= 1) base *= base;
  }
  return r;
}

// gcd dispatch: each coefficient field defines its own implementation.
// Specializations live next to the field types; there is no generic one, so
// using an unsupported field is a compile error.
template <class K>
struct GcdImpl;

template <class K>
Poly<K> gcd(const Poly<K>& a, const Poly<K>& b) {
  return GcdImpl<K>::run(a, b);
}

// Plain monic Euclid, fine for cheap fields and small degrees.
template <class K>
Poly<K> gcd_euclid(Poly<K> a, Poly<K> b) {
  while (!b.zero()) {
    Poly<K> r = pmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

}  // namespace ellrank
