#pragma once
#include "polyq.hpp"

namespace ellrank {

// a + b*sqrt(D) with D squarefree. Rational values carry D == 0 and b == 0;
// mixing two different nonzero D is an error, not an implicit compositum.
struct QuadExt {
  Rat a, b;
  Int D;

  QuadExt() : a(0), b(0), D(0) {}
  QuadExt(long v) : a(v), b(0), D(0) {}
  QuadExt(const Rat& v) : a(v), b(0), D(0) {}
  QuadExt(Rat a_, Rat b_, Int D_) : a(std::move(a_)), b(std::move(b_)), D(std::move(D_)) {
    normalize();
  }

  void normalize() {
    if (sgn(b) == 0) D = 0;
    if (sgn(D) == 0 && sgn(b) != 0) throw math_error("sqrt(0) coordinate with nonzero weight");
  }

  bool rational() const { return sgn(b) == 0; }
  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

  QuadExt conj() const { return QuadExt(a, -b, D); }
  Rat norm() const { return a * a - b * b * Rat(D); }
  Rat trace() const { return 2 * a; }

  bool operator==(const QuadExt& o) const { return a == o.a && b == o.b && D == o.D; }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }

  QuadExt operator-() const { return QuadExt(-a, -b, D); }

  friend Int join(const QuadExt& x, const QuadExt& y) {
    if (sgn(x.D) == 0) return y.D;
    if (sgn(y.D) == 0 || x.D == y.D) return x.D;
    throw math_error("mixed quadratic fields");
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b, join(x, y));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b, join(x, y));
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    Int D = join(x, y);
    return QuadExt(x.a * y.a + x.b * y.b * Rat(D), x.a * y.b + x.b * y.a, D);
  }
  QuadExt inv() const {
    Rat n = norm();
    if (sgn(n) == 0) throw math_error("division by zero");
    return QuadExt(a / n, -b / n, D);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }

  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }
};

// square root within the field of x (same D, or rational result); nullopt if
// none exists there
std::optional<QuadExt> sqrt_same_field(const QuadExt& x);

// square root within the field Q(sqrt(D)); accepts rational x whose root is
// s*sqrt(D), which sqrt_same_field cannot see since rational values carry D=0
std::optional<QuadExt> sqrt_in_field(const QuadExt& x, const Int& D);

// square root allowed to move to a new quadratic field when x is rational and
// not a rational square; the result's D is the squarefree kernel
std::optional<QuadExt> sqrt_any(const QuadExt& x);

QuadExt conj(const QuadExt& x);

using PolyE = Poly<QuadExt>;

PolyE to_ext(const PolyQ& f);
PolyQ rational_part_poly(const PolyE& f);  // requires every coefficient rational
PolyE conj(const PolyE& f);

template <>
struct GcdImpl<QuadExt> {
  static PolyE run(const PolyE& a, const PolyE& b);
};

// total order for stable output: by D, then a, then b
int cmp(const QuadExt& x, const QuadExt& y);

}  // namespace ellrank
