#pragma once
#include <array>

#include "polyio.hpp"

namespace ellrank {

using FuncQ = RatFunc<Rat>;

// Decomposition p = q^2 - r with q monic and deg r < deg p / 2.
template <class K>
struct SquareSplit {
  Poly<K> q, r;
};

// p monic of even degree 2n. The upper n coefficients of q are forced one by
// one; whatever is left over after subtracting q^2 is r.
template <class K>
SquareSplit<K> square_split(const Poly<K>& p) {
  if (p.zero() || !(p.lc() == K(1))) throw math_error("square split needs a monic polynomial");
  if (p.deg() % 2 != 0) throw math_error("square split needs even degree");
  int n = p.deg() / 2;
  K half = K(1) / K(2);
  std::vector<K> qd(n + 1, K(0));  // descending: qd[i] is the x^(n-i) coefficient
  qd[0] = K(1);
  for (int k = 1; k <= n; ++k) {
    K s = p.get(2 * n - k);
    for (int i = 1; i < k; ++i) s -= qd[i] * qd[k - i];
    qd[k] = s * half;
  }
  std::vector<K> qa(n + 1);
  for (int i = 0; i <= n; ++i) qa[n - i] = qd[i];
  SquareSplit<K> out;
  out.q = Poly<K>(std::move(qa));
  out.r = out.q * out.q - p;
  return out;
}

// Family parameter vector (b_1..b_6); the twelve sections sit at x = b_i -+ t.
struct MestreSeed {
  std::array<Rat, 6> b;
};

struct QuarticPoint {
  FuncQ x, y;
};

// y^2 = a[4] x^4 + ... + a[0] with coefficients in Q(t), plus the sections
// coming with the construction.
struct QuarticCurve {
  std::array<FuncQ, 5> a;
  std::vector<QuarticPoint> marked;

  FuncQ rhs(const FuncQ& x) const;
  bool contains(const QuarticPoint& P) const;
};

// Obstruction to the split remainder having degree 4: the x^5 coefficient of
// r is s * t^2. Seed entries must be distinct.
Rat s_coefficient(const MestreSeed& seed);

// All rational values of the sixth entry killing the obstruction, ascending.
std::vector<Rat> search_b6(const std::array<Rat, 5>& b);

// Quartic model scale * r for a seed with vanishing obstruction. The scale
// must be a nonzero square in Q(t); its root rescales the section heights.
QuarticCurve build_quartic(const MestreSeed& seed, const FuncQ& scale);

// Every coefficient of r is divisible by t^2, so this scale always yields a
// polynomial model.
FuncQ default_scale();

// The constant ratio target / r, certified to be a square in Q(t).
FuncQ derive_scale(const std::array<FuncQ, 5>& target, const MestreSeed& seed);

std::optional<PolyQ> poly_sqrt(const PolyQ& f);
std::optional<FuncQ> ratfunc_sqrt(const FuncQ& f);

// x^4 coefficient B*t^2 + A of a quartic model, read off as (A, B).
std::pair<Rat, Rat> leading_conic(const QuarticCurve& c);

// Chord parametrization of u^2 = A + B t^2 through a rational base point;
// both coordinates have degree <= 2 in z.
struct ConicParam {
  FuncQ t, u;
};
ConicParam conic_parametrize(const Rat& A, const Rat& B, const Rat& t0, const Rat& u0);

// u(z)^2 - A - B t(z)^2 == 0
bool conic_identity_holds(const Rat& A, const Rat& B, const ConicParam& cp);

}  // namespace ellrank
