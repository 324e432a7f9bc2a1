#pragma once
#include "fpring.hpp"
#include "poly.hpp"

namespace ellrank {

using PolyQ = Poly<Rat>;
using PolyZ = Poly<Int>;

// f = scale * primitive, primitive integral with positive leading coefficient
struct ZScaled {
  Rat scale;
  PolyZ prim;
};
ZScaled to_primitive(const PolyQ& f);
PolyQ to_rat(const PolyZ& f);
PolyQ from_primitive(const ZScaled& s);

Int content_z(const PolyZ& f);
PolyZ primitive_z(const PolyZ& f);  // positive leading coefficient
bool divides_z(const PolyZ& d, const PolyZ& a);
PolyZ divexact_z(const PolyZ& a, const PolyZ& d);
PolyZ gcd_z(const PolyZ& a, const PolyZ& b);  // primitive, positive lc

FpPoly to_fp(const FpCtx& F, const PolyZ& f);

// gcd over Q via modular images; result monic
template <>
struct GcdImpl<Rat> {
  static PolyQ run(const PolyQ& a, const PolyQ& b);
};

Rat resultant(const PolyQ& a, const PolyQ& b);
Rat discriminant(const PolyQ& f);

PolyQ lagrange(const std::vector<std::pair<Rat, Rat>>& pts);

// Yun: f = unit * prod fac[i].first^(fac[i].second), factors squarefree,
// pairwise coprime, monic
struct SqfPart {
  PolyQ f;
  int mult;
};
std::vector<SqfPart> squarefree_decomp(const PolyQ& f);
PolyQ squarefree_part(const PolyQ& f);

}  // namespace ellrank
