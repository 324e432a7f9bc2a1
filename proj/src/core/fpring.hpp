#pragma once
#include <cstdint>
#include <vector>

#include "intx.hpp"

namespace ellrank {

// Arithmetic mod a word-size odd prime p < 2^62.
struct FpCtx {
  uint64_t p;
  explicit FpCtx(uint64_t p_) : p(p_) {}

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p || s < a ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return (uint64_t)((unsigned __int128)a * b % p);
  }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;
  uint64_t reduce(const Int& a) const;  // symmetric input allowed
};

// Dense polynomials over F_p: ascending coefficients, no trailing zeros.
using FpPoly = std::vector<uint64_t>;

void fp_trim(FpPoly& a);
inline int fp_deg(const FpPoly& a) { return (int)a.size() - 1; }
FpPoly fp_add(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpCtx& F, const FpPoly& a, uint64_t c);
void fp_divrem(const FpCtx& F, FpPoly a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fp_mod(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(const FpCtx& F, FpPoly a, FpPoly b);  // monic
FpPoly fp_monic(const FpCtx& F, FpPoly a);
uint64_t fp_eval(const FpCtx& F, const FpPoly& a, uint64_t x);
FpPoly fp_powmod(const FpCtx& F, FpPoly base, Int e, const FpPoly& mod);
FpPoly fp_deriv(const FpCtx& F, const FpPoly& a);
// s*a + t*b = 1 for coprime a, b
void fp_ext_gcd_coprime(const FpCtx& F, const FpPoly& a, const FpPoly& b,
                        FpPoly& s, FpPoly& t);

// The field F_p[w]/(w^2 - d) for d a non-residue mod p. Elements are pairs
// (x, y) meaning x + y*w.
struct Fp2Ctx {
  FpCtx F;
  uint64_t d;
  Fp2Ctx(uint64_t p_, uint64_t d_) : F(p_), d(d_) {}

  using E = std::pair<uint64_t, uint64_t>;
  E add(E a, E b) const { return {F.add(a.first, b.first), F.add(a.second, b.second)}; }
  E sub(E a, E b) const { return {F.sub(a.first, b.first), F.sub(a.second, b.second)}; }
  E mul(E a, E b) const {
    return {F.add(F.mul(a.first, b.first), F.mul(d, F.mul(a.second, b.second))),
            F.add(F.mul(a.first, b.second), F.mul(a.second, b.first))};
  }
  E inv(E a) const {
    uint64_t n = F.sub(F.mul(a.first, a.first), F.mul(d, F.mul(a.second, a.second)));
    uint64_t ni = F.inv(n);
    return {F.mul(a.first, ni), F.mul(F.neg(a.second), ni)};
  }
  bool is_zero(E a) const { return a.first == 0 && a.second == 0; }
};

using Fp2Poly = std::vector<Fp2Ctx::E>;

void fp2_trim(Fp2Poly& a);
inline int fp2_deg(const Fp2Poly& a) { return (int)a.size() - 1; }
Fp2Poly fp2_mod(const Fp2Ctx& F, Fp2Poly a, const Fp2Poly& b);
Fp2Poly fp2_gcd(const Fp2Ctx& F, Fp2Poly a, Fp2Poly b);  // monic

}  // namespace ellrank
