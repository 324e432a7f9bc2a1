#include "fpring.hpp"

namespace ellrank {

uint64_t FpCtx::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t FpCtx::inv(uint64_t a) const {
  if (a == 0) throw math_error("inverse of zero mod p");
  return pow(a, p - 2);
}

uint64_t FpCtx::reduce(const Int& a) const {
  Int r = a % Int((unsigned long)p);
  if (sgn(r) < 0) r += Int((unsigned long)p);
  return mpz_get_ui(r.get_mpz_t());
}

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_add(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  fp_trim(r);
  return r;
}

FpPoly fp_sub(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = F.sub(x, y);
  }
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  fp_trim(r);
  return r;
}

FpPoly fp_scale(const FpCtx& F, const FpPoly& a, uint64_t c) {
  FpPoly r = a;
  for (auto& x : r) x = F.mul(x, c);
  fp_trim(r);
  return r;
}

void fp_divrem(const FpCtx& F, FpPoly a, const FpPoly& b, FpPoly& q, FpPoly& r) {
  if (b.empty()) throw math_error("polynomial division by zero");
  int db = fp_deg(b);
  uint64_t li = F.inv(b.back());
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  while (fp_deg(a) >= db) {
    int k = fp_deg(a) - db;
    uint64_t c = F.mul(a.back(), li);
    q[k] = c;
    for (int i = 0; i <= db; ++i)
      a[k + i] = F.sub(a[k + i], F.mul(c, b[i]));
    fp_trim(a);
  }
  fp_trim(q);
  r = std::move(a);
}

FpPoly fp_mod(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  fp_divrem(F, a, b, q, r);
  return r;
}

FpPoly fp_monic(const FpCtx& F, FpPoly a) {
  if (a.empty()) return a;
  uint64_t li = F.inv(a.back());
  for (auto& x : a) x = F.mul(x, li);
  return a;
}

FpPoly fp_gcd(const FpCtx& F, FpPoly a, FpPoly b) {
  while (!b.empty()) {
    FpPoly r = fp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(F, std::move(a));
}

uint64_t fp_eval(const FpCtx& F, const FpPoly& a, uint64_t x) {
  uint64_t r = 0;
  for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

FpPoly fp_powmod(const FpCtx& F, FpPoly base, Int e, const FpPoly& mod) {
  FpPoly r = {1};
  base = fp_mod(F, base, mod);
  while (sgn(e) > 0) {
    if (is_odd(e)) r = fp_mod(F, fp_mul(F, r, base), mod);
    base = fp_mod(F, fp_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

FpPoly fp_deriv(const FpCtx& F, const FpPoly& a) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = F.mul(a[i], i % F.p);
  fp_trim(r);
  return r;
}

void fp_ext_gcd_coprime(const FpCtx& F, const FpPoly& a, const FpPoly& b,
                        FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    FpPoly q, r;
    fp_divrem(F, r0, r1, q, r);
    FpPoly s2 = fp_sub(F, s0, fp_mul(F, q, s1));
    FpPoly t2 = fp_sub(F, t0, fp_mul(F, q, t1));
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (fp_deg(r0) != 0) throw math_error("ext gcd of non-coprime polynomials");
  uint64_t li = F.inv(r0[0]);
  s = fp_scale(F, s0, li);
  t = fp_scale(F, t0, li);
}

void fp2_trim(Fp2Poly& a) {
  while (!a.empty() && a.back().first == 0 && a.back().second == 0) a.pop_back();
}

Fp2Poly fp2_mod(const Fp2Ctx& F, Fp2Poly a, const Fp2Poly& b) {
  if (b.empty()) throw math_error("polynomial division by zero");
  int db = fp2_deg(b);
  Fp2Ctx::E li = F.inv(b.back());
  while (fp2_deg(a) >= db) {
    int k = fp2_deg(a) - db;
    Fp2Ctx::E c = F.mul(a.back(), li);
    for (int i = 0; i <= db; ++i)
      a[k + i] = F.sub(a[k + i], F.mul(c, b[i]));
    fp2_trim(a);
  }
  return a;
}

Fp2Poly fp2_gcd(const Fp2Ctx& F, Fp2Poly a, Fp2Poly b) {
  while (!b.empty()) {
    Fp2Poly r = fp2_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Fp2Ctx::E li = F.inv(a.back());
    for (auto& x : a) x = F.mul(x, li);
  }
  return a;
}

}  // namespace ellrank
