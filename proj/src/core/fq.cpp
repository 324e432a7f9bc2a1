#include "fq.hpp"

#include <stdexcept>

#include "fpring.hpp"

namespace ellrank {

namespace {

bool irreducible_fp(const FpCtx& F, const FpPoly& m) {
  int d = fp_deg(m);
  FpPoly x{0, 1};
  // x^(p^d) must fix everything mod m, and no proper power may
  FpPoly xp = x;
  std::vector<FpPoly> powers(d + 1);
  powers[0] = x;
  for (int k = 1; k <= d; ++k) {
    xp = fp_powmod(F, xp, Int((unsigned long)F.p), m);
    powers[k] = xp;
  }
  if (fp_deg(fp_sub(F, powers[d], x)) >= 0) return false;
  for (int l = 2; l <= d; ++l)
    if (d % l == 0) {
      bool prime = true;
      for (int k = 2; k * k <= l; ++k)
        if (l % k == 0) prime = false;
      if (!prime) continue;
      FpPoly g = fp_gcd(F, fp_sub(F, powers[d / l], x), m);
      if (fp_deg(g) != 0) return false;
    }
  return true;
}

FpPoly find_modulus(const FpCtx& F, int n) {
  if (n == 1) return FpPoly{0, 1};
  for (uint64_t a = 0; a < F.p; ++a)
    for (uint64_t b = 0; b < F.p; ++b) {
      FpPoly m(n + 1, 0);
      m[n] = 1;
      m[1] = a;
      m[0] = b;
      if (irreducible_fp(F, m)) return m;
    }
  throw math_error("no irreducible modulus found");
}

}  // namespace

FqField::FqField(uint32_t p_, int n_) : p(p_), n(n_) {
  if (p < 3 || p > 113 || n < 1 || n > 4) throw math_error("field out of range");
  uint64_t qq = 1;
  for (int i = 0; i < n; ++i) qq *= p;
  if (qq > (1u << 21)) throw math_error("field too large for tables");
  q = (uint32_t)qq;

  uint32_t ones = 0;
  for (int i = 0; i < n; ++i) ones |= 1u << (8 * i);
  bias_ = (128 - p) * ones;
  himask_ = 0x80u * ones;

  uint32_t pw = 1;
  for (int d = 0; d < 128; ++d) lut0_[d] = d;
  pw *= p;
  for (int d = 0; d < 128; ++d) lut1_[d] = d * pw;
  pw *= p;
  for (int d = 0; d < 128; ++d) lut2_[d] = d * pw;
  pw *= p;
  for (int d = 0; d < 128; ++d) lut3_[d] = d * pw;

  FpCtx F(p);
  FpPoly m = find_modulus(F, n);
  modulus.assign(m.begin(), m.end());

  auto mul_slow = [&](uint32_t a, uint32_t b) {
    FpPoly fa(n), fb(n);
    for (int i = 0; i < n; ++i) {
      fa[i] = a % p;
      a /= p;
      fb[i] = b % p;
      b /= p;
    }
    FpPoly r = fp_mod(F, fp_mul(F, fa, fb), m);
    uint32_t out = 0, w = 1;
    for (size_t i = 0; i < r.size(); ++i) {
      out += (uint32_t)r[i] * w;
      w *= p;
    }
    return out;
  };
  auto pow_slow = [&](uint32_t a, uint64_t e) {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };

  auto qm1 = factor_int(Int((unsigned long)(q - 1)));
  gen_ = 0;
  for (uint32_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto& [l, e] : qm1) {
      uint64_t lu = mpz_get_ui(l.get_mpz_t());
      if (pow_slow(g, (q - 1) / lu) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = g;
      break;
    }
  }
  if (gen_ == 0) throw math_error("no generator found");

  log_.assign(q, 0);
  alog_.assign(q - 1, 0);
  chi_.assign(q, 0);
  uint32_t a = 1;
  for (uint32_t k = 0; k < q - 1; ++k) {
    alog_[k] = a;
    log_[a] = k;
    chi_[a] = (k & 1) ? -1 : 1;
    a = mul_slow(a, gen_);
  }
  if (a != 1) throw math_error("generator order wrong");
}

uint32_t FqField::neg(uint32_t a) const {
  if (a == 0) return 0;
  uint32_t e = log_[a] + (q - 1) / 2;
  if (e >= q - 1) e -= q - 1;
  return alog_[e];
}

uint32_t FqField::inv(uint32_t a) const {
  if (a == 0) throw math_error("division by zero");
  if (a == 1) return 1;
  return alog_[(q - 1) - log_[a]];
}

uint32_t FqField::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  return alog_[(uint64_t)log_[a] * (e % (q - 1)) % (q - 1)];
}

uint32_t FqField::from_int(const Int& v) const {
  Int r = v % (long)p;
  long s = mpz_get_si(r.get_mpz_t());
  if (s < 0) s += p;
  return (uint32_t)s;
}

uint32_t FqField::from_rat(const Rat& v) const {
  uint32_t nn = from_int(num(v)), dd = from_int(den(v));
  return mul(nn, inv(dd));
}

uint32_t FqField::from_digits(const std::vector<uint32_t>& d) const {
  uint32_t out = 0, w = 1;
  for (size_t i = 0; i < d.size(); ++i) {
    out += (d[i] % p) * w;
    w *= p;
  }
  return out;
}

uint32_t FqField::eval(const std::vector<uint32_t>& coeffs, uint32_t t) const {
  uint32_t r = 0;
  for (size_t i = coeffs.size(); i-- > 0;) r = add(mul(r, t), coeffs[i]);
  return r;
}

}  // namespace ellrank
