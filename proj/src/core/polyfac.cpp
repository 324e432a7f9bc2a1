#include "polyfac.hpp"

#include <algorithm>

#include "fpring.hpp"

namespace ellrank {

namespace {

// ---- factorization over F_p ----

struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

FpPoly random_poly(const FpCtx& F, Rng& rng, int deg) {
  FpPoly r(deg + 1);
  for (auto& x : r) x = rng.next() % F.p;
  fp_trim(r);
  return r;
}

// distinct-degree: returns (product of irreducibles of degree d, d)
std::vector<std::pair<FpPoly, int>> ddf(const FpCtx& F, FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly h = {0, 1};  // x
  int d = 0;
  while (fp_deg(f) >= 2 * (d + 1)) {
    ++d;
    h = fp_powmod(F, h, Int((unsigned long)F.p), f);
    FpPoly hx = fp_sub(F, h, FpPoly{0, 1});
    FpPoly g = fp_gcd(F, f, hx);
    if (fp_deg(g) > 0) {
      out.push_back({g, d});
      FpPoly q, r;
      fp_divrem(F, f, g, q, r);
      f = q;
      h = fp_mod(F, h, f);
    }
  }
  if (fp_deg(f) > 0) out.push_back({f, fp_deg(f)});
  return out;
}

// equal-degree splitting (Cantor-Zassenhaus), f squarefree product of
// irreducibles of degree d
void edf(const FpCtx& F, const FpPoly& f, int d, Rng& rng, std::vector<FpPoly>& out) {
  int n = fp_deg(f);
  if (n == d) {
    out.push_back(fp_monic(F, f));
    return;
  }
  Int e = (ipow(Int((unsigned long)F.p), d) - 1) / 2;
  for (;;) {
    FpPoly a = random_poly(F, rng, n - 1);
    if (fp_deg(a) < 1) continue;
    FpPoly g = fp_gcd(F, f, a);
    if (fp_deg(g) > 0 && fp_deg(g) < n) {
      edf(F, g, d, rng, out);
      FpPoly q, r;
      fp_divrem(F, f, g, q, r);
      edf(F, q, d, rng, out);
      return;
    }
    FpPoly b = fp_powmod(F, a, e, f);
    b = fp_sub(F, b, FpPoly{1});
    g = fp_gcd(F, f, b);
    if (fp_deg(g) > 0 && fp_deg(g) < n) {
      edf(F, g, d, rng, out);
      FpPoly q, r;
      fp_divrem(F, f, g, q, r);
      edf(F, q, d, rng, out);
      return;
    }
  }
}

std::vector<FpPoly> factor_fp_squarefree(const FpCtx& F, const FpPoly& f) {
  Rng rng(0x5eedf00d ^ F.p);
  std::vector<FpPoly> out;
  for (auto& [g, d] : ddf(F, fp_monic(F, f))) edf(F, g, d, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Hensel lifting ----

// polynomials over Z/m as PolyZ with coefficients in [0, m)
PolyZ zm_norm(PolyZ a, const Int& m) {
  for (auto& c : a.c) {
    c %= m;
    if (sgn(c) < 0) c += m;
  }
  a.trim();
  return a;
}

PolyZ zm_mul(const PolyZ& a, const PolyZ& b, const Int& m) { return zm_norm(a * b, m); }

PolyZ zm_add(const PolyZ& a, const PolyZ& b, const Int& m) { return zm_norm(a + b, m); }

PolyZ zm_sub(const PolyZ& a, const PolyZ& b, const Int& m) { return zm_norm(a - b, m); }

// division with remainder mod m by a monic divisor
void zm_divrem_monic(PolyZ a, const PolyZ& b, const Int& m, PolyZ& q, PolyZ& r) {
  int db = b.deg();
  q = PolyZ();
  if (a.deg() >= db) q.c.assign(a.deg() - db + 1, Int(0));
  while (!a.zero() && a.deg() >= db) {
    Int c = a.lc() % m;
    int k = a.deg() - db;
    q.c[k] = c;
    for (int i = 0; i <= db; ++i) a.c[k + i] -= c * b.c[i];
    a = zm_norm(a, m);
  }
  q = zm_norm(q, m);
  r = std::move(a);
}

struct LiftPair {
  PolyZ g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m)
};

// one quadratic step: modulus m -> m^2 (capped by the caller's target)
void hensel_step(const PolyZ& f, LiftPair& L, const Int& m) {
  Int m2 = m * m;
  PolyZ e = zm_sub(zm_norm(f, m2), zm_mul(L.g, L.h, m2), m2);
  PolyZ q, r;
  zm_divrem_monic(zm_mul(L.s, e, m2), L.h, m2, q, r);
  PolyZ g2 = zm_add(zm_add(L.g, zm_mul(L.t, e, m2), m2), zm_mul(q, L.g, m2), m2);
  PolyZ h2 = zm_add(L.h, r, m2);
  PolyZ e2 = zm_sub(zm_add(zm_mul(L.s, g2, m2), zm_mul(L.t, h2, m2), m2), PolyZ(Int(1)), m2);
  PolyZ q2, r2;
  zm_divrem_monic(zm_mul(L.s, e2, m2), h2, m2, q2, r2);
  PolyZ s2 = zm_sub(L.s, r2, m2);
  PolyZ t2 = zm_sub(zm_sub(L.t, zm_mul(L.t, e2, m2), m2), zm_mul(q2, g2, m2), m2);
  L = {g2, h2, s2, t2};
}

PolyZ from_fp(const FpPoly& f) {
  std::vector<Int> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = Int((unsigned long)f[i]);
  return PolyZ(std::move(c));
}

// lift the monic factorization f = prod parts (mod p) to mod target;
// f monic mod target, parts monic mod p
void hensel_tree(const FpCtx& F, const PolyZ& f, const Int& target,
                 const std::vector<FpPoly>& parts, size_t lo, size_t hi,
                 std::vector<PolyZ>& out) {
  if (hi - lo == 1) {
    out[lo] = zm_norm(f, target);
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  FpPoly gp = {1}, hp = {1};
  for (size_t i = lo; i < mid; ++i) gp = fp_mul(F, gp, parts[i]);
  for (size_t i = mid; i < hi; ++i) hp = fp_mul(F, hp, parts[i]);
  FpPoly sp, tp;
  fp_ext_gcd_coprime(F, gp, hp, sp, tp);
  LiftPair L{from_fp(gp), from_fp(hp), from_fp(sp), from_fp(tp)};
  Int m((unsigned long)F.p);
  while (m < target) {
    hensel_step(f, L, m);
    m *= m;
  }
  hensel_tree(F, zm_norm(L.g, target), target, parts, lo, mid, out);
  hensel_tree(F, zm_norm(L.h, target), target, parts, mid, hi, out);
}

// ---- Zassenhaus recombination ----

Int mignotte_times_lc(const PolyZ& f) {
  Int s = 0;
  for (const Int& c : f.c) s += c * c;
  Int n2 = isqrt_floor(s) + 1;
  Int lc = f.lc();
  if (sgn(lc) < 0) lc = -lc;
  Int b = n2 * lc;
  return b << (unsigned long)(f.deg() + 1);
}

PolyZ sym_lift(const PolyZ& a, const Int& m) {
  PolyZ r = a;
  Int half = m / 2;
  for (auto& c : r.c)
    if (c > half) c -= m;
  r.trim();
  return r;
}

std::vector<PolyZ> factor_z_squarefree(const PolyZ& f0) {
  std::vector<PolyZ> out;
  if (f0.deg() == 1) {
    out.push_back(f0);
    return out;
  }
  // prime choice: keep lc and squarefreeness
  Int p("1073741789");
  FpCtx F(0);
  FpPoly fp;
  for (;;) {
    p = next_prime(p);
    F = FpCtx((uint64_t)mpz_get_ui(p.get_mpz_t()));
    if (F.reduce(f0.lc()) == 0) continue;
    fp = to_fp(F, f0);
    FpPoly g = fp_gcd(F, fp, fp_deriv(F, fp));
    if (fp_deg(g) == 0) break;
  }
  std::vector<FpPoly> parts = factor_fp_squarefree(F, fp_monic(F, fp));
  if (parts.size() == 1) {
    out.push_back(f0);
    return out;
  }

  Int bound = 2 * mignotte_times_lc(f0) + 1;
  Int target((unsigned long)F.p);
  while (target < bound) target *= target;

  // lift monic f0/lc mod target
  Int lcinv;
  {
    Int lcz = f0.lc() % target;
    if (sgn(lcz) < 0) lcz += target;
    mpz_invert(lcinv.get_mpz_t(), lcz.get_mpz_t(), target.get_mpz_t());
  }
  PolyZ fmonic = f0;
  for (auto& c : fmonic.c) c = ((c * lcinv) % target + target) % target;
  fmonic = zm_norm(fmonic, target);

  std::vector<PolyZ> lifted(parts.size());
  hensel_tree(F, fmonic, target, parts, 0, parts.size(), lifted);

  // subset search
  std::vector<int> alive(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) alive[i] = (int)i;
  PolyZ rem = f0;
  size_t card = 1;
  while (2 * card <= alive.size()) {
    bool found = false;
    std::vector<int> pick(card);
    for (size_t i = 0; i < card; ++i) pick[i] = (int)i;
    for (;;) {
      PolyZ prod(rem.lc());
      for (size_t i = 0; i < card; ++i) prod = zm_mul(prod, lifted[alive[pick[i]]], target);
      PolyZ cand = primitive_z(sym_lift(prod, target));
      if (divides_z(cand, rem)) {
        out.push_back(cand);
        rem = divexact_z(rem, cand);
        std::vector<int> rest;
        for (size_t i = 0, j = 0; i < alive.size(); ++i) {
          if (j < card && (int)i == pick[j]) {
            ++j;
            continue;
          }
          rest.push_back(alive[i]);
        }
        alive = rest;
        found = true;
        break;
      }
      // next combination
      int k = (int)card - 1;
      while (k >= 0 && pick[k] == (int)(alive.size() - card + k)) --k;
      if (k < 0) break;
      ++pick[k];
      for (size_t i = k + 1; i < card; ++i) pick[i] = pick[i - 1] + 1;
    }
    if (!found) ++card;
  }
  if (rem.deg() > 0) out.push_back(rem);
  return out;
}

}  // namespace

QFactorization factor_poly(const PolyQ& f) {
  if (f.zero()) throw math_error("factoring the zero polynomial");
  QFactorization out;
  out.unit = f.get(f.deg());
  if (f.deg() == 0) return out;
  for (const auto& part : squarefree_decomp(f)) {
    PolyZ prim = to_primitive(part.f).prim;
    for (const PolyZ& irr : factor_z_squarefree(prim))
      out.factors.push_back({monic(to_rat(irr)), part.mult});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const QFactor& a, const QFactor& b) {
    if (a.f.deg() != b.f.deg()) return a.f.deg() < b.f.deg();
    for (int i = a.f.deg(); i >= 0; --i)
      if (a.f.get(i) != b.f.get(i)) return a.f.get(i) < b.f.get(i);
    return a.mult < b.mult;
  });
  return out;
}

std::vector<std::pair<Rat, int>> rational_roots(const PolyQ& f) {
  std::vector<std::pair<Rat, int>> out;
  for (const auto& fac : factor_poly(f).factors)
    if (fac.f.deg() == 1) out.push_back({-fac.f.get(0), fac.mult});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace ellrank
