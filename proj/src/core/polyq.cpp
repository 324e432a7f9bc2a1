#include "polyq.hpp"

#include "fpring.hpp"

namespace ellrank {

ZScaled to_primitive(const PolyQ& f) {
  if (f.zero()) return {Rat(0), PolyZ()};
  Int l = 1;
  for (const Rat& k : f.c) l = ilcm(l, den(k));
  Int g = 0;
  std::vector<Int> ic(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) {
    ic[i] = num(f.c[i]) * idivexact(l, den(f.c[i]));
    g = igcd(g, ic[i]);
  }
  if (sgn(ic.back()) < 0) g = -g;
  for (auto& k : ic) k = idivexact(k, g);
  return {ratio(g, l), PolyZ(std::move(ic))};
}

PolyQ to_rat(const PolyZ& f) {
  std::vector<Rat> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) c[i] = Rat(f.c[i]);
  return PolyQ(std::move(c));
}

PolyQ from_primitive(const ZScaled& s) { return to_rat(s.prim).scaled(s.scale); }

Int content_z(const PolyZ& f) {
  Int g = 0;
  for (const Int& k : f.c) g = igcd(g, k);
  return g;
}

PolyZ primitive_z(const PolyZ& f) {
  if (f.zero()) return f;
  Int g = content_z(f);
  if (sgn(f.lc()) < 0) g = -g;
  PolyZ r = f;
  for (auto& k : r.c) k = idivexact(k, g);
  return r;
}

bool divides_z(const PolyZ& d, const PolyZ& a) {
  if (a.zero()) return true;
  if (d.zero() || a.deg() < d.deg()) return false;
  // exact division attempt from the top; abort on non-divisibility
  PolyZ r = a;
  int dd = d.deg();
  while (!r.zero() && r.deg() >= dd) {
    if (!divides(d.lc(), r.lc())) return false;
    Int q = idivexact(r.lc(), d.lc());
    int k = r.deg() - dd;
    for (int i = 0; i <= dd; ++i) r.c[k + i] -= q * d.c[i];
    r.trim();
  }
  return r.zero();
}

PolyZ divexact_z(const PolyZ& a, const PolyZ& d) {
  if (a.zero()) return PolyZ();
  PolyZ r = a, q;
  int dd = d.deg();
  q.c.assign(a.deg() - dd + 1, Int(0));
  while (!r.zero() && r.deg() >= dd) {
    Int qc = idivexact(r.lc(), d.lc());
    int k = r.deg() - dd;
    q.c[k] = qc;
    for (int i = 0; i <= dd; ++i) r.c[k + i] -= qc * d.c[i];
    r.trim();
  }
  if (!r.zero()) throw math_error("inexact polynomial division");
  q.trim();
  return q;
}

FpPoly to_fp(const FpCtx& F, const PolyZ& f) {
  FpPoly r(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) r[i] = F.reduce(f.c[i]);
  fp_trim(r);
  return r;
}

namespace {

// deterministic source of ~62 bit primes
Int gcd_prime_seed() { return Int("4611686018427387847"); }

PolyZ lift_symmetric(const std::vector<Int>& c, const Int& m) {
  Int half = m / 2;
  std::vector<Int> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = c[i] > half ? c[i] - m : c[i];
  return PolyZ(std::move(out));
}

}  // namespace

PolyZ gcd_z(const PolyZ& a0, const PolyZ& b0) {
  if (a0.zero()) return primitive_z(b0);
  if (b0.zero()) return primitive_z(a0);
  PolyZ a = primitive_z(a0), b = primitive_z(b0);
  if (a.deg() < b.deg()) std::swap(a, b);
  Int lg = igcd(a.lc(), b.lc());

  Int p = gcd_prime_seed();
  int best_deg = b.deg() + 1;
  std::vector<Int> crt;     // candidate coefficients mod modulus
  Int modulus = 1;
  PolyZ candidate, prev_candidate;
  for (int iter = 0; iter < 10000; ++iter) {
    p = next_prime(p);
    FpCtx F((uint64_t)mpz_get_ui(p.get_mpz_t()));
    if (F.reduce(a.lc()) == 0 || F.reduce(b.lc()) == 0) continue;
    FpPoly g = fp_gcd(F, to_fp(F, a), to_fp(F, b));
    int dg = fp_deg(g);
    if (dg == 0) return PolyZ(Int(1));
    if (dg > best_deg) continue;  // unlucky prime
    // scale so the leading coefficient is the image of lg
    g = fp_scale(F, g, F.reduce(lg));
    if (dg < best_deg) {
      best_deg = dg;
      crt.assign(dg + 1, Int(0));
      modulus = 1;
      prev_candidate = PolyZ();
    }
    // CRT combine
    Int pz = p;
    if (modulus == 1) {
      for (int i = 0; i <= dg; ++i) crt[i] = Int((unsigned long)g[i]);
      modulus = pz;
    } else {
      Int minv;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      Int nm = modulus * pz;
      for (int i = 0; i <= dg; ++i) {
        Int gi((unsigned long)(i < (int)g.size() ? g[i] : 0));
        Int diff = ((gi - crt[i]) % pz + pz) % pz;
        crt[i] = (crt[i] + modulus * ((diff * minv) % pz)) % nm;
      }
      modulus = nm;
    }
    candidate = primitive_z(lift_symmetric(crt, modulus));
    if (candidate == prev_candidate) {
      if (divides_z(candidate, a) && divides_z(candidate, b)) return candidate;
    }
    prev_candidate = candidate;
  }
  throw math_error("modular gcd did not stabilize");
}

PolyQ GcdImpl<Rat>::run(const PolyQ& a, const PolyQ& b) {
  if (a.zero()) return monic(b);
  if (b.zero()) return monic(a);
  PolyZ g = gcd_z(to_primitive(a).prim, to_primitive(b).prim);
  return monic(to_rat(g));
}

namespace {

// resultant mod p of the images with exact degree bookkeeping done by caller
uint64_t fp_resultant(const FpCtx& F, FpPoly a, FpPoly b) {
  if (a.empty() || b.empty()) return 0;
  uint64_t r = 1;
  while (fp_deg(b) > 0) {
    FpPoly rem = fp_mod(F, a, b);
    int da = fp_deg(a), db = fp_deg(b), dr = fp_deg(rem);
    if ((da & 1) && (db & 1)) r = F.neg(r);
    if (rem.empty()) return 0;
    r = F.mul(r, F.pow(b.back(), da - dr));
    a = std::move(b);
    b = std::move(rem);
  }
  return F.mul(r, F.pow(b[0], fp_deg(a)));
}

Int hadamard_bound(const PolyZ& a, const PolyZ& b) {
  // product of 2-norm^deg(other); cheap upper estimate with ceilings
  auto norm2_sq = [](const PolyZ& f) {
    Int s = 0;
    for (const Int& k : f.c) s += k * k;
    return s;
  };
  Int na = norm2_sq(a), nb = norm2_sq(b);
  Int bound = 1;
  for (int i = 0; i < b.deg(); ++i) bound *= na;
  for (int i = 0; i < a.deg(); ++i) bound *= nb;
  return isqrt_floor(bound) + 1;
}

}  // namespace

Rat resultant(const PolyQ& aq, const PolyQ& bq) {
  if (aq.zero() || bq.zero()) return Rat(0);
  if (aq.deg() == 0) return rpow(aq.get(0), bq.deg());
  if (bq.deg() == 0) return rpow(bq.get(0), aq.deg());
  ZScaled za = to_primitive(aq), zb = to_primitive(bq);
  const PolyZ &a = za.prim, &b = zb.prim;

  Int bound = 2 * hadamard_bound(a, b) + 1;
  Int p = gcd_prime_seed();
  Int modulus = 1, acc = 0;
  int da = a.deg(), db = b.deg();
  while (modulus < bound) {
    p = next_prime(p);
    FpCtx F((uint64_t)mpz_get_ui(p.get_mpz_t()));
    FpPoly fa = to_fp(F, a), fb = to_fp(F, b);
    if (fp_deg(fa) != da || fp_deg(fb) != db) continue;  // degree dropped
    uint64_t rp = fp_resultant(F, fa, fb);
    Int pz = p, rz((unsigned long)rp);
    if (modulus == 1) {
      acc = rz;
      modulus = pz;
    } else {
      Int minv;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      Int diff = ((rz - acc) % pz + pz) % pz;
      acc = acc + modulus * ((diff * minv) % pz);
      modulus *= pz;
    }
  }
  if (acc > modulus / 2) acc -= modulus;
  return Rat(acc) * rpow(za.scale, db) * rpow(zb.scale, da);
}

Rat discriminant(const PolyQ& f) {
  if (f.deg() < 1) throw math_error("discriminant needs degree >= 1");
  Rat r = resultant(f, f.deriv());
  int d = f.deg();
  Rat s = r / f.lc();
  return (d % 4 == 2 || d % 4 == 3) ? -s : s;
}

PolyQ lagrange(const std::vector<std::pair<Rat, Rat>>& pts) {
  // Newton form
  size_t n = pts.size();
  std::vector<Rat> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n; i-- > j;)
      dd[i] = (dd[i] - dd[i - 1]) / (pts[i].first - pts[i - j].first);
  PolyQ r;
  for (size_t i = n; i-- > 0;) {
    PolyQ lin(std::vector<Rat>{-pts[i].first, Rat(1)});
    r = r * lin + PolyQ(dd[i]);
  }
  return r;
}

std::vector<SqfPart> squarefree_decomp(const PolyQ& f0) {
  std::vector<SqfPart> out;
  if (f0.deg() < 1) return out;
  PolyQ f = monic(f0);
  PolyQ g = gcd(f, f.deriv());
  PolyQ w = pdiv(f, g);
  int mult = 1;
  while (w.deg() > 0) {
    PolyQ y = gcd(w, g);
    PolyQ fac = pdiv(w, y);
    if (fac.deg() > 0) out.push_back({fac, mult});
    w = y;
    g = pdiv(g, y);
    ++mult;
  }
  return out;
}

PolyQ squarefree_part(const PolyQ& f) {
  PolyQ r(1);
  for (const auto& p : squarefree_decomp(f)) r *= p.f;
  return r;
}

}  // namespace ellrank
