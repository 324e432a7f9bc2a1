#include "quadext.hpp"

#include "fpring.hpp"

namespace ellrank {

QuadExt conj(const QuadExt& x) { return x.conj(); }

std::optional<QuadExt> sqrt_same_field(const QuadExt& x) {
  if (x.is_zero()) return QuadExt();
  if (x.rational()) {
    if (auto s = sqrt_rat(x.a)) return QuadExt(*s);
    return std::nullopt;
  }
  auto m = sqrt_rat(x.norm());
  if (!m) return std::nullopt;
  for (Rat mm : {Rat(*m), Rat(-*m)}) {
    Rat half = (x.a + mm) / 2;
    if (auto s = sqrt_rat(half)) {
      if (sgn(*s) == 0) continue;
      QuadExt r(*s, x.b / (2 * *s), x.D);
      if (r * r == x) return r;
    }
  }
  return std::nullopt;
}

std::optional<QuadExt> sqrt_in_field(const QuadExt& x, const Int& D) {
  if (!x.rational()) {
    if (x.D != D) return std::nullopt;
    return sqrt_same_field(x);
  }
  if (auto s = sqrt_rat(x.a)) return QuadExt(*s);
  if (sgn(D) != 0)
    if (auto s = sqrt_rat(x.a / Rat(D))) return QuadExt(Rat(0), *s, D);
  return std::nullopt;
}

std::optional<QuadExt> sqrt_any(const QuadExt& x) {
  if (auto r = sqrt_same_field(x)) return r;
  if (!x.rational()) return std::nullopt;
  Int nd = num(x.a) * den(x.a);
  Int k = squarefree_kernel(nd);
  Rat m2 = x.a / Rat(k);
  auto m = sqrt_rat(m2);
  if (!m) throw math_error("squarefree kernel failed");
  return QuadExt(Rat(0), *m, k);
}

int cmp(const QuadExt& x, const QuadExt& y) {
  if (x.D != y.D) return x.D < y.D ? -1 : 1;
  if (x.a != y.a) return x.a < y.a ? -1 : 1;
  if (x.b != y.b) return x.b < y.b ? -1 : 1;
  return 0;
}

PolyE to_ext(const PolyQ& f) {
  std::vector<QuadExt> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) c[i] = QuadExt(f.c[i]);
  return PolyE(std::move(c));
}

PolyQ rational_part_poly(const PolyE& f) {
  std::vector<Rat> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (!f.c[i].rational()) throw math_error("coefficient not rational");
    c[i] = f.c[i].a;
  }
  return PolyQ(std::move(c));
}

PolyE conj(const PolyE& f) {
  PolyE r = f;
  for (auto& k : r.c) k = k.conj();
  return r;
}

namespace {

Int field_of(const PolyE& f) {
  Int D = 0;
  for (const auto& k : f.c)
    if (sgn(k.D) != 0) {
      if (sgn(D) != 0 && D != k.D) throw math_error("mixed quadratic fields");
      D = k.D;
    }
  return D;
}

// integral model: coefficient x + y*sqrt(D) as a pair of Ints
struct ZDPoly {
  std::vector<Int> x, y;
};

ZDPoly clear_denoms(const PolyE& f) {
  Int l = 1;
  for (const auto& k : f.c) l = ilcm(ilcm(l, den(k.a)), den(k.b));
  ZDPoly r;
  r.x.resize(f.c.size());
  r.y.resize(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) {
    r.x[i] = num(f.c[i].a) * idivexact(l, den(f.c[i].a));
    r.y[i] = num(f.c[i].b) * idivexact(l, den(f.c[i].b));
  }
  Int g = 0;
  for (size_t i = 0; i < r.x.size(); ++i) g = igcd(igcd(g, r.x[i]), r.y[i]);
  if (sgn(g) != 0 && g != 1)
    for (size_t i = 0; i < r.x.size(); ++i) {
      r.x[i] = idivexact(r.x[i], g);
      r.y[i] = idivexact(r.y[i], g);
    }
  return r;
}

std::optional<Rat> rat_reconstruct(const Int& r, const Int& m) {
  Int bnd = isqrt_floor(m / 2);
  Int r0 = m, r1 = ((r % m) + m) % m, t0 = 0, t1 = 1;
  while (r1 > bnd) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (sgn(t1) == 0) return std::nullopt;
  Int n = r1, d = t1;
  if (sgn(d) < 0) { n = -n; d = -d; }
  if (d > bnd || igcd(n, d) != 1) return std::nullopt;
  return ratio(n, d);
}

Int crt_pair(const Int& a, const Int& m, const Int& b, const Int& p) {
  Int minv;
  mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
  Int diff = ((b - a) % p + p) % p;
  return a + m * ((diff * minv) % p);
}

}  // namespace

PolyE GcdImpl<QuadExt>::run(const PolyE& a0, const PolyE& b0) {
  if (a0.zero()) return monic(b0);
  if (b0.zero()) return monic(a0);
  Int D = 0;
  {
    Int Da = field_of(a0), Db = field_of(b0);
    if (sgn(Da) != 0 && sgn(Db) != 0 && Da != Db) throw math_error("mixed quadratic fields");
    D = sgn(Da) != 0 ? Da : Db;
  }
  if (sgn(D) == 0)
    return to_ext(gcd(rational_part_poly(a0), rational_part_poly(b0)));
  if (std::min(a0.deg(), b0.deg()) <= 8) return gcd_euclid(a0, b0);

  ZDPoly a = clear_denoms(a0), b = clear_denoms(b0);
  int da = a0.deg(), db = b0.deg();

  // fixed walk over ~62 bit primes where D stays inert
  Int p("4611686018427387847");
  int best_deg = std::min(da, db) + 1;
  std::vector<Int> cx, cy;
  Int modulus = 1;
  PolyE prev;
  bool have_prev = false;
  for (int iter = 0; iter < 10000; ++iter) {
    p = next_prime(p);
    uint64_t pu = (uint64_t)mpz_get_ui(p.get_mpz_t());
    FpCtx F(pu);
    uint64_t dmod = F.reduce(D);
    if (dmod == 0) continue;
    if (F.pow(dmod, (pu - 1) / 2) != pu - 1) continue;  // need D inert
    Fp2Ctx F2(pu, dmod);
    auto img = [&](const ZDPoly& f, int dg) {
      Fp2Poly r(dg + 1);
      for (int i = 0; i <= dg; ++i) r[i] = {F.reduce(f.x[i]), F.reduce(f.y[i])};
      fp2_trim(r);
      return r;
    };
    Fp2Poly fa = img(a, da), fb = img(b, db);
    if (fp2_deg(fa) != da || fp2_deg(fb) != db) continue;
    Fp2Poly g = fp2_gcd(F2, fa, fb);
    int dg = fp2_deg(g);
    if (dg == 0) return PolyE(QuadExt(1));
    if (dg > best_deg) continue;
    if (dg < best_deg) {
      best_deg = dg;
      cx.assign(dg + 1, Int(0));
      cy.assign(dg + 1, Int(0));
      modulus = 1;
      have_prev = false;
    }
    if (modulus == 1) {
      for (int i = 0; i <= dg; ++i) {
        cx[i] = Int((unsigned long)g[i].first);
        cy[i] = Int((unsigned long)g[i].second);
      }
      modulus = p;
    } else {
      for (int i = 0; i <= dg; ++i) {
        cx[i] = crt_pair(cx[i], modulus, Int((unsigned long)g[i].first), p);
        cy[i] = crt_pair(cy[i], modulus, Int((unsigned long)g[i].second), p);
      }
      modulus *= p;
    }
    // attempt rational reconstruction of the monic gcd
    std::vector<QuadExt> cand(best_deg + 1);
    bool ok = true;
    for (int i = 0; i <= best_deg && ok; ++i) {
      auto rx = rat_reconstruct(cx[i], modulus);
      auto ry = rat_reconstruct(cy[i], modulus);
      if (!rx || !ry)
        ok = false;
      else
        cand[i] = QuadExt(*rx, *ry, D);
    }
    if (!ok) continue;
    PolyE candidate{std::vector<QuadExt>(cand)};
    if (have_prev && candidate == prev) {
      if (pmod(a0, candidate).zero() && pmod(b0, candidate).zero())
        return candidate;
    }
    prev = std::move(candidate);
    have_prev = true;
  }
  throw math_error("quadratic field gcd did not stabilize");
}

}  // namespace ellrank
