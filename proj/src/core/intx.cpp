#include "intx.hpp"

#include <algorithm>

namespace ellrank {

std::optional<Int> sqrt_int(const Int& a) {
  if (sgn(a) < 0) return std::nullopt;
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return r;
}

int valuation(Int a, const Int& p) {
  if (sgn(a) == 0) throw math_error("valuation of zero");
  int v = 0;
  Int q, r;
  for (;;) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (sgn(r) != 0) return v;
    a = q;
    ++v;
  }
}

bool probab_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Int next_prime(const Int& n) {
  Int r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

// Pollard rho (Brent). n odd composite, not a prime power of interest; returns
// a nontrivial factor.
Int rho_split(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1, diff;
    unsigned long power = 1, lam = 0;
    auto step = [&](Int& v) {
      v = (v * v + c) % n;
    };
    Int saved = x;
    while (d == 1) {
      if (lam == power) {
        saved = x;
        power *= 2;
        lam = 0;
      }
      step(x);
      ++lam;
      diff = x - saved;
      if (sgn(diff) == 0) break;  // cycle without factor, try next c
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      d = igcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(Int n, std::vector<Int>& primes) {
  if (n == 1) return;
  if (probab_prime(n)) {
    primes.push_back(n);
    return;
  }
  if (is_square(n)) {
    Int r = isqrt_floor(n);
    factor_rec(r, primes);
    factor_rec(r, primes);
    return;
  }
  Int d = rho_split(n);
  factor_rec(d, primes);
  factor_rec(idivexact(n, d), primes);
}

}  // namespace

std::vector<std::pair<Int, int>> factor_int(Int n) {
  if (sgn(n) == 0) throw math_error("factoring zero");
  if (sgn(n) < 0) n = -n;
  std::vector<Int> primes;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.push_back(Int(p));
      n = idivexact(n, Int(p));
    }
  }
  // wheel over 30 for trial division below 1e6
  static const int wheel[] = {1, 7, 11, 13, 17, 19, 23, 29};
  for (long base = 0; base < 1000000 && n > 1; base += 30) {
    for (int w : wheel) {
      long p = base + w;
      if (p < 17) continue;
      if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        Int pp(p);
        if (!probab_prime(pp)) continue;  // composite wheel slot, skip
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
          primes.push_back(pp);
          n = idivexact(n, pp);
        }
      }
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, int>> out;
  for (const Int& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.push_back({p, 1});
  }
  return out;
}

Int squarefree_kernel(const Int& n) {
  Int k = 1;
  for (const auto& [p, e] : factor_int(n))
    if (e % 2) k *= p;
  return sgn(n) < 0 ? -k : k;
}

Rat rpow(const Rat& a, long e) {
  if (e == 0) return Rat(1);
  if (sgn(a) == 0) {
    if (e < 0) throw math_error("division by zero");
    return Rat(0);
  }
  Rat base = e < 0 ? Rat(1) / a : a;
  unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(), k);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(), k);
  return r;
}

std::optional<Rat> sqrt_rat(const Rat& a) {
  if (sgn(a) < 0) return std::nullopt;
  auto n = sqrt_int(num(a));
  if (!n) return std::nullopt;
  auto d = sqrt_int(den(a));
  if (!d) return std::nullopt;
  return ratio(*n, *d);
}

int valuation(const Rat& r, const Int& p) {
  if (sgn(r) == 0) throw math_error("valuation of zero");
  int v = 0;
  if (den(r) != 1) v -= valuation(den(r), p);
  if (num(r) != 0) v += valuation(num(r), p);
  return v;
}

Rat round_to_multiple(const Rat& x, const Int& N) {
  // nearest integer to x*N is floor(x*N + 1/2)
  Rat y = x * Rat(N) + ratio(Int(1), Int(2));
  Int k;
  mpz_fdiv_q(k.get_mpz_t(), num(y).get_mpz_t(), den(y).get_mpz_t());
  return ratio(k, N);
}

}  // namespace ellrank
