#pragma once
#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellrank {

using Int = mpz_class;
using Rat = mpq_class;

struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int igcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int ilcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int ipow(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline Int idivexact(const Int& a, const Int& b) {
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int isqrt_floor(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_square(const Int& a) {
  return sgn(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

std::optional<Int> sqrt_int(const Int& a);

inline bool is_odd(const Int& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

// valuation of a at prime p; a must be nonzero
int valuation(Int a, const Int& p);

inline bool fits_long(const Int& a) { return mpz_fits_slong_p(a.get_mpz_t()) != 0; }
inline long to_long(const Int& a) {
  if (!fits_long(a)) throw math_error("integer does not fit a machine word");
  return mpz_get_si(a.get_mpz_t());
}

bool probab_prime(const Int& n);
Int next_prime(const Int& n);

// prime factorization of |n|, n nonzero, primes ascending
std::vector<std::pair<Int, int>> factor_int(Int n);

// largest squarefree divisor with the sign of n
Int squarefree_kernel(const Int& n);

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

inline Rat ratio(const Int& n, const Int& d) {
  if (sgn(d) == 0) throw math_error("division by zero");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat rpow(const Rat& a, long e);
std::optional<Rat> sqrt_rat(const Rat& a);
int valuation(const Rat& r, const Int& p);

// nearest multiple of 1/N (ties rounded up); N > 0
Rat round_to_multiple(const Rat& x, const Int& N);

inline std::string str(const Int& a) { return a.get_str(); }
inline std::string str(const Rat& a) {
  return den(a) == 1 ? num(a).get_str() : a.get_str();
}

}  // namespace ellrank
