#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fq.hpp"

using namespace ellrank;

TEST_CASE("prime field matches modular arithmetic") {
  FqField F(53, 1);
  CHECK(F.q == 53);
  for (uint32_t a = 0; a < 53; ++a)
    for (uint32_t b = 0; b < 53; ++b) {
      CHECK(F.add(a, b) == (a + b) % 53);
      CHECK(F.mul(a, b) == (a * b) % 53);
    }
  for (uint32_t a = 1; a < 53; ++a) {
    CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.add(a, F.neg(a)) == 0);
    // Euler criterion
    int eu = F.pow(a, 26) == 1 ? 1 : -1;
    CHECK(F.chi(a) == eu);
  }
  CHECK(F.chi(0) == 0);
}

TEST_CASE("quadratic extension field axioms") {
  FqField F(7, 2);
  CHECK(F.q == 49);
  // commutativity and distributivity over all pairs, associativity sampled
  for (uint32_t a = 0; a < 49; ++a)
    for (uint32_t b = 0; b < 49; ++b) {
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.mul(a, F.add(b, (a * 7 + b) % 49)) ==
            F.add(F.mul(a, b), F.mul(a, (a * 7 + b) % 49)));
    }
  for (uint32_t a = 1; a < 49; ++a) {
    CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(a, 49) == a);  // Frobenius fixes nothing extra at full power
  }
  int squares = 0;
  for (uint32_t a = 1; a < 49; ++a)
    if (F.chi(a) == 1) ++squares;
  CHECK(squares == 24);
  // chi is multiplicative
  for (uint32_t a = 1; a < 49; ++a)
    for (uint32_t b = 1; b < 49; ++b) CHECK(F.chi(F.mul(a, b)) == F.chi(a) * F.chi(b));
}

TEST_CASE("packed addition agrees with field addition") {
  FqField F(53, 3);
  CHECK(F.q == 148877u);
  uint32_t xs[] = {0, 1, 52, 53, 2808, 2809, 148876, 77777, 3141, 59265};
  for (uint32_t a : xs)
    for (uint32_t b : xs) {
      CHECK(F.unpack(F.padd(F.pack(a), F.pack(b))) == F.add(a, b));
      CHECK(F.unpack(F.pack(a)) == a);
    }
}

TEST_CASE("cubic extension sanity") {
  FqField F(5, 3);
  CHECK(F.q == 125);
  for (uint32_t a = 0; a < 125; ++a) CHECK(F.pow(a, 125) == a);
  // the modulus has no roots in the prime field
  std::vector<uint32_t> m(F.modulus.begin(), F.modulus.end());
  for (uint32_t t = 0; t < 5; ++t) CHECK(F.eval(m, t) != 0);
  // w itself, code p, satisfies the modulus
  CHECK(F.eval(m, 5) == 0);
  CHECK(F.from_digits({0, 1}) == 5);
}

TEST_CASE("integer embedding is a homomorphism") {
  FqField F(11, 2);
  for (long a = -30; a <= 30; ++a)
    for (long b = -5; b <= 5; ++b) {
      CHECK(F.add(F.from_int(Int(a)), F.from_int(Int(b))) == F.from_int(Int(a + b)));
      CHECK(F.mul(F.from_int(Int(a)), F.from_int(Int(b))) == F.from_int(Int(a * b)));
    }
  CHECK(F.from_rat(ratio(Int(1), Int(2))) == F.inv(2));
}

TEST_CASE("horner evaluation") {
  FqField F(13, 1);
  // 3 + 2 t + t^2 at t = 5 is 38 = 12
  CHECK(F.eval({3, 2, 1}, 5) == 12);
}
