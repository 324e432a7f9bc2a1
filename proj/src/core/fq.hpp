#pragma once
#include <cstdint>
#include <vector>

#include "intx.hpp"

namespace ellrank {

// The field with p^n elements, p an odd prime <= 113, n <= 4.
//
// Elements travel in two forms:
//   dense: an index in [0, q), digit d0 + p*d1 + ... in mixed radix p
//   packed: one digit per byte of a uint32, low digit in the low byte
// Dense codes index the character and log tables; packed codes support
// branch-free digitwise addition. Adding 1 to a dense code walks through
// a coset of the prime field, so coset k covers codes [k*p, (k+1)*p).
class FqField {
 public:
  FqField(uint32_t p, int n);

  uint32_t p, q;
  int n;
  std::vector<uint32_t> modulus;  // monic, ascending, length n+1

  uint32_t pack(uint32_t idx) const {
    uint32_t pk = 0;
    for (int i = 0; i < n; ++i) {
      pk |= (idx % p) << (8 * i);
      idx /= p;
    }
    return pk;
  }
  uint32_t unpack(uint32_t pk) const {
    uint32_t idx = lut0_[pk & 0xff];
    if (n > 1) idx += lut1_[(pk >> 8) & 0xff];
    if (n > 2) idx += lut2_[(pk >> 16) & 0xff];
    if (n > 3) idx += lut3_[(pk >> 24) & 0xff];
    return idx;
  }

  // digitwise sum of packed codes, each lane reduced mod p
  uint32_t padd(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    uint32_t t = s + bias_;
    uint32_t m = (t & himask_) >> 7;
    return s - m * p;
  }

  uint32_t add(uint32_t a, uint32_t b) const { return unpack(padd(pack(a), pack(b))); }
  uint32_t neg(uint32_t a) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t e = log_[a] + log_[b];
    if (e >= q - 1) e -= q - 1;
    return alog_[e];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  // quadratic character: 0 at 0, 1 on squares, -1 elsewhere
  int chi(uint32_t a) const { return chi_[a]; }
  const int8_t* chi_data() const { return chi_.data(); }

  uint32_t from_int(const Int& v) const;
  uint32_t from_rat(const Rat& v) const;
  // element from prime-field digits (value of w fixed by the modulus)
  uint32_t from_digits(const std::vector<uint32_t>& d) const;

  // Horner evaluation of a polynomial given by dense-code coefficients
  uint32_t eval(const std::vector<uint32_t>& coeffs, uint32_t t) const;

  uint32_t generator() const { return gen_; }

 private:
  uint32_t bias_, himask_, gen_;
  uint32_t lut0_[128], lut1_[128], lut2_[128], lut3_[128];
  std::vector<uint32_t> log_, alog_;
  std::vector<int8_t> chi_;
};

}  // namespace ellrank
