#pragma once
#include "polyq.hpp"

namespace ellrank {

struct QFactor {
  PolyQ f;  // monic irreducible
  int mult;
};

// factorization of nonzero f over the rationals: f = unit * prod f_i^m_i
struct QFactorization {
  Rat unit;
  std::vector<QFactor> factors;  // sorted by (degree, coefficients)
};

QFactorization factor_poly(const PolyQ& f);

// roots in the rationals, with multiplicity
std::vector<std::pair<Rat, int>> rational_roots(const PolyQ& f);

}  // namespace ellrank
