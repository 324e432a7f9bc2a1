#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ellcurve.hpp"

namespace ellrank {

// Place of the rational function field: a monic irreducible polynomial, or
// the degree valuation at infinity.
struct Place {
  PolyQ pi;
  bool infinite = false;

  static Place finite(PolyQ p) {
    Place v;
    v.pi = std::move(p);
    return v;
  }
  static Place at_infinity() {
    Place v;
    v.infinite = true;
    return v;
  }
  int degree() const { return infinite ? 1 : pi.deg(); }
  bool operator==(const Place& o) const {
    return infinite == o.infinite && (infinite || pi == o.pi);
  }
};

long place_valuation(const PolyQ& f, const PolyQ& pi);
long place_valuation(const FuncQ& f, const Place& v);

enum class FibreSymbol { I, II, III, IV, Istar, IVstar, IIIstar, IIstar };

struct FibreType {
  FibreSymbol sym = FibreSymbol::I;
  int n = 0;  // index of I_n and I_n*
  std::optional<bool> split;  // multiplicative fibres over small residue fields

  int components() const;  // m_v
  int euler() const;       // e_v
  bool reducible() const { return components() > 1; }
  bool multiplicative() const { return sym == FibreSymbol::I && n > 0; }
  std::string name() const;

  bool operator==(const FibreType& o) const { return sym == o.sym && n == o.n; }
  bool operator!=(const FibreType& o) const { return !(*this == o); }
};

// closed-form reduction table on the valuations of c4 and of the
// discriminant; valid away from residue characteristic 2 and 3
FibreType type_from_valuations(long vc4, long vdisc);

FibreType local_type(const WCurve<FuncQ>& c, const Place& v);

struct FibreEntry {
  Place place;
  FibreType type;
};

struct FibreConfiguration {
  std::vector<FibreEntry> entries;  // every place with positive disc valuation
  int chi = 0;
  bool rational_surface = false;

  long component_excess() const;  // sum of deg(v) * (m_v - 1)
};

FibreConfiguration fibre_configuration(const WCurve<FuncQ>& c);

bool is_rational_surface(const WCurve<FuncQ>& c);

// Mordell-Weil rank from the Neron-Severi rank and the fibre components
long shioda_tate_rank(const FibreConfiguration& config, long rank_ns);

}  // namespace ellrank
