#pragma once
#include <cstdint>

#include "mestre.hpp"

namespace ellrank::ref {

// The two published seed families.
MestreSeed seed_nagao();
MestreSeed seed_mestre();

// Published quartic models, coefficients of x^0 .. x^4 over Q(t), and the
// scales relating them to the raw split remainders.
std::array<FuncQ, 5> quartic_nagao();
std::array<FuncQ, 5> quartic_mestre();
FuncQ scale_nagao();   // 1/t^2
FuncQ scale_mestre();  // 4/(81 t^2)

// Published conic substitutions t(z), u(z) for the two leading conics.
ConicParam conic_nagao();
ConicParam conic_mestre();

// Minimal Weierstrass model y^2 = x^3 + A(u) x + B(u) of the first quartic,
// with u = t^2.
PolyQ curve_A();
PolyQ curve_B();

// y at the section x = t of the first quartic; the base point of the
// Jacobian map.
PolyQ zero_y();

// The extra section of the first quartic beyond the twelve seed sections.
FuncQ extra_x();  // (t + 703)/15
FuncQ extra_y();

// Point on the minimal model with coordinates in Q(sqrt(-3))[u].
PolyE q14_x();
PolyE q14_y();

// Surface point counts over F_{p^n} for the minimal model's elliptic surface.
int64_t surface_count(int p, int n);

// The one consistent eigenvalue cofactor at p = 53 and its factorization.
PolyQ cofactor53();
std::pair<PolyQ, PolyQ> cofactor53_split();

}  // namespace ellrank::ref
