#include "refvals.hpp"

namespace ellrank::ref {

namespace {

// x^0 .. x^4
const char* const kQuarticNagao[5] = {
    "14017536*t^6 - 247954636800*t^4 + 1388825681338368*t^2 + 6473450277365760000",
    "4205260800*t^4 - 46063725926400*t^2 - 443009190070886400",
    "-28035072*t^4 + 617005209600*t^2 + 10445363957523456",
    "-4205260800*t^2 - 99527168931840",
    "14017536*t^2 + 330112972800",
};

const char* const kQuarticMestre[5] = {
    "429*t^6 - 268748*t^4 + 53200096*t^2 - 3035397056",
    "5434*t^4 - 3637984*t^2 + 539121408",
    "-858*t^4 - 2451*t^2 + 4888624",
    "-5434*t^2 - 4956000",
    "429*t^2 + 213040",
};

const char* const kCurveA =
    "-432*u^4 - 4435200*u^3 + 38353513056*u^2 - 18899197014000*u - 340079781902569707";
const char* const kCurveB =
    "3456*u^6 + 53222400*u^5 - 870054636672*u^4 + 5893342291009600*u^3 - "
    "18532375351306853196*u^2 + 7556017995191414902800*u + 76302327326969661771531494";

const char* const kZeroY = "836160*t^2 - 87059232*t + 2544297600";

const char* const kQ14X =
    "12*u^2 + (129032 + 27432*sqrt(-3))*u + (-757109813 - 168316272*sqrt(-3))";
const char* const kQ14Y =
    "(164592 + 404592*sqrt(-3))*u^2 + (1518893856 - 3588498678*sqrt(-3))*u + "
    "(-15516067218048 + 7021689895536*sqrt(-3))";

std::array<FuncQ, 5> parse5(const char* const (&src)[5]) {
  std::array<FuncQ, 5> a;
  for (int i = 0; i < 5; ++i) a[i] = FuncQ(parse_polyq(src[i], "t"));
  return a;
}

}  // namespace

MestreSeed seed_nagao() { return {{Rat(148), Rat(116), Rat(104), Rat(57), Rat(25), Rat(0)}}; }
MestreSeed seed_mestre() { return {{Rat(-17), Rat(-16), Rat(10), Rat(11), Rat(14), Rat(17)}}; }

std::array<FuncQ, 5> quartic_nagao() {
  static const std::array<FuncQ, 5> a = parse5(kQuarticNagao);
  return a;
}

std::array<FuncQ, 5> quartic_mestre() {
  static const std::array<FuncQ, 5> a = parse5(kQuarticMestre);
  return a;
}

FuncQ scale_nagao() { return FuncQ(PolyQ(1), PolyQ::mono(Rat(1), 2)); }
FuncQ scale_mestre() { return FuncQ(PolyQ(Rat(4, 81)), PolyQ::mono(Rat(1), 2)); }

ConicParam conic_nagao() {
  ConicParam cp;
  cp.t = parse_ratfunc_q("(23550 - z^2)/(2*z)", "z");
  cp.u = parse_ratfunc_q("3744*(z^2 + 23550)/(2*z)", "z");
  return cp;
}

ConicParam conic_mestre() {
  ConicParam cp;
  cp.t = parse_ratfunc_q("(6*z^2 - 956*z + 2574)/(z^2 - 429)", "z");
  cp.u = parse_ratfunc_q("(205062 + 478*z^2 - 5148*z)/(z^2 - 429)", "z");
  return cp;
}

PolyQ curve_A() {
  static const PolyQ A = parse_polyq(kCurveA, "u");
  return A;
}

PolyQ curve_B() {
  static const PolyQ B = parse_polyq(kCurveB, "u");
  return B;
}

PolyQ zero_y() { return parse_polyq(kZeroY, "t"); }

FuncQ extra_x() { return parse_ratfunc_q("(t + 703)/15", "t"); }

FuncQ extra_y() {
  // scaled by 1248 so the section satisfies the model equation exactly
  return parse_ratfunc_q("1248*(-224*t^3 - 844*t^2 + 900484*t + 2161725)/75", "t");
}

PolyE q14_x() { return parse_polye(kQ14X, "u"); }
PolyE q14_y() { return parse_polye(kQ14Y, "u"); }

int64_t surface_count(int p, int n) {
  if (p == 53 && n == 1) return 3593;
  if (p == 53 && n == 2) return 7945269;
  if (p == 53 && n == 3) return 22167016292;
  if (p == 71 && n == 1) return 6096;
  if (p == 71 && n == 2) return 25498920;
  throw math_error("no reference count for this field");
}

PolyQ cofactor53() { return parse_polyq("X^3 + 118*X^2 + 6254*X + 148877", "X"); }

std::pair<PolyQ, PolyQ> cofactor53_split() {
  return {parse_polyq("X + 53", "X"), parse_polyq("X^2 + 65*X + 2809", "X")};
}

}  // namespace ellrank::ref
