#pragma once
#include <string>

#include "quadext.hpp"
#include "ratfunc.hpp"

namespace ellrank {

std::string fmt(const Rat& k);
std::string fmt(const QuadExt& k);
std::string fmt(const PolyQ& f, const std::string& var);
std::string fmt(const PolyE& f, const std::string& var);
std::string fmt(const RatFunc<Rat>& f, const std::string& var);
std::string fmt(const RatFunc<QuadExt>& f, const std::string& var);

// Expression grammar over +, -, *, /, ^, integers, one variable, and
// sqrt(<integer>); evaluates in the rational function field.
RatFunc<QuadExt> parse_expr(const std::string& s, const std::string& var);

PolyQ parse_polyq(const std::string& s, const std::string& var);
PolyE parse_polye(const std::string& s, const std::string& var);
QuadExt parse_quadext(const std::string& s);
RatFunc<Rat> parse_ratfunc_q(const std::string& s, const std::string& var);
RatFunc<QuadExt> parse_ratfunc_e(const std::string& s, const std::string& var);

RatFunc<Rat> rational_part(const RatFunc<QuadExt>& f);
RatFunc<QuadExt> to_ext(const RatFunc<Rat>& f);

}  // namespace ellrank
