#include "polyio.hpp"

#include <cctype>

namespace ellrank {

std::string fmt(const Rat& k) { return str(k); }

namespace {

// one monomial, sign handled by the caller
std::string term_str(const std::string& coeff, bool coeff_is_one,
                     const std::string& var, int power) {
  if (power == 0) return coeff;
  std::string v = power == 1 ? var : var + "^" + std::to_string(power);
  if (coeff_is_one) return v;
  return coeff + "*" + v;
}

struct TermParts {
  bool neg;
  std::string body;
};

TermParts rat_term(const Rat& k, const std::string& var, int power) {
  Rat a = k < 0 ? Rat(-k) : k;
  return {k < 0, term_str(str(a), a == 1, var, power)};
}

std::string sqrt_str(const Int& D) { return "sqrt(" + str(D) + ")"; }

// inner body of a quadratic irrationality, no outer parentheses
std::string quad_body(const QuadExt& k) {
  std::string out;
  if (sgn(k.a) != 0) out = str(k.a);
  if (sgn(k.b) != 0) {
    Rat babs = k.b < 0 ? Rat(-k.b) : k.b;
    std::string t = babs == 1 ? sqrt_str(k.D) : str(babs) + "*" + sqrt_str(k.D);
    if (out.empty())
      out = (sgn(k.b) < 0 ? "-" : "") + t;
    else
      out += (sgn(k.b) < 0 ? " - " : " + ") + t;
  }
  if (out.empty()) out = "0";
  return out;
}

TermParts ext_term(const QuadExt& k, const std::string& var, int power) {
  if (k.rational()) return rat_term(k.a, var, power);
  if (sgn(k.a) == 0) {
    // pure multiple of sqrt(D): print without parentheses
    Rat babs = k.b < 0 ? Rat(-k.b) : k.b;
    std::string coeff = babs == 1 ? sqrt_str(k.D) : str(babs) + "*" + sqrt_str(k.D);
    return {k.b < 0, term_str(coeff, false, var, power)};
  }
  return {false, term_str("(" + quad_body(k) + ")", false, var, power)};
}

template <class K, class TermFn>
std::string fmt_poly(const Poly<K>& f, const std::string& var, TermFn term) {
  if (f.zero()) return "0";
  std::string out;
  for (int i = f.deg(); i >= 0; --i) {
    K k = f.get(i);
    if (k == K(0)) continue;
    TermParts tp = term(k, var, i);
    if (out.empty())
      out = (tp.neg ? "-" : "") + tp.body;
    else
      out += (tp.neg ? " - " : " + ") + tp.body;
  }
  return out;
}

}  // namespace

std::string fmt(const QuadExt& k) { return quad_body(k); }

std::string fmt(const PolyQ& f, const std::string& var) {
  return fmt_poly(f, var, rat_term);
}

std::string fmt(const PolyE& f, const std::string& var) {
  return fmt_poly(f, var, ext_term);
}

std::string fmt(const RatFunc<Rat>& f, const std::string& var) {
  if (f.is_poly()) return fmt(f.n.scaled(Rat(1) / f.d.get(0)), var);
  return "(" + fmt(f.n, var) + ")/(" + fmt(f.d, var) + ")";
}

std::string fmt(const RatFunc<QuadExt>& f, const std::string& var) {
  if (f.is_poly()) return fmt(f.n.scaled(QuadExt(1) / f.d.get(0)), var);
  return "(" + fmt(f.n, var) + ")/(" + fmt(f.d, var) + ")";
}

namespace {

struct Parser {
  const std::string& s;
  const std::string& var;
  size_t pos = 0;

  using RF = RatFunc<QuadExt>;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw math_error("parse error at offset " + std::to_string(pos) + ": " + what);
  }

  RF expr() {
    RF r = peek() == '-' ? (eat('-'), -term()) : (eat('+'), term());
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  RF term() {
    RF r = power();
    for (;;) {
      if (eat('*'))
        r *= power();
      else if (eat('/'))
        r /= power();
      else
        return r;
    }
  }

  RF power() {
    RF base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      if (start == pos) fail("exponent expected");
      long e = std::stol(s.substr(start, pos - start));
      return rpowf(base, e);
    }
    return base;
  }

  RF atom() {
    skip();
    if (eat('-')) return -atom();
    if (eat('(')) {
      RF r = expr();
      if (!eat(')')) fail("missing )");
      return r;
    }
    if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      return RF(QuadExt(Rat(Int(s.substr(start, pos - start)))));
    }
    if (s.compare(pos, 5, "sqrt(") == 0) {
      pos += 5;
      skip();
      bool neg = eat('-');
      skip();
      size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      if (start == pos) fail("sqrt argument expected");
      Int arg(s.substr(start, pos - start));
      if (neg) arg = -arg;
      if (!eat(')')) fail("missing ) after sqrt");
      if (sgn(arg) == 0) return RF(QuadExt(0));
      Int D = squarefree_kernel(arg);
      Int m2 = idivexact(arg, D);
      auto m = sqrt_int(m2);
      if (!m) throw math_error("sqrt argument not normalizable");
      return RF(QuadExt(Rat(0), Rat(*m), D));
    }
    if (s.compare(pos, var.size(), var) == 0) {
      pos += var.size();
      return RF::x();
    }
    fail("unexpected token");
  }

  RF run() {
    RF r = expr();
    skip();
    if (pos != s.size()) fail("trailing input");
    return r;
  }
};

}  // namespace

RatFunc<QuadExt> parse_expr(const std::string& s, const std::string& var) {
  Parser p{s, var};
  return p.run();
}

RatFunc<Rat> rational_part(const RatFunc<QuadExt>& f) {
  return RatFunc<Rat>(rational_part_poly(f.n), rational_part_poly(f.d));
}

RatFunc<QuadExt> to_ext(const RatFunc<Rat>& f) {
  return RatFunc<QuadExt>(to_ext(f.n), to_ext(f.d));
}

PolyQ parse_polyq(const std::string& s, const std::string& var) {
  RatFunc<Rat> f = rational_part(parse_expr(s, var));
  if (!f.is_poly()) throw math_error("expected a polynomial");
  return f.n.scaled(Rat(1) / f.d.get(0));
}

PolyE parse_polye(const std::string& s, const std::string& var) {
  RatFunc<QuadExt> f = parse_expr(s, var);
  if (!f.is_poly()) throw math_error("expected a polynomial");
  return f.n.scaled(QuadExt(1) / f.d.get(0));
}

QuadExt parse_quadext(const std::string& s) {
  PolyE f = parse_polye(s, "@");
  if (f.deg() > 0) throw math_error("expected a constant");
  return f.get(0);
}

RatFunc<Rat> parse_ratfunc_q(const std::string& s, const std::string& var) {
  return rational_part(parse_expr(s, var));
}

RatFunc<QuadExt> parse_ratfunc_e(const std::string& s, const std::string& var) {
  return parse_expr(s, var);
}

}  // namespace ellrank
