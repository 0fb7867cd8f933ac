#include "epilab/fraction.hpp"

namespace epilab {

Frac::Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != 1 || den_.nvars() != 1 || num_.vars() != den_.vars() || num_.ring() != den_.ring())
    throw AlgebraError("variable mismatch: fraction needs univariate polynomials over one ring");
  if (auto w = mccoy_annihilator(den_)) throw ZeroDivisorDenominator(*w);
}

Frac::Frac(Poly num, Poly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

Frac Frac::product_denominator(Poly num, const Poly& d1, const Poly& d2) {
  Poly d = d1 * d2;
  if (!is_regular_poly(d)) throw InvariantViolation("product of regular denominators is a zero-divisor");
  return Frac(std::move(num), std::move(d), Trusted{});
}

Frac Frac::operator+(const Frac& rhs) const {
  return product_denominator(num_ * rhs.den_ + rhs.num_ * den_, den_, rhs.den_);
}

Frac Frac::operator-() const { return Frac(-num_, den_, Trusted{}); }

Frac Frac::operator-(const Frac& rhs) const { return *this + (-rhs); }

Frac Frac::operator*(const Frac& rhs) const { return product_denominator(num_ * rhs.num_, den_, rhs.den_); }

bool Frac::equals(const Frac& rhs) const { return num_ * rhs.den_ == rhs.num_ * den_; }

std::string Frac::to_string() const {
  const Poly one = Poly::constant(ring(), num_.vars(), ring()->one());
  if (den_ == one) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Frac embed(const Poly& f) { return Frac(f, Poly::constant(f.ring(), f.vars(), f.ring()->one())); }

Frac invert(const Frac& q) {
  if (auto w = mccoy_annihilator(q.num())) throw NotInvertible(*w);
  return Frac(q.den(), q.num());
}

Frac parse_frac(const std::string& text, const RingPtr& ring) {
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(' || text[i] == '[') ++depth;
    if (text[i] == ')' || text[i] == ']') --depth;
    if (text[i] == '/' && depth == 0) {
      if (slash != std::string::npos) throw AlgebraError("fraction \"" + text + "\" has more than one '/'");
      slash = i;
    }
  }
  const std::vector<std::string> vars{"x"};
  if (slash == std::string::npos) return embed(parse_poly(text, ring, vars));
  return Frac(parse_poly(text.substr(0, slash), ring, vars), parse_poly(text.substr(slash + 1), ring, vars));
}

Denominator construct_denominator(const std::vector<Poly>& fs) {
  RegularElement r = regular_element(fs);
  Poly g = r.element;
  return Denominator{std::move(g), std::move(r)};
}

}  // namespace epilab
