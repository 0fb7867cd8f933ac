#include "epilab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

namespace epilab {

bool GrLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return a > b;
}

Poly::Poly(RingPtr ring, std::vector<std::string> vars) : ring_(std::move(ring)), vars_(std::move(vars)) {
  if (!ring_) throw AlgebraError("polynomial without a coefficient ring");
}

Poly Poly::constant(RingPtr ring, std::vector<std::string> vars, const Elem& c) {
  const std::size_t n = vars.size();
  return monomial(std::move(ring), std::move(vars), Exponent(n, 0), c);
}

Poly Poly::monomial(RingPtr ring, std::vector<std::string> vars, Exponent e, const Elem& c) {
  Poly p(std::move(ring), std::move(vars));
  if (e.size() != p.nvars()) throw AlgebraError("variable mismatch: exponent has wrong length");
  p.ring_->additive().check(c);
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(RingPtr ring, std::vector<std::string> vars, std::size_t index) {
  Exponent e(vars.size(), 0);
  e.at(index) = 1;
  const Elem one = ring->one();
  return monomial(std::move(ring), std::move(vars), std::move(e), one);
}

void Poly::add_term(const Exponent& e, const Elem& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!ring_->is_zero(c)) terms_.emplace(e, ring_->additive().reduce(c));
    return;
  }
  it->second = ring_->add(it->second, c);
  if (ring_->is_zero(it->second)) terms_.erase(it);
}

void Poly::check_compatible(const Poly& rhs) const {
  if (ring_ != rhs.ring_) throw AlgebraError("variable mismatch: polynomials over different rings");
  if (vars_ != rhs.vars_) throw AlgebraError("variable mismatch: different variable lists");
}

std::optional<std::uint32_t> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  const Exponent& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

Elem Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ring_->zero() : it->second;
}

std::vector<Elem> Poly::coefficients() const {
  std::vector<Elem> out;
  for (const auto& [e, c] : terms_) out.push_back(c);
  return out;
}

Poly Poly::operator+(const Poly& rhs) const {
  check_compatible(rhs);
  Poly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-() const {
  Poly out(ring_, vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, ring_->neg(c));
  return out;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
  check_compatible(rhs);
  Poly out(ring_, vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ring_->mul(ca, cb));
    }
  return out;
}

Poly Poly::scaled(const Elem& c) const {
  Poly out(ring_, vars_);
  for (const auto& [e, a] : terms_) out.add_term(e, ring_->mul(c, a));
  return out;
}

Poly Poly::shifted(std::size_t var, std::uint32_t k) const {
  Poly out(ring_, vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.at(var) += k;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Poly Poly::pow(std::uint32_t n) const {
  Poly result = constant(ring_, vars_, ring_->one());
  Poly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Elem Poly::eval(const std::vector<Elem>& point) const {
  if (point.size() != vars_.size())
    throw AlgebraError("variable mismatch: point has " + std::to_string(point.size()) + " coordinates for " +
                       std::to_string(vars_.size()) + " variables");
  Elem acc = ring_->zero();
  for (const auto& [e, c] : terms_) {
    Elem t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t = ring_->mul(t, ring_->pow(point[i], e[i]));
    acc = ring_->add(acc, t);
  }
  return acc;
}

bool Poly::operator==(const Poly& rhs) const {
  return ring_ == rhs.ring_ && vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

namespace {

std::string coefficient_text(const FiniteRing& r, const Elem& c) {
  const Elem n = r.to_natural(c);
  if (n.size() == 1) return std::to_string(n[0]);
  return format_elem(n);
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> parts;
    const bool is_const = std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
    if (is_const || c != ring_->one()) parts.push_back(coefficient_text(*ring_, c));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      parts.push_back(e[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(e[i]));
    }
    for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::vector<std::string> default_vars(std::size_t n) {
  if (n == 1) return {"x"};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, RingPtr ring, std::vector<std::string> vars)
      : s_(text), ring_(std::move(ring)), vars_(std::move(vars)) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError("cannot parse polynomial \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '[' ||
           c == '(';
  }
  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    try {
      return std::stoll(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }
  Poly constant(const Elem& c) { return Poly::constant(ring_, vars_, c); }

  Poly expr() {
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      if (eat('*'))
        acc = acc * power();
      else if (starts_factor())
        acc = acc * power();
      else
        return acc;
    }
  }

  Poly power() {
    Poly base = factor();
    if (eat('^')) {
      const std::int64_t k = integer();
      if (k > 1'000'000) fail("exponent too large");
      return base.pow(static_cast<std::uint32_t>(k));
    }
    return base;
  }

  Poly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '[') {
      ++pos_;
      Elem raw;
      if (!eat(']')) {
        do {
          bool neg = eat('-');
          raw.push_back(neg ? -integer() : integer());
        } while (eat(','));
        if (!eat(']')) fail("expected ']'");
      }
      if (raw.size() != ring_->natural_moduli().size())
        fail("coefficient " + format_elem(raw) + " needs " + std::to_string(ring_->natural_moduli().size()) +
             " coordinates");
      return constant(ring_->from_natural(raw));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(ring_->from_int(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown variable " + name);
      return Poly::variable(ring_, vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  std::vector<std::string> vars_;
};

std::vector<std::string> infer_vars(const std::string& text) {
  static const std::regex ident("[A-Za-z][A-Za-z0-9]*");
  static const std::regex indexed("x([1-9][0-9]*)");
  std::set<std::string> names;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it)
    names.insert(it->str());
  if (names.empty() || (names.size() == 1 && *names.begin() == "x")) return {"x"};
  std::size_t top = 0;
  for (const auto& n : names) {
    std::smatch m;
    if (!std::regex_match(n, m, indexed))
      throw AlgebraError("cannot parse polynomial \"" + text + "\": variables must be x or x1..xn, got " + n);
    top = std::max<std::size_t>(top, std::stoul(m[1].str()));
  }
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= top; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring, std::vector<std::string> vars) {
  if (vars.empty()) vars = infer_vars(text);
  return PolyParser(text, ring, std::move(vars)).parse();
}

// ---------------------------------------------------------------- McCoy

namespace {

void require_univariate(const Poly& f) {
  if (f.nvars() != 1) throw AlgebraError("variable mismatch: expected a univariate polynomial");
}

std::optional<Elem> first_nonzero(const Ideal& i) {
  for (const auto& x : i.elements())
    if (!i.ring()->is_zero(x)) return x;
  return std::nullopt;
}

}  // namespace

std::optional<Elem> mccoy_annihilator(const Poly& f) {
  require_univariate(f);
  if (f.is_zero()) return f.ring()->one();
  return first_nonzero(annihilator(f.ring(), f.coefficients()));
}

bool is_regular_poly(const Poly& f) { return !mccoy_annihilator(f).has_value(); }

RegularElement regular_element(const std::vector<Poly>& fs) {
  if (fs.empty()) throw EmptyInput();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    require_univariate(fs[i]);
    if (fs[0].ring() != fs[i].ring() || fs[0].vars() != fs[i].vars())
      throw AlgebraError("variable mismatch: generators over different rings or variables");
    if (fs[i].is_zero()) throw ZeroGenerator(i);
  }
  std::vector<Elem> coeffs;
  for (const auto& f : fs)
    for (const auto& c : f.coefficients()) coeffs.push_back(c);
  if (auto w = first_nonzero(annihilator(fs[0].ring(), coeffs))) throw NotFaithful(*w);

  RegularElement out;
  out.order.resize(fs.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t a, std::size_t b) { return *fs[a].degree() < *fs[b].degree(); });
  out.element = Poly(fs[0].ring(), fs[0].vars());
  std::uint32_t shift = 0;
  for (std::size_t k = 0; k < out.order.size(); ++k) {
    const Poly& f = fs[out.order[k]];
    out.shifts.push_back(shift);
    out.element = out.element + f.shifted(0, shift);
    const std::uint32_t top = shift + *f.degree();
    shift = top + 1;
    if (k + 1 < out.order.size() && top >= shift) throw InvariantViolation("shifted supports overlap");
  }
  if (!is_regular_poly(out.element)) throw InvariantViolation("constructed element is a zero-divisor");
  return out;
}

std::vector<Poly> eval_kernel_rewrite(const Poly& f, const std::vector<Elem>& point) {
  const RingPtr& r = f.ring();
  const std::size_t n = f.nvars();
  if (!r->is_zero(f.eval(point)))
    throw NotInKernel("f(" + [&] {
      std::string s;
      for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + format_elem(point[i]);
      return s;
    }() + ") = " + format_elem(f.eval(point)) + " is not zero");

  std::vector<Poly> h(n, Poly(r, f.vars()));
  Poly current = f;
  for (std::size_t k = n; k-- > 0;) {
    Poly next(r, f.vars());
    for (const auto& [e, c] : current.terms()) {
      const std::uint32_t j = e[k];
      Exponent rest = e;
      rest[k] = 0;
      next = next + Poly::monomial(r, f.vars(), rest, r->mul(c, r->pow(point[k], j)));
      // c x^rest (x_k^{j-1} + x_k^{j-2} c_k + ... + c_k^{j-1})
      for (std::uint32_t t = 0; t < j; ++t) {
        Exponent m = rest;
        m[k] = j - 1 - t;
        h[k] = h[k] + Poly::monomial(r, f.vars(), m, r->mul(c, r->pow(point[k], t)));
      }
    }
    current = next;
  }
  if (!current.is_zero()) throw InvariantViolation("rewrite left a nonzero constant");

  Poly check(r, f.vars());
  for (std::size_t i = 0; i < n; ++i)
    check = check + h[i] * (Poly::variable(r, f.vars(), i) - Poly::constant(r, f.vars(), point[i]));
  if (check != f) throw InvariantViolation("rewrite does not reproduce f");
  return h;
}

Ideal constant_term_contraction(const std::vector<Poly>& fs) {
  if (fs.empty()) throw EmptyInput();
  std::vector<Elem> consts;
  for (const auto& f : fs) {
    require_univariate(f);
    if (f.ring() != fs[0].ring()) throw AlgebraError("variable mismatch: generators over different rings");
    consts.push_back(f.constant_term());
  }
  const Ideal i(fs[0].ring(), consts);
  for (const auto& f : fs)
    for (const auto& c : f.coefficients())
      if (!i.contains(c)) throw ExtensionShapeViolated(c);
  return i;
}

}  // namespace epilab
