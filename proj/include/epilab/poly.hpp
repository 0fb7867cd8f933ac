#pragma once

// Polynomials over a finite ring, McCoy annihilators, the regular element
// of a faithful ideal of R[x], and the evaluation-kernel rewriter.

#include <map>
#include <optional>

#include "epilab/ring.hpp"

namespace epilab {

class NotFaithful : public AlgebraError {
 public:
  explicit NotFaithful(Elem witness)
      : AlgebraError("ideal is not faithful: " + format_elem(witness) + " annihilates every coefficient"),
        witness_(std::move(witness)) {}
  const Elem& witness() const { return witness_; }

 private:
  Elem witness_;
};

class EmptyInput : public AlgebraError {
 public:
  EmptyInput() : AlgebraError("empty generator list") {}
};

class ZeroGenerator : public AlgebraError {
 public:
  explicit ZeroGenerator(std::size_t index)
      : AlgebraError("generator " + std::to_string(index) + " is the zero polynomial") {}
};

class NotInKernel : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ExtensionShapeViolated : public AlgebraError {
 public:
  explicit ExtensionShapeViolated(Elem witness)
      : AlgebraError("coefficient " + format_elem(witness) + " is not in the ideal of constant terms"),
        witness_(std::move(witness)) {}
  const Elem& witness() const { return witness_; }

 private:
  Elem witness_;
};

using Exponent = std::vector<std::uint32_t>;

// Graded lexicographic: higher total degree first, then lexicographic.
struct GrLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class Poly {
 public:
  using Terms = std::map<Exponent, Elem, GrLexGreater>;

  Poly() = default;
  Poly(RingPtr ring, std::vector<std::string> vars);
  static Poly constant(RingPtr ring, std::vector<std::string> vars, const Elem& c);
  static Poly monomial(RingPtr ring, std::vector<std::string> vars, Exponent e, const Elem& c);
  static Poly variable(RingPtr ring, std::vector<std::string> vars, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // Total degree; none for the zero polynomial.
  std::optional<std::uint32_t> degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  Elem coefficient(const Exponent& e) const;
  Elem constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }
  // Nonzero coefficients in term order.
  std::vector<Elem> coefficients() const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator-() const;
  Poly operator*(const Poly& rhs) const;
  Poly scaled(const Elem& c) const;
  Poly shifted(std::size_t var, std::uint32_t k) const;  // times x_var^k
  Poly pow(std::uint32_t n) const;

  Elem eval(const std::vector<Elem>& point) const;

  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  void check_compatible(const Poly& rhs) const;
  void add_term(const Exponent& e, const Elem& c);
  RingPtr ring_;
  std::vector<std::string> vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Integer or bracketed natural-coordinate coefficients, variables x or
// x1..xn, e.g. "2*x^2 + 3" or "x1*x2 - 1". Variables are inferred when
// none are given.
Poly parse_poly(const std::string& text, const RingPtr& ring, std::vector<std::string> vars = {});

std::vector<std::string> default_vars(std::size_t n);

// A nonzero c with c.f = 0, the lexicographically first such element;
// none exactly when f is regular in R[x]. The zero polynomial gives 1.
std::optional<Elem> mccoy_annihilator(const Poly& f);
bool is_regular_poly(const Poly& f);

struct RegularElement {
  Poly element;                       // sum of x^shifts[k] * fs[order[k]]
  std::vector<std::size_t> order;     // indices into the input, by degree
  std::vector<std::uint32_t> shifts;
};

RegularElement regular_element(const std::vector<Poly>& fs);

// h with f = sum h_i (x_i - c_i).
std::vector<Poly> eval_kernel_rewrite(const Poly& f, const std::vector<Elem>& point);

Ideal constant_term_contraction(const std::vector<Poly>& fs);

}  // namespace epilab
