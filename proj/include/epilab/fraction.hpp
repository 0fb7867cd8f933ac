#pragma once

// Fractions of univariate polynomials with regular denominators: the
// total quotient ring of R[x].

#include "epilab/poly.hpp"

namespace epilab {

class NotInvertible : public AlgebraError {
 public:
  explicit NotInvertible(Elem witness)
      : AlgebraError("numerator is a zero-divisor, annihilated by " + format_elem(witness)),
        witness_(std::move(witness)) {}
  const Elem& witness() const { return witness_; }

 private:
  Elem witness_;
};

class ZeroDivisorDenominator : public AlgebraError {
 public:
  explicit ZeroDivisorDenominator(Elem witness)
      : AlgebraError("denominator is a zero-divisor, annihilated by " + format_elem(witness)),
        witness_(std::move(witness)) {}
  const Elem& witness() const { return witness_; }

 private:
  Elem witness_;
};

class Frac {
 public:
  // Throws ZeroDivisorDenominator unless den is regular.
  Frac(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  Frac operator+(const Frac& rhs) const;
  Frac operator-(const Frac& rhs) const;
  Frac operator-() const;
  Frac operator*(const Frac& rhs) const;

  // num1 den2 == num2 den1
  bool equals(const Frac& rhs) const;
  bool operator==(const Frac& rhs) const { return equals(rhs); }
  bool is_zero() const { return num_.is_zero(); }

  std::string to_string() const;

 private:
  struct Trusted {};
  Frac(Poly num, Poly den, Trusted);
  static Frac product_denominator(Poly num, const Poly& d1, const Poly& d2);
  Poly num_, den_;
};

// f / 1
Frac embed(const Poly& f);
Frac invert(const Frac& q);

// "num / den" or a bare polynomial, in the syntax of parse_poly.
Frac parse_frac(const std::string& text, const RingPtr& ring);

struct Denominator {
  Poly element;                 // regular, inside the generated ideal
  RegularElement certificate;
  Frac as_fraction() const { return embed(element); }
  Frac inverse() const { return invert(embed(element)); }
};

Denominator construct_denominator(const std::vector<Poly>& fs);

}  // namespace epilab
