#pragma once

// Exact integer linear algebra for finite abelian groups.
//
// Every finite abelian group is carried in invariant-factor form
// Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ... | d_k. Intermediate
// constructions (tensor products, quotients, rings built from a
// description) are first written over a raw cyclic decomposition with
// arbitrary moduli and then normalized through a Presentation.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace epilab {

using BigInt = mpz_class;
using Elem = std::vector<std::int64_t>;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when checks that must agree do not; never an expected outcome.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// g = gcd(a, b) = x*a + y*b, g >= 0
struct XGcd {
  std::int64_t g, x, y;
};
XGcd xgcd(std::int64_t a, std::int64_t b);

std::string format_elem(const Elem& x);

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const;

  bool is_diagonal() const;
  BigInt determinant() const;  // fraction-free Bareiss, square only

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct SmithForm {
  IntMatrix U, D, V;  // U * m * V == D
  IntMatrix V_inverse;
};

// Minimal-absolute-value pivoting with full row/column reduction. The
// inverse of V is tracked alongside because quotient sections need it.
SmithForm smith_normal_form(const IntMatrix& m, bool track_u = true);

// Finite abelian group in normalized invariant-factor form.
class FpGroup {
 public:
  FpGroup() = default;  // trivial group
  explicit FpGroup(std::vector<std::int64_t> invariant_factors);

  const std::vector<std::int64_t>& invariants() const { return d_; }
  std::size_t rank() const { return d_.size(); }
  BigInt order() const;
  bool is_trivial() const { return d_.empty(); }
  // Exponent of the group (1 for the trivial group).
  std::int64_t exponent() const { return d_.empty() ? 1 : d_.back(); }

  Elem zero() const { return Elem(d_.size(), 0); }
  Elem basis(std::size_t i) const;
  bool valid(const Elem& x) const;
  void check(const Elem& x) const;  // throws AlgebraError when malformed
  Elem reduce(Elem x) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(std::int64_t k, const Elem& a) const;
  bool is_zero(const Elem& a) const;
  std::int64_t element_order(const Elem& a) const;

  // Lexicographic enumeration; only for groups whose order fits.
  std::uint64_t small_order() const;  // throws if order > 2^40
  Elem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Elem& x) const;
  std::vector<Elem> elements() const;

  bool operator==(const FpGroup& rhs) const { return d_ == rhs.d_; }
  bool operator!=(const FpGroup& rhs) const { return d_ != rhs.d_; }

 private:
  std::vector<std::int64_t> d_;
};

std::ostream& operator<<(std::ostream& os, const FpGroup& g);
std::string describe(const FpGroup& g);

// Z-linear map between cyclic sums, given by the image of each source
// coordinate vector; image coordinates are reduced modulo dst moduli.
class CoordMap {
 public:
  CoordMap() = default;
  CoordMap(std::vector<Elem> rows, std::vector<std::int64_t> dst_moduli);

  std::size_t src_dim() const { return rows_.size(); }
  std::size_t dst_dim() const { return dst_.size(); }
  const std::vector<Elem>& rows() const { return rows_; }
  const std::vector<std::int64_t>& dst_moduli() const { return dst_; }

  Elem apply(const Elem& x) const;
  // next(this(x))
  CoordMap then(const CoordMap& next) const;

 private:
  std::vector<Elem> rows_;
  std::vector<std::int64_t> dst_;
};

// Subgroup of a cyclic sum Z/m_1 + ... + Z/m_k, kept in Hermite form:
// pivot row i is zero before column i and has leading entry h_i | m_i
// (h_i == m_i marks an empty column). Equal subgroups have equal pivots.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<std::int64_t> moduli, const std::vector<Elem>& gens);
  Subgroup(const FpGroup& ambient, const std::vector<Elem>& gens)
      : Subgroup(ambient.invariants(), gens) {}

  const std::vector<std::int64_t>& moduli() const { return m_; }
  const std::vector<Elem>& pivots() const { return rows_; }
  // Nonzero pivot rows; an additive generating set.
  std::vector<Elem> generators() const;

  bool contains(const Elem& x) const;
  bool contains(const Subgroup& other) const;
  BigInt order() const;
  BigInt index() const;  // [ambient : this]
  bool is_trivial() const;
  bool is_whole() const;
  Subgroup joined(const std::vector<Elem>& more) const;
  // Returns false if every element is already contained.
  bool insert(const std::vector<Elem>& more);

  // All elements, each once; only when order is small.
  std::vector<Elem> elements() const;

  bool operator==(const Subgroup& rhs) const { return m_ == rhs.m_ && rows_ == rhs.rows_; }
  bool operator!=(const Subgroup& rhs) const { return !(*this == rhs); }

 private:
  void echelonize(std::vector<Elem> work);
  std::vector<std::int64_t> m_;
  std::vector<Elem> rows_;
};

// A quotient (raw cyclic sum) / <relations> brought to invariant-factor form.
struct Presentation {
  FpGroup group;
  std::vector<std::int64_t> raw_moduli;
  Subgroup relations;  // kernel of proj, inside the raw cyclic sum
  CoordMap proj;       // raw -> normalized, surjective homomorphism
  CoordMap lift;       // normalized -> raw, section of proj

  Elem project(const Elem& raw) const { return proj.apply(raw); }
  Elem section(const Elem& x) const { return lift.apply(x); }
};

Presentation present(std::vector<std::int64_t> raw_moduli, const std::vector<Elem>& relations);

// Quotient of an already normalized group.
Presentation quotient_presentation(const FpGroup& ambient, const std::vector<Elem>& relations);

// Abstract normalized group isomorphic to a subgroup, with the embedding.
struct SubgroupPresentation {
  Presentation pres;  // over raw coordinates indexed by the subgroup's generators
  std::vector<Elem> generators;  // in the ambient group
  std::vector<std::size_t> columns;  // pivot column of each generator
  std::vector<std::int64_t> ambient_moduli;
  Elem embed(const Elem& x) const;  // normalized subgroup coords -> ambient
  // Inverse of embed on the subgroup; throws if y is not a member.
  Elem coordinates(const Elem& y) const;
};
SubgroupPresentation present_subgroup(const Subgroup& h);

struct TensorOverZ {
  std::vector<std::int64_t> raw_moduli;  // gcd(d_i, e_j) for kept pairs
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::ptrdiff_t>> slot;  // slot[i][j] or -1
  Presentation pres;

  Elem pure_raw(const Elem& x, const Elem& y) const;
  Elem pure(const Elem& x, const Elem& y) const { return pres.project(pure_raw(x, y)); }
};

TensorOverZ tensor_over_z(const FpGroup& a, const FpGroup& b);

// Smallest subgroup containing gens; elements enumerated in order.
struct EnumeratedSubgroup {
  Subgroup lattice;
  std::vector<Elem> elements;
  bool contains(const Elem& x) const { return lattice.contains(x); }
};
EnumeratedSubgroup subgroup_closure(const FpGroup& ambient, const std::vector<Elem>& gens);

}  // namespace epilab
