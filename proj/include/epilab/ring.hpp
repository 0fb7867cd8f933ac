#pragma once

// Finite commutative rings as structure constants over an invariant-factor
// additive group, their homomorphisms, ideals and finite modules.

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "epilab/abelian.hpp"
#include "json.hpp"

namespace epilab {

using json = nlohmann::json;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class MapError : public AlgebraError {
 public:
  MapError(std::string axiom, const std::string& detail)
      : AlgebraError(axiom + ": " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

struct RingData {
  FpGroup additive;
  std::vector<std::vector<Elem>> mult;  // mult[i][j] = e_i * e_j
  Elem one;
  std::string name;
  std::optional<json> description;
  // Natural (user-facing) coordinates: raw description coordinates.
  std::optional<Presentation> natural;
};

class FiniteRing {
 public:
  // Validates associativity, commutativity and the unit on basis triples.
  static RingPtr create(RingData data);

  const FpGroup& additive() const { return data_.additive; }
  std::size_t rank() const { return data_.additive.rank(); }
  BigInt order() const { return data_.additive.order(); }
  std::uint64_t small_order() const { return data_.additive.small_order(); }
  bool is_zero_ring() const { return data_.additive.is_trivial(); }
  const std::string& name() const { return data_.name; }
  const std::vector<std::vector<Elem>>& structure_constants() const { return data_.mult; }

  Elem zero() const { return data_.additive.zero(); }
  const Elem& one() const { return data_.one; }
  Elem basis(std::size_t i) const { return data_.additive.basis(i); }
  Elem from_int(std::int64_t k) const { return data_.additive.scale(k, data_.one); }

  Elem add(const Elem& a, const Elem& b) const { return data_.additive.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return data_.additive.sub(a, b); }
  Elem neg(const Elem& a) const { return data_.additive.neg(a); }
  Elem scale(std::int64_t k, const Elem& a) const { return data_.additive.scale(k, a); }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t n) const;
  bool is_zero(const Elem& a) const { return data_.additive.is_zero(a); }

  // Image of multiplication by a, as an additive subgroup.
  Subgroup multiple_group(const Elem& a) const;
  // Multiplication by a is injective. On a finite ring this is also
  // bijectivity, so regular elements and units coincide.
  bool is_regular(const Elem& a) const;
  bool is_unit(const Elem& a) const { return is_regular(a); }
  bool is_idempotent(const Elem& a) const { return mul(a, a) == a; }
  std::optional<Elem> inverse(const Elem& a) const;

  // Lexicographic enumeration, cached; throws beyond the cap.
  const std::vector<Elem>& elements() const;
  static constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 16;

  const std::optional<json>& description() const { return data_.description; }
  const std::optional<Presentation>& natural() const { return data_.natural; }
  std::vector<std::int64_t> natural_moduli() const;
  Elem from_natural(const Elem& raw) const;
  Elem to_natural(const Elem& x) const;

 private:
  explicit FiniteRing(RingData data) : data_(std::move(data)) {}
  RingData data_;
  mutable std::shared_ptr<const std::vector<Elem>> elements_;
  mutable std::once_flag elements_once_;
};

// Ring written over raw coordinates (a cyclic sum with relations) and
// normalized through a presentation. The relations must span an ideal.
struct RawRing {
  std::vector<std::int64_t> moduli;
  std::vector<Elem> relations;
  std::function<Elem(const Elem&, const Elem&)> mul;
  Elem one;
};

struct BuiltRing {
  RingPtr ring;
  Presentation pres;
};

BuiltRing build_ring(const RawRing& raw, std::string name, std::optional<json> description = {},
                     bool raw_is_natural = false);

class RingMap {
 public:
  RingMap() = default;
  // Throws MapError naming the violated axiom: "not additive",
  // "not unital" or "not multiplicative".
  static RingMap make(RingPtr source, RingPtr target, std::vector<Elem> images);
  static RingMap identity(const RingPtr& r);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Elem>& images() const { return images_; }

  Elem operator()(const Elem& x) const { return apply(x); }
  Elem apply(const Elem& x) const;
  // next after this
  RingMap then(const RingMap& next) const;

  Subgroup image() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  bool same_as(const RingMap& other) const;

 private:
  RingMap(RingPtr s, RingPtr t, std::vector<Elem> images)
      : source_(std::move(s)), target_(std::move(t)), images_(std::move(images)) {}
  RingPtr source_, target_;
  std::vector<Elem> images_;
};

// Canonical map Z/n -> S (1 -> 1); throws MapError if char(S) does not divide n.
RingMap structure_map(const RingPtr& zn, const RingPtr& target);

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Elem> gens);
  static Ideal zero(const RingPtr& r) { return Ideal(r, {}); }
  static Ideal unit(const RingPtr& r) { return Ideal(r, {r->one()}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Elem>& gens() const { return gens_; }
  const Subgroup& group() const { return group_; }
  // Additive generating set of the closure.
  std::vector<Elem> additive_generators() const { return group_.generators(); }

  bool contains(const Elem& x) const { return group_.contains(x); }
  bool contains(const Ideal& other) const { return group_.contains(other.group_); }
  BigInt order() const { return group_.order(); }
  bool is_zero() const { return group_.is_trivial(); }
  bool is_unit() const { return group_.is_whole(); }
  std::vector<Elem> elements() const;

  bool operator==(const Ideal& rhs) const { return group_ == rhs.group_; }
  bool operator!=(const Ideal& rhs) const { return !(*this == rhs); }

 private:
  RingPtr ring_;
  std::vector<Elem> gens_;
  Subgroup group_;
};

Ideal ideal_from(const RingPtr& ring, const std::vector<Elem>& gens);
Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_intersect(const Ideal& i, const Ideal& j);
Ideal colon_ideal(const Ideal& i, const Ideal& j);
Ideal annihilator(const RingPtr& ring, const std::vector<Elem>& elements);
bool is_faithful(const Ideal& i);
bool is_regular(const RingPtr& ring, const Elem& r);
// Ideal of the target generated by the image of i.
Ideal extension(const Ideal& i, const RingMap& phi);
// Preimage of an ideal of the target.
Ideal contraction(const Ideal& j, const RingMap& phi);

// Every ideal, as the join closure of the principal ideals (complete for
// any finite ring). Refuses rings above the cap.
std::vector<Ideal> all_ideals(const RingPtr& ring, std::uint64_t cap = 256);

class FiniteModule {
 public:
  FiniteModule() = default;
  // action[i][j] = e_i . m_j; checked to be a unital module action.
  static FiniteModule create(RingPtr ring, FpGroup additive, std::vector<std::vector<Elem>> action,
                             std::string name = {});

  const RingPtr& ring() const { return ring_; }
  const FpGroup& additive() const { return additive_; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<Elem>>& action() const { return action_; }
  BigInt order() const { return additive_.order(); }

  Elem act(const Elem& r, const Elem& m) const;
  // Smallest submodule containing gens.
  Subgroup submodule(const std::vector<Elem>& gens) const;
  // I.M for an ideal of the ring.
  Subgroup ideal_times(const Ideal& i) const;

 private:
  RingPtr ring_;
  FpGroup additive_;
  std::vector<std::vector<Elem>> action_;
  std::string name_;
};

FiniteModule ring_as_module(const RingPtr& r);
// R/I as an R-module.
FiniteModule quotient_module(const Ideal& i);
// M / N for a submodule N given by generators, with the projection.
struct ModuleQuotient {
  FiniteModule module;
  Presentation pres;
};
ModuleQuotient quotient_module(const FiniteModule& m, const std::vector<Elem>& gens);
// Restriction of scalars along phi: R -> S, for an S-module.
FiniteModule restrict_scalars(const RingMap& phi, const FiniteModule& m);

struct ColonComparison {
  Subgroup left;   // (I:J)M
  Subgroup right;  // IM:J
  bool equal() const { return left == right; }
};
ColonComparison module_colon(const FiniteModule& m, const Ideal& i, const Ideal& j);

// ---------------------------------------------------------------- builders

RingPtr zmod(std::int64_t n);
RingPtr product(const std::vector<RingPtr>& factors);
// base[t]/(f), f given by coefficient per degree in base coordinates; the
// leading coefficient must be regular (hence a unit).
RingPtr poly_quotient(const RingPtr& base, const std::vector<Elem>& modulus,
                      const std::string& var = "t");

struct QuotientRing {
  RingPtr ring;
  RingMap projection;
};
QuotientRing quotient(const RingPtr& base, const std::vector<Elem>& gens);
QuotientRing quotient(const Ideal& i);

RingPtr ring_from_json(const json& j);
RingMap map_from_json(const json& j);
json map_to_json(const RingMap& phi);
// Description, or a fallback object naming the ring when it has none.
json ring_json(const RingPtr& r);

}  // namespace epilab
