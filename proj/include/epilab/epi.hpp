#pragma once

// Tensor products over a finite ring, the tensor square of a ring map and
// the equivalent characterizations of epimorphisms built on it.

#include "epilab/ring.hpp"

namespace epilab {

// A (x)_R B for two modules over the same ring.
struct ModuleTensor {
  TensorOverZ z;
  Presentation pres;  // over z.raw_moduli

  const FpGroup& group() const { return pres.group; }
  Elem pure(const Elem& a, const Elem& b) const { return pres.project(z.pure_raw(a, b)); }
};

ModuleTensor tensor_over_ring(const FiniteModule& a, const FiniteModule& b);

struct TensorSquare {
  RingMap phi;
  RingPtr ring;
  RingMap i_map;  // s -> s(x)1
  RingMap j_map;  // s -> 1(x)s
  RingMap p_map;  // s(x)s' -> ss'
  ModuleTensor carrier;

  Elem pure_tensor(const Elem& s, const Elem& t) const { return carrier.pure(s, t); }
};

TensorSquare tensor_square(const RingMap& phi);

bool is_epi_tensor(const TensorSquare& t);
bool is_epi_mult(const TensorSquare& t);
bool is_symmetric_square(const TensorSquare& t);
bool is_epi_tensor(const RingMap& phi);
bool is_epi_mult(const RingMap& phi);
bool is_symmetric_square(const RingMap& phi);
bool is_epi_coker(const RingMap& phi);

// s(x)m -> sm from S (x)_R M to M is bijective, for an S-module M.
bool check_module_condition(const RingMap& phi, const FiniteModule& m);

struct EpiConditions {
  bool tensor = false;
  bool mult = false;
  bool coker = false;
  bool symmetric = false;
  bool agree() const { return tensor == mult && mult == coker && coker == symmetric; }
};
EpiConditions epi_conditions(const RingMap& phi);

// Condition on s(x)1 = 1(x)s; with paranoid set all four conditions are
// evaluated and disagreement raises InvariantViolation.
bool is_epimorphism(const RingMap& phi, bool paranoid = false);

struct KaehlerModule {
  FiniteModule module;          // over the target ring
  std::vector<Elem> generators;  // images of e_i(x)1 - 1(x)e_i

  const FpGroup& group() const { return module.additive(); }
  BigInt order() const { return module.order(); }
};

KaehlerModule kaehler(const TensorSquare& t);
KaehlerModule kaehler(const RingMap& phi);

enum class Verdict { NotApplicable, Confirmed, Counterexample };
std::string to_string(Verdict v);

// Flat, Spec-surjective epimorphisms are bijective.
Verdict verify_faithfully_flat_epi_iso(const RingMap& phi);

}  // namespace epilab
