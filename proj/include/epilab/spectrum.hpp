#pragma once

// Spec of a finite ring through its primitive idempotents: local factors,
// primes, residue fields, and the flatness and localization checks.

#include "epilab/epi.hpp"

namespace epilab {

struct LocalDecomposition {
  RingPtr ring;
  std::vector<Elem> idempotents;      // primitive, orthogonal, summing to 1
  std::vector<RingPtr> factors;       // e_i R
  std::vector<RingMap> projections;   // R -> e_i R

  std::size_t size() const { return idempotents.size(); }
  // A preimage in R of an element of factor i, lying in e_i R.
  Elem lift(std::size_t i, const Elem& x) const;
};

inline constexpr std::uint64_t kDecomposeCap = 4096;

LocalDecomposition decompose(const RingPtr& r, std::uint64_t cap = kDecomposeCap);

struct PrimePoint {
  std::size_t factor = 0;
  Ideal ideal;            // the prime, as an ideal of R
  RingPtr residue_field;
  RingMap residue_map;    // R -> residue field
};

std::vector<PrimePoint> primes(const LocalDecomposition& d);
std::vector<PrimePoint> primes(const RingPtr& r);

// For each prime of the target, the index of its contraction among the
// primes of the source.
std::vector<std::size_t> spec_map(const RingMap& phi, const std::vector<PrimePoint>& target_primes,
                                  const std::vector<PrimePoint>& source_primes);
std::vector<std::size_t> spec_map(const RingMap& phi);

struct Prop2Report {
  bool a = false;  // Spec map injective
  bool b = false;  // residue maps bijective
  bool c = true;   // kernel of p finitely generated
  bool d = false;  // Kaehler module zero
  bool all = false;
  std::string c_reason;
};
Prop2Report check_prop2(const RingMap& phi);

// Injective on spectra, no differentials, and trivial residue extensions.
bool check_geo_v(const RingMap& phi);

bool is_flat_module(const FiniteModule& m, std::uint64_t cap = kDecomposeCap);
bool is_flat_map(const RingMap& phi);

// Localizations R_p -> S_q are bijective for a flat epimorphism.
Verdict check_local_iso(const RingMap& phi);

}  // namespace epilab
