#pragma once

// Filters of ideals attached to ring maps and the classification of flat
// epimorphisms by their filters.

#include "epilab/spectrum.hpp"

namespace epilab {

struct GabrielFilter {
  RingPtr ring;
  std::vector<Ideal> members;
  std::vector<Ideal> universe;  // every ideal of the ring

  bool contains(const Ideal& i) const;
};

inline constexpr std::uint64_t kFilterCap = 64;

// Ideals whose extension along phi is the unit ideal.
GabrielFilter filter_of(const RingMap& phi, std::uint64_t cap = kFilterCap);
// A filter given by hand; members must be ideals of ring.
GabrielFilter make_filter(const RingPtr& ring, std::vector<Ideal> members, std::uint64_t cap = kFilterCap);

struct AxiomReport {
  bool t1 = true;  // unit ideal belongs
  bool t2 = true;  // upward closed
  bool t3 = true;  // closed under products
  bool g = true;   // J in F and (I : j) in F for all j in J imply I in F
  std::vector<std::string> failures;
  bool ok() const { return t1 && t2 && t3 && g; }
};

AxiomReport verify_axioms(const GabrielFilter& f);
bool filters_equal(const GabrielFilter& a, const GabrielFilter& b);

struct IsoSearch {
  std::optional<RingMap> theta;  // bijective, theta after phi equals psi
  bool exhausted = false;        // false when the node cap was hit
  std::uint64_t nodes = 0;
};

// theta: phi.target -> psi.target with theta(phi(r)) = psi(r).
IsoSearch find_compatible_iso(const RingMap& phi, const RingMap& psi, std::uint64_t cap = 2'000'000);

enum class FlatEpiClass { SameClass, Different, Undecided };
std::string to_string(FlatEpiClass c);

struct Classification {
  FlatEpiClass verdict = FlatEpiClass::Undecided;
  std::optional<RingMap> theta;
};

// Both maps must be flat epimorphisms out of the same ring.
Classification classify_flat_epis(const RingMap& phi, const RingMap& psi, std::uint64_t cap = 2'000'000);

// Sorted generator lists, one per member.
json filter_json(const GabrielFilter& f);

}  // namespace epilab
