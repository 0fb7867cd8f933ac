#include "epilab/gabriel.hpp"

#include <algorithm>
#include <map>

namespace epilab {

bool GabrielFilter::contains(const Ideal& i) const {
  return std::find(members.begin(), members.end(), i) != members.end();
}

namespace {

void check_cap(const RingPtr& r, std::uint64_t cap) {
  if (r->order() > static_cast<unsigned long>(cap))
    throw AlgebraError("ring " + r->name() + " of order " + r->order().get_str() +
                       " exceeds the ideal enumeration cap " + std::to_string(cap));
}

std::string ideal_label(const Ideal& i) {
  std::string s = "(";
  const auto gens = i.additive_generators();
  for (std::size_t k = 0; k < gens.size(); ++k) s += (k ? "," : "") + format_elem(i.ring()->to_natural(gens[k]));
  return s + ")";
}

}  // namespace

GabrielFilter filter_of(const RingMap& phi, std::uint64_t cap) {
  check_cap(phi.source(), cap);
  GabrielFilter f;
  f.ring = phi.source();
  f.universe = all_ideals(f.ring);
  for (const auto& i : f.universe)
    if (extension(i, phi).is_unit()) f.members.push_back(i);
  return f;
}

GabrielFilter make_filter(const RingPtr& ring, std::vector<Ideal> members, std::uint64_t cap) {
  check_cap(ring, cap);
  for (const auto& m : members)
    if (m.ring() != ring) throw AlgebraError("filter member is not an ideal of " + ring->name());
  return GabrielFilter{ring, std::move(members), all_ideals(ring)};
}

AxiomReport verify_axioms(const GabrielFilter& f) {
  AxiomReport rep;
  const RingPtr& r = f.ring;
  if (!f.contains(Ideal::unit(r))) {
    rep.t1 = false;
    rep.failures.push_back("T1: unit ideal missing");
  }
  for (const auto& i : f.members)
    for (const auto& j : f.universe)
      if (j.contains(i) && !f.contains(j)) {
        rep.t2 = false;
        rep.failures.push_back("T2: " + ideal_label(i) + " in F but " + ideal_label(j) + " is not");
      }
  for (const auto& i : f.members)
    for (const auto& j : f.members)
      if (!f.contains(ideal_product(i, j))) {
        rep.t3 = false;
        rep.failures.push_back("T3: product of " + ideal_label(i) + " and " + ideal_label(j) + " not in F");
      }
  std::map<std::pair<std::size_t, Elem>, bool> colon_in;
  for (std::size_t a = 0; a < f.universe.size(); ++a) {
    const Ideal& i = f.universe[a];
    if (f.contains(i)) continue;
    for (const auto& j : f.members) {
      bool all = true;
      for (const auto& x : j.elements()) {
        auto key = std::make_pair(a, x);
        auto it = colon_in.find(key);
        if (it == colon_in.end()) it = colon_in.emplace(key, f.contains(colon_ideal(i, Ideal(r, {x})))).first;
        if (!it->second) {
          all = false;
          break;
        }
      }
      if (all) {
        rep.g = false;
        rep.failures.push_back("G: " + ideal_label(i) + " not in F though every (I:j), j in " + ideal_label(j) +
                               ", is");
      }
    }
  }
  return rep;
}

bool filters_equal(const GabrielFilter& a, const GabrielFilter& b) {
  if (a.ring != b.ring || a.members.size() != b.members.size()) return false;
  for (const auto& m : a.members)
    if (!b.contains(m)) return false;
  return true;
}

IsoSearch find_compatible_iso(const RingMap& phi, const RingMap& psi, std::uint64_t cap) {
  IsoSearch out;
  const RingPtr& a = phi.target();
  const RingPtr& b = psi.target();
  const RingPtr& r = phi.source();
  if (a->additive() != b->additive()) {
    out.exhausted = true;
    return out;
  }
  const std::size_t k = a->rank();
  const FpGroup& ga = a->additive();

  // last basis coordinate each constraint depends on
  auto last_nonzero = [](const Elem& x) -> std::ptrdiff_t {
    for (std::size_t i = x.size(); i-- > 0;)
      if (x[i] != 0) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  std::vector<std::vector<std::pair<Elem, Elem>>> linear(k + 1);  // theta(x) must equal y
  for (std::size_t t = 0; t < r->rank(); ++t) {
    const Elem x = phi(r->basis(t));
    linear[static_cast<std::size_t>(last_nonzero(x) + 1)].emplace_back(x, psi(r->basis(t)));
  }
  linear[static_cast<std::size_t>(last_nonzero(a->one()) + 1)].emplace_back(a->one(), b->one());

  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Elem ai = a->basis(i);
    const bool idem = a->is_idempotent(ai), unit = a->is_unit(ai);
    for (const auto& y : b->elements())
      if (b->additive().element_order(y) == ga.invariants()[i] && b->is_idempotent(y) == idem &&
          b->is_unit(y) == unit)
        candidates[i].push_back(y);
  }

  std::vector<Elem> images(k);
  auto theta_of = [&](const Elem& x, std::size_t upto) {
    Elem acc = b->zero();
    for (std::size_t i = 0; i < upto; ++i)
      if (x[i] != 0) acc = b->add(acc, b->scale(x[i], images[i]));
    return acc;
  };
  auto consistent = [&](std::size_t depth) {  // images[0..depth) assigned
    for (const auto& [x, y] : linear[depth])
      if (theta_of(x, depth) != y) return false;
    const std::size_t t = depth - 1;
    for (std::size_t i = 0; i <= t; ++i) {
      const Elem& prod = a->structure_constants()[i][t];
      if (last_nonzero(prod) < static_cast<std::ptrdiff_t>(depth) &&
          theta_of(prod, depth) != b->mul(images[i], images[t]))
        return false;
    }
    return true;
  };

  bool capped = false;
  std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
    if (depth == k) {
      try {
        RingMap theta = RingMap::make(a, b, images);
        if (theta.is_bijective() && phi.then(theta).same_as(psi)) {
          out.theta = std::move(theta);
          return true;
        }
      } catch (const MapError&) {
      }
      return false;
    }
    for (const auto& y : candidates[depth]) {
      if (++out.nodes > cap) {
        capped = true;
        return false;
      }
      images[depth] = y;
      if (consistent(depth + 1) && rec(depth + 1)) return true;
      if (capped) return false;
    }
    return false;
  };
  if (k == 0) {
    // both targets are the zero ring
    out.theta = RingMap::make(a, b, {});
    out.exhausted = true;
    return out;
  }
  const bool found = rec(0);
  out.exhausted = found || !capped;
  return out;
}

std::string to_string(FlatEpiClass c) {
  switch (c) {
    case FlatEpiClass::SameClass:
      return "same-class";
    case FlatEpiClass::Different:
      return "different";
    case FlatEpiClass::Undecided:
      return "undecided";
  }
  return "?";
}

Classification classify_flat_epis(const RingMap& phi, const RingMap& psi, std::uint64_t cap) {
  if (phi.source() != psi.source()) throw AlgebraError("precondition: maps must share their source ring");
  for (const RingMap* m : {&phi, &psi})
    if (!is_flat_map(*m) || !is_epimorphism(*m))
      throw AlgebraError("precondition: " + m->source()->name() + " -> " + m->target()->name() +
                         " is not a flat epimorphism");
  if (!filters_equal(filter_of(phi), filter_of(psi))) return Classification{FlatEpiClass::Different, std::nullopt};
  IsoSearch s = find_compatible_iso(phi, psi, cap);
  if (s.theta) return Classification{FlatEpiClass::SameClass, std::move(s.theta)};
  if (!s.exhausted) return Classification{FlatEpiClass::Undecided, std::nullopt};
  throw InvariantViolation("equal filters but no isomorphism between " + phi.target()->name() + " and " +
                           psi.target()->name());
}

json filter_json(const GabrielFilter& f) {
  std::vector<json> out;
  for (const auto& m : f.members) {
    json gens = json::array();
    auto g = m.additive_generators();
    std::vector<Elem> nat;
    for (const auto& x : g) nat.push_back(f.ring->to_natural(x));
    std::sort(nat.begin(), nat.end());
    for (const auto& x : nat) gens.push_back(x);
    out.push_back(gens);
  }
  std::sort(out.begin(), out.end());
  return json(out);
}

}  // namespace epilab
