#include "epilab/spectrum.hpp"

#include <algorithm>

namespace epilab {

namespace {

bool is_prime_power(std::int64_t n, std::int64_t* prime = nullptr) {
  if (n < 2) return false;
  std::int64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  if (prime) *prime = p;
  return n == 1;
}

// preimage of x in R for a ring whose natural coordinates are R's
Elem pull_natural(const FiniteRing& r, const FiniteRing& q, const Elem& x) {
  return r.from_natural(q.to_natural(x));
}

}  // namespace

Elem LocalDecomposition::lift(std::size_t i, const Elem& x) const {
  return ring->mul(idempotents.at(i), pull_natural(*ring, *factors.at(i), x));
}

LocalDecomposition decompose(const RingPtr& r, std::uint64_t cap) {
  if (r->order() > static_cast<unsigned long>(cap))
    throw AlgebraError("ring " + r->name() + " of order " + r->order().get_str() + " exceeds the decomposition cap " +
                       std::to_string(cap));
  LocalDecomposition d;
  d.ring = r;
  std::vector<Elem> idem;
  for (const auto& e : r->elements())
    if (!r->is_zero(e) && r->is_idempotent(e)) idem.push_back(e);
  for (const auto& e : idem) {
    bool primitive = true;
    for (const auto& f : idem)
      if (f != e && r->mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (primitive) d.idempotents.push_back(e);
  }

  Elem total = r->zero();
  for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
    total = r->add(total, d.idempotents[i]);
    for (std::size_t j = i + 1; j < d.idempotents.size(); ++j)
      if (!r->is_zero(r->mul(d.idempotents[i], d.idempotents[j])))
        throw InvariantViolation("primitive idempotents of " + r->name() + " are not orthogonal");
  }
  if (total != r->one()) throw InvariantViolation("primitive idempotents of " + r->name() + " do not sum to 1");

  for (const auto& e : d.idempotents) {
    QuotientRing q = quotient(r, {r->sub(r->one(), e)});
    std::vector<Elem> nonunits;
    for (const auto& x : q.ring->elements())
      if (!q.ring->is_unit(x)) nonunits.push_back(x);
    if (Ideal(q.ring, nonunits).order() != static_cast<long>(nonunits.size()))
      throw InvariantViolation("factor " + q.ring->name() + " of " + r->name() + " is not local");
    d.factors.push_back(q.ring);
    d.projections.push_back(q.projection);
  }
  return d;
}

std::vector<PrimePoint> primes(const LocalDecomposition& d) {
  std::vector<PrimePoint> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const RingPtr& f = d.factors[i];
    std::vector<Elem> nonunits;
    for (const auto& x : f->elements())
      if (!f->is_unit(x)) nonunits.push_back(x);
    const Ideal m(f, nonunits);
    QuotientRing k = quotient(m);
    const auto& kr = *k.ring;
    std::int64_t korder = 0;
    if (kr.order().fits_slong_p()) korder = kr.order().get_si();
    if (!is_prime_power(korder)) throw InvariantViolation("residue ring " + kr.name() + " is not a field");
    for (const auto& x : kr.elements())
      if (!kr.is_zero(x) && !kr.is_unit(x)) throw InvariantViolation("residue ring " + kr.name() + " is not a field");
    out.push_back(PrimePoint{i, contraction(m, d.projections[i]), k.ring, d.projections[i].then(k.projection)});
  }
  return out;
}

std::vector<PrimePoint> primes(const RingPtr& r) { return primes(decompose(r)); }

std::vector<std::size_t> spec_map(const RingMap& phi, const std::vector<PrimePoint>& target_primes,
                                  const std::vector<PrimePoint>& source_primes) {
  std::vector<std::size_t> out;
  for (const auto& q : target_primes) {
    const Ideal p = contraction(q.ideal, phi);
    auto it = std::find_if(source_primes.begin(), source_primes.end(),
                           [&](const PrimePoint& s) { return s.ideal == p; });
    if (it == source_primes.end()) throw InvariantViolation("contraction of a prime is not prime");
    out.push_back(static_cast<std::size_t>(it - source_primes.begin()));
  }
  return out;
}

std::vector<std::size_t> spec_map(const RingMap& phi) {
  return spec_map(phi, primes(phi.target()), primes(phi.source()));
}

namespace {

bool injective(const std::vector<std::size_t>& m) {
  std::vector<std::size_t> s = m;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

// kappa(p) -> kappa(q) induced by phi, bijective for every prime q
bool residue_maps_bijective(const RingMap& phi, const std::vector<PrimePoint>& ps,
                            const std::vector<PrimePoint>& qs, const std::vector<std::size_t>& m) {
  const auto& r = *phi.source();
  for (std::size_t j = 0; j < qs.size(); ++j) {
    const PrimePoint& p = ps[m[j]];
    const auto& kp = p.residue_field;
    std::vector<Elem> images;
    for (std::size_t b = 0; b < kp->rank(); ++b)
      images.push_back(qs[j].residue_map(phi(pull_natural(r, *kp, kp->basis(b)))));
    if (!RingMap::make(kp, qs[j].residue_field, std::move(images)).is_bijective()) return false;
  }
  return true;
}

}  // namespace

Prop2Report check_prop2(const RingMap& phi) {
  const auto ps = primes(phi.source());
  const auto qs = primes(phi.target());
  const auto m = spec_map(phi, qs, ps);
  Prop2Report rep;
  rep.a = injective(m);
  rep.b = residue_maps_bijective(phi, ps, qs, m);
  rep.c = true;
  rep.c_reason = "finite ring: Ker(p) is generated by the finitely many e_i(x)1 - 1(x)e_i";
  rep.d = kaehler(phi).order() == 1;
  rep.all = rep.a && rep.b && rep.c && rep.d;
  return rep;
}

bool check_geo_v(const RingMap& phi) {
  const auto ps = primes(phi.source());
  const auto qs = primes(phi.target());
  const auto m = spec_map(phi, qs, ps);
  if (!injective(m)) return false;
  if (kaehler(phi).order() != 1) return false;
  return residue_maps_bijective(phi, ps, qs, m);
}

bool is_flat_module(const FiniteModule& m, std::uint64_t cap) {
  const RingPtr& r = m.ring();
  const LocalDecomposition d = decompose(r, cap);
  const auto ps = primes(d);
  const FpGroup& mg = m.additive();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Elem& e = d.idempotents[i];
    std::vector<Elem> em_gens, er_gens, ep_gens;
    for (std::size_t j = 0; j < mg.rank(); ++j) em_gens.push_back(m.act(e, mg.basis(j)));
    for (std::size_t k = 0; k < r->rank(); ++k) er_gens.push_back(r->mul(e, r->basis(k)));
    const auto pg = ps[i].ideal.additive_generators();
    for (const auto& p : pg) ep_gens.push_back(r->mul(e, p));
    std::vector<Elem> pem_gens;
    for (const auto& p : pg)
      for (const auto& x : em_gens) pem_gens.push_back(m.act(p, x));

    const BigInt em = Subgroup(mg, em_gens).order();
    const BigInt er = Subgroup(r->additive(), er_gens).order();
    const BigInt q = er / Subgroup(r->additive(), ep_gens).order();
    const BigInt ratio = em / Subgroup(mg, pem_gens).order();
    unsigned long n = 0;
    BigInt power = 1, free_order = 1;
    while (power < ratio) {
      power *= q;
      free_order *= er;
      ++n;
    }
    if (power != ratio) throw InvariantViolation("M/PM is not a vector space over the residue field");
    if (em != free_order) return false;
  }
  return true;
}

bool is_flat_map(const RingMap& phi) { return is_flat_module(restrict_scalars(phi, ring_as_module(phi.target()))); }

Verdict check_local_iso(const RingMap& phi) {
  if (!is_flat_map(phi) || !is_epimorphism(phi)) return Verdict::NotApplicable;
  const LocalDecomposition dr = decompose(phi.source());
  const LocalDecomposition ds = decompose(phi.target());
  const auto ps = primes(dr);
  const auto qs = primes(ds);
  const auto m = spec_map(phi, qs, ps);
  for (std::size_t j = 0; j < qs.size(); ++j) {
    const std::size_t i = m[j];
    const RingPtr& fr = dr.factors[i];
    std::vector<Elem> images;
    for (std::size_t b = 0; b < fr->rank(); ++b) images.push_back(ds.projections[j](phi(dr.lift(i, fr->basis(b)))));
    try {
      if (!RingMap::make(fr, ds.factors[j], std::move(images)).is_bijective()) return Verdict::Counterexample;
    } catch (const MapError&) {
      return Verdict::Counterexample;
    }
  }
  return Verdict::Confirmed;
}

Verdict verify_faithfully_flat_epi_iso(const RingMap& phi) {
  if (!is_flat_map(phi)) return Verdict::NotApplicable;
  const auto ps = primes(phi.source());
  const auto m = spec_map(phi, primes(phi.target()), ps);
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (std::find(m.begin(), m.end(), i) == m.end()) return Verdict::NotApplicable;
  if (!is_epimorphism(phi)) return Verdict::NotApplicable;
  return phi.is_bijective() ? Verdict::Confirmed : Verdict::Counterexample;
}

}  // namespace epilab
