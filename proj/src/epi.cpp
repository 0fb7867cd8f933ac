#include "epilab/epi.hpp"

namespace epilab {

namespace {

void require_same_ring(const FiniteModule& a, const FiniteModule& b) {
  if (a.ring() != b.ring()) throw AlgebraError("modules " + a.name() + " and " + b.name() + " have different rings");
}

// sum_s raw_s * f(i_s, j_s), with f valued in an additive group
template <typename F>
Elem contract_pairs(const TensorOverZ& z, const FpGroup& out, const Elem& raw, F f) {
  Elem acc = out.zero();
  for (std::size_t s = 0; s < z.pairs.size(); ++s) {
    if (raw[s] == 0) continue;
    acc = out.add(acc, out.scale(raw[s], f(z.pairs[s].first, z.pairs[s].second)));
  }
  return acc;
}

}  // namespace

ModuleTensor tensor_over_ring(const FiniteModule& a, const FiniteModule& b) {
  require_same_ring(a, b);
  const auto& r = *a.ring();
  ModuleTensor t;
  t.z = tensor_over_z(a.additive(), b.additive());
  std::vector<Elem> rels = t.z.pres.relations.generators();
  const std::size_t n = t.z.raw_moduli.size();
  for (std::size_t k = 0; k < r.rank(); ++k) {
    const Elem rk = r.basis(k);
    for (std::size_t i = 0; i < a.additive().rank(); ++i)
      for (std::size_t j = 0; j < b.additive().rank(); ++j) {
        const Elem ai = a.additive().basis(i), bj = b.additive().basis(j);
        const Elem left = t.z.pure_raw(a.act(rk, ai), bj);
        const Elem right = t.z.pure_raw(ai, b.act(rk, bj));
        Elem d(n);
        for (std::size_t s = 0; s < n; ++s) d[s] = mod_floor(left[s] - right[s], t.z.raw_moduli[s]);
        rels.push_back(std::move(d));
      }
  }
  t.pres = present(t.z.raw_moduli, rels);
  return t;
}

TensorSquare tensor_square(const RingMap& phi) {
  const RingPtr& s = phi.target();
  const FiniteModule sr = restrict_scalars(phi, ring_as_module(s));
  ModuleTensor carrier = tensor_over_ring(sr, sr);
  const TensorOverZ& z = carrier.z;
  const std::size_t n = z.raw_moduli.size();

  // products of raw basis pure tensors
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const auto [i, j] = z.pairs[a];
      const auto [k, l] = z.pairs[b];
      table[a][b] = z.pure_raw(s->mul(s->basis(i), s->basis(k)), s->mul(s->basis(j), s->basis(l)));
      table[b][a] = table[a][b];
    }
  const auto& moduli = z.raw_moduli;
  auto mul = [&table, &moduli, n](const Elem& x, const Elem& y) {
    Elem out(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (y[b] == 0) continue;
        const Elem& p = table[a][b];
        for (std::size_t c = 0; c < n; ++c)
          if (p[c] != 0) {
            const std::int64_t m = moduli[c];
            out[c] = mod_floor(out[c] + mod_floor(mod_floor(x[a], m) * mod_floor(y[b], m), m) * p[c], m);
          }
      }
    }
    return out;
  };

  RawRing raw{moduli, carrier.pres.relations.generators(), mul, z.pure_raw(s->one(), s->one())};
  BuiltRing built = build_ring(raw, s->name() + " (x) " + s->name());
  const RingPtr& t = built.ring;

  // Recompute basis products from a second lift shifted by each relation.
  const auto rels = carrier.pres.relations.generators();
  for (std::size_t k = 0; k < t->rank(); ++k) {
    const Elem lk = built.pres.section(t->basis(k));
    for (const auto& rel : rels) {
      Elem shifted(n);
      for (std::size_t c = 0; c < n; ++c) shifted[c] = mod_floor(lk[c] + rel[c], moduli[c]);
      for (std::size_t l = 0; l < t->rank(); ++l)
        if (built.pres.project(mul(shifted, built.pres.section(t->basis(l)))) != t->structure_constants()[k][l])
          throw InvariantViolation("multiplication on " + t->name() + " depends on the lift");
    }
  }
  carrier.pres = built.pres;

  std::vector<Elem> iv, jv, pv;
  for (std::size_t k = 0; k < s->rank(); ++k) {
    iv.push_back(carrier.pure(s->basis(k), s->one()));
    jv.push_back(carrier.pure(s->one(), s->basis(k)));
  }
  for (std::size_t k = 0; k < t->rank(); ++k)
    pv.push_back(contract_pairs(z, s->additive(), built.pres.section(t->basis(k)),
                                [&](std::size_t i, std::size_t j) { return s->mul(s->basis(i), s->basis(j)); }));

  TensorSquare out{phi,
                   t,
                   RingMap::make(s, t, std::move(iv)),
                   RingMap::make(s, t, std::move(jv)),
                   RingMap::make(t, s, std::move(pv)),
                   std::move(carrier)};
  if (!out.i_map.then(out.p_map).same_as(RingMap::identity(s)) ||
      !out.j_map.then(out.p_map).same_as(RingMap::identity(s)))
    throw InvariantViolation("p is not a retraction of i and j on " + t->name());
  if (!phi.then(out.i_map).same_as(phi.then(out.j_map)))
    throw InvariantViolation("i and j disagree on the image of the source in " + t->name());
  return out;
}

bool is_epi_tensor(const TensorSquare& t) {
  const auto& s = *t.phi.target();
  for (std::size_t k = 0; k < s.rank(); ++k)
    if (t.i_map(s.basis(k)) != t.j_map(s.basis(k))) return false;
  return true;
}

bool is_epi_mult(const TensorSquare& t) { return t.ring->order() == t.phi.target()->order(); }

bool is_symmetric_square(const TensorSquare& t) {
  const auto& s = *t.phi.target();
  for (std::size_t a = 0; a < s.rank(); ++a)
    for (std::size_t b = a + 1; b < s.rank(); ++b)
      if (t.pure_tensor(s.basis(a), s.basis(b)) != t.pure_tensor(s.basis(b), s.basis(a))) return false;
  return true;
}

bool is_epi_tensor(const RingMap& phi) { return is_epi_tensor(tensor_square(phi)); }
bool is_epi_mult(const RingMap& phi) { return is_epi_mult(tensor_square(phi)); }
bool is_symmetric_square(const RingMap& phi) { return is_symmetric_square(tensor_square(phi)); }

bool is_epi_coker(const RingMap& phi) {
  const auto& r = *phi.source();
  const FiniteModule sr = restrict_scalars(phi, ring_as_module(phi.target()));
  std::vector<Elem> image;
  for (std::size_t k = 0; k < r.rank(); ++k) image.push_back(phi(r.basis(k)));
  const ModuleQuotient coker = quotient_module(sr, image);
  return tensor_over_ring(sr, coker.module).group().is_trivial();
}

bool check_module_condition(const RingMap& phi, const FiniteModule& m) {
  const RingPtr& s = phi.target();
  if (m.ring() != s) throw AlgebraError("module " + m.name() + " is not over " + s->name());
  const FiniteModule sr = restrict_scalars(phi, ring_as_module(s));
  const FiniteModule mr = restrict_scalars(phi, m);
  const ModuleTensor t = tensor_over_ring(sr, mr);
  std::vector<Elem> images;
  for (std::size_t k = 0; k < t.group().rank(); ++k)
    images.push_back(contract_pairs(t.z, m.additive(), t.pres.section(t.group().basis(k)),
                                    [&](std::size_t i, std::size_t j) {
                                      return m.act(s->basis(i), m.additive().basis(j));
                                    }));
  return t.group().order() == m.order() && Subgroup(m.additive(), images).is_whole();
}

EpiConditions epi_conditions(const RingMap& phi) {
  const TensorSquare t = tensor_square(phi);
  return EpiConditions{is_epi_tensor(t), is_epi_mult(t), is_epi_coker(phi), is_symmetric_square(t)};
}

bool is_epimorphism(const RingMap& phi, bool paranoid) {
  if (!paranoid) return is_epi_tensor(phi);
  const EpiConditions c = epi_conditions(phi);
  if (!c.agree())
    throw InvariantViolation("epimorphism conditions disagree on " + phi.source()->name() + " -> " +
                             phi.target()->name());
  return c.tensor;
}

KaehlerModule kaehler(const TensorSquare& t) {
  const RingPtr& s = t.phi.target();
  const RingPtr& tr = t.ring;
  std::vector<Elem> diffs;
  for (std::size_t k = 0; k < s->rank(); ++k)
    diffs.push_back(tr->sub(t.i_map(s->basis(k)), t.j_map(s->basis(k))));
  const Ideal j(tr, diffs);
  const Ideal j2 = ideal_product(j, j);
  if (!j.contains(j2)) throw InvariantViolation("J^2 is not inside J");

  const Presentation q = quotient_presentation(tr->additive(), j2.additive_generators());
  std::vector<Elem> jq;
  for (const auto& g : j.additive_generators()) jq.push_back(q.project(g));
  const SubgroupPresentation omega = present_subgroup(Subgroup(q.group, jq));
  const FpGroup& og = omega.pres.group;
  if (og.order() * j2.order() != j.order()) throw InvariantViolation("|J/J^2| mismatch");

  std::vector<std::vector<Elem>> action(s->rank());
  for (std::size_t i = 0; i < s->rank(); ++i) {
    const Elem si = t.i_map(s->basis(i));
    for (std::size_t k = 0; k < og.rank(); ++k) {
      const Elem w = q.section(omega.embed(og.basis(k)));
      action[i].push_back(omega.coordinates(q.project(tr->mul(si, w))));
    }
  }
  KaehlerModule out;
  out.module = FiniteModule::create(s, og, std::move(action), "Omega(" + s->name() + ")");
  for (const auto& d : diffs) out.generators.push_back(omega.coordinates(q.project(d)));
  if (!out.module.submodule(out.generators).is_whole())
    throw InvariantViolation("differentials do not generate the Kaehler module");
  return out;
}

KaehlerModule kaehler(const RingMap& phi) { return kaehler(tensor_square(phi)); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotApplicable:
      return "not-applicable";
    case Verdict::Confirmed:
      return "confirmed";
    case Verdict::Counterexample:
      return "COUNTEREXAMPLE";
  }
  return "?";
}

}  // namespace epilab
