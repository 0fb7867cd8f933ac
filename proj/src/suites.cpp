#include <algorithm>
#include <chrono>
#include <functional>

#include "epilab/harness.hpp"

namespace epilab {

namespace {

class Runner {
 public:
  explicit Runner(SuiteReport& rep) : rep_(rep) {}

  void fail(std::size_t index, std::string message, json instance = nullptr) {
    rep_.failures.push_back(Failure{index, std::move(message), std::move(instance)});
  }
  void tally(const std::string& key) { ++rep_.tallies[key]; }
  void note(std::string text) {
    if (rep_.notes.size() < 8) rep_.notes.push_back(std::move(text));
  }

  // Runs one instance; exceptions become failures carrying the reproducer.
  template <typename F>
  void run(std::size_t index, const json& instance, F&& body) {
    ++rep_.instances;
    try {
      body();
    } catch (const std::exception& e) {
      fail(index, std::string("exception: ") + e.what(), instance);
    }
  }

 private:
  SuiteReport& rep_;
};

json map_instance(const GeneratedMap& g) {
  return json{{"family", to_string(g.family)}, {"map", map_to_json(g.map)}};
}
json map_instance(const RingMap& m) { return json{{"map", map_to_json(m)}}; }

template <typename F>
void for_stream(Runner& run, const SuiteOptions& opts, std::size_t count, F&& body) {
  InstanceGenerator gen(opts.seed);
  for (std::size_t i = 0; i < count; ++i) {
    GeneratedMap g = gen.next();
    run.run(g.index, map_instance(g), [&] { body(g); });
  }
}

Poly random_poly(const RingPtr& r, const std::vector<Elem>& pool, std::uint32_t max_deg, std::mt19937_64& rng) {
  Poly f(r, {"x"});
  const std::uint32_t d = static_cast<std::uint32_t>(rng() % (max_deg + 1));
  for (std::uint32_t k = 0; k <= d; ++k) f = f + Poly::monomial(r, {"x"}, {k}, pool[rng() % pool.size()]);
  return f;
}

// coefficients from a random principal ideal half of the time
std::vector<Elem> coefficient_pool(const RingPtr& r, std::mt19937_64& rng) {
  const auto& elems = r->elements();
  if (rng() % 2) return elems;
  return ideal_from(r, {elems[rng() % elems.size()]}).elements();
}

// ---------------------------------------------------------------- suites

void th1_agreement(Runner& run, const SuiteOptions& opts) {
  for_stream(run, opts, opts.count.value_or(200), [&](const GeneratedMap& g) {
    const TensorSquare t = tensor_square(g.map);
    const EpiConditions c{is_epi_tensor(t), is_epi_mult(t), is_epi_coker(g.map), is_symmetric_square(t)};
    const bool module_cond = check_module_condition(g.map, ring_as_module(g.map.target()));
    if (!c.agree() || module_cond != c.mult)
      run.fail(g.index,
               "conditions disagree: tensor=" + std::to_string(c.tensor) + " mult=" + std::to_string(c.mult) +
                   " coker=" + std::to_string(c.coker) + " symmetric=" + std::to_string(c.symmetric) +
                   " module=" + std::to_string(module_cond),
               map_instance(g));
    if (!t.i_map.is_injective()) run.fail(g.index, "i is not injective", map_instance(g));
    run.tally(c.tensor ? "epi" : "non-epi");
    run.tally("family:" + to_string(g.family));
  });
}

void prop2_equiv(Runner& run, const SuiteOptions& opts) {
  for_stream(run, opts, opts.count.value_or(200), [&](const GeneratedMap& g) {
    const Prop2Report p = check_prop2(g.map);
    const bool epi = is_epimorphism(g.map);
    if (p.all != epi)
      run.fail(g.index,
               "spectral criterion=" + std::to_string(p.all) + " (a=" + std::to_string(p.a) + " b=" + std::to_string(p.b) +
                   " d=" + std::to_string(p.d) + ") but epimorphism=" + std::to_string(epi),
               map_instance(g));
    run.tally(epi ? "epi" : "non-epi");
    if (!p.a) run.tally("fails-a");
    if (!p.b) run.tally("fails-b");
    if (!p.d) run.tally("fails-d");
  });
}

void geo5_equiv(Runner& run, const SuiteOptions& opts) {
  for_stream(run, opts, opts.count.value_or(200), [&](const GeneratedMap& g) {
    const bool v = check_geo_v(g.map);
    const bool epi = is_epimorphism(g.map);
    if (v != epi)
      run.fail(g.index, "condition (v)=" + std::to_string(v) + " but epimorphism=" + std::to_string(epi),
               map_instance(g));
    run.tally(epi ? "epi" : "non-epi");
  });
}

void kaehler_epi(Runner& run, const SuiteOptions& opts) {
  const std::size_t count = opts.count.value_or(200);
  for_stream(run, opts, count, [&](const GeneratedMap& g) {
    const TensorSquare t = tensor_square(g.map);
    const KaehlerModule om = kaehler(t);
    if (!is_epi_tensor(t)) {
      run.tally(om.order() == 1 ? "non-epi-omega-zero" : "non-epi-omega-nonzero");
      return;
    }
    run.tally("epi");
    if (om.order() != 1) run.fail(g.index, "epimorphism with |Omega| = " + om.order().get_str(), map_instance(g));
    const RingPtr& s = g.map.target();
    std::vector<FiniteModule> modules{ring_as_module(s)};
    const auto ideals = all_ideals(s);
    for (std::size_t k = 0; k < ideals.size() && k < 4; ++k) modules.push_back(quotient_module(ideals[k]));
    for (const auto& m : modules)
      if (!check_module_condition(g.map, m))
        run.fail(g.index, "S (x)_R M -> M not bijective for M = " + m.name(), map_instance(g));
  });

  const auto f2 = zmod(2);
  const auto etale = structure_map(f2, poly_quotient(f2, {Elem{0}, Elem{1}, Elem{1}}));
  run.run(count, map_instance(etale), [&] {
    const auto om = kaehler(etale);
    if (om.order() != 1 || is_epimorphism(etale, true))
      run.fail(count, "etale witness: expected Omega = 0 and not an epimorphism", map_instance(etale));
    else
      run.note("etale witness zmod(2) -> zmod(2)[t]/(t^2+t): |Omega| = 1, not an epimorphism");
  });
  const auto dual = structure_map(f2, poly_quotient(f2, {Elem{0}, Elem{0}, Elem{1}}));
  run.run(count + 1, map_instance(dual), [&] {
    const auto om = kaehler(dual);
    if (om.order() != 4) run.fail(count + 1, "dual numbers: |Omega| = " + om.order().get_str(), map_instance(dual));
    else run.note("dual numbers zmod(2) -> zmod(2)[t]/(t^2): |Omega| = 4");
  });
}

void mccoy_oracle(Runner& run, const SuiteOptions& opts) {
  const auto rings = zoo_rings(32);
  InstanceGenerator gen(opts.seed);
  for (std::size_t i = 0; i < opts.count.value_or(500); ++i) {
    auto rng = gen.stream(i);
    const RingPtr& r = rings[rng() % rings.size()];
    const Poly f = random_poly(r, coefficient_pool(r, rng), 4, rng);
    const json inst{{"ring", ring_json(r)}, {"poly", f.to_string()}};
    run.run(i, inst, [&] {
      const auto c = mccoy_annihilator(f);
      const bool oracle = has_polynomial_annihilator(f, 4);
      if (c.has_value() != oracle)
        run.fail(i, std::string("mccoy ") + (c ? "found " + format_elem(*c) : "found none") + ", oracle says " +
                        (oracle ? "zero-divisor" : "regular"),
                 inst);
      if (c && (r->is_zero(*c) || !f.scaled(*c).is_zero())) run.fail(i, "invalid annihilator", inst);
      run.tally(c ? "zero-divisor" : "regular");
    });
  }
}

void coro7_regular(Runner& run, const SuiteOptions& opts) {
  const std::size_t want = opts.count.value_or(100);
  const auto rings = zoo_rings(32);
  InstanceGenerator gen(opts.seed);
  std::size_t faithful = 0;

  auto check = [&](std::size_t index, const std::vector<Poly>& fs) {
    const RingPtr& r = fs[0].ring();
    json polys = json::array();
    for (const auto& f : fs) polys.push_back(f.to_string());
    const json inst{{"ring", ring_json(r)}, {"polys", polys}};
    run.run(index, inst, [&] {
      bool common = false;
      for (const auto& c : r->elements()) {
        if (r->is_zero(c)) continue;
        if (std::all_of(fs.begin(), fs.end(), [&](const Poly& f) { return f.scaled(c).is_zero(); })) {
          common = true;
          break;
        }
      }
      try {
        const RegularElement res = regular_element(fs);
        ++faithful;
        run.tally("faithful");
        if (common) run.fail(index, "accepted a list with a common annihilator", inst);
        Poly sum(r, fs[0].vars());
        for (std::size_t k = 0; k < res.order.size(); ++k) sum = sum + fs[res.order[k]].shifted(0, res.shifts[k]);
        if (sum != res.element) run.fail(index, "certificate does not reproduce the element", inst);
        for (const auto& c : r->elements())
          if (!r->is_zero(c) && res.element.scaled(c).is_zero())
            run.fail(index, "element killed by " + format_elem(c), inst);
        if (has_polynomial_annihilator(res.element, 4)) run.fail(index, "element is a zero-divisor", inst);
      } catch (const NotFaithful& e) {
        run.tally("not-faithful");
        if (!common) run.fail(index, "NotFaithful raised without a common annihilator", inst);
        for (const auto& f : fs)
          if (!f.scaled(e.witness()).is_zero()) run.fail(index, "witness does not annihilate", inst);
      }
    });
  };

  const auto z6 = zmod(6);
  const std::vector<Poly> example{parse_poly("3", z6, {"x"}), parse_poly("2*x", z6)};
  check(0, example);
  const RegularElement ex = regular_element(example);
  if (ex.element != parse_poly("3 + 2*x^2", z6)) run.fail(0, "example gave " + ex.element.to_string());
  else run.note("zmod(6), {3, 2x} -> " + ex.element.to_string());

  for (std::size_t i = 1; faithful < want && i < 50 * want; ++i) {
    auto rng = gen.stream(i);
    const RingPtr& r = rings[rng() % rings.size()];
    const auto pool = coefficient_pool(r, rng);
    std::vector<Poly> fs;
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t k = 0; k < n; ++k) {
      Poly f = random_poly(r, pool, 3, rng);
      if (f.is_zero()) f = Poly::monomial(r, {"x"}, {static_cast<std::uint32_t>(k)}, pool.back());
      if (f.is_zero()) f = Poly::constant(r, {"x"}, r->one());
      fs.push_back(f);
    }
    check(i, fs);
  }
  if (faithful < want)
    run.fail(0, "only " + std::to_string(faithful) + " faithful lists generated, wanted " + std::to_string(want));
}

void lemma2_rewrite(Runner& run, const SuiteOptions& opts) {
  const auto rings = zoo_rings(16);
  InstanceGenerator gen(opts.seed);
  for (std::size_t i = 0; i < opts.count.value_or(200); ++i) {
    auto rng = gen.stream(i);
    const RingPtr& r = rings[rng() % rings.size()];
    const auto& elems = r->elements();
    const std::size_t n = 1 + rng() % 3;
    const auto vars = default_vars(n);
    Poly f(r, vars);
    const std::size_t terms = rng() % 7;
    for (std::size_t t = 0; t < terms; ++t) {
      Exponent e(n, 0);
      std::uint32_t budget = static_cast<std::uint32_t>(rng() % 4);
      for (std::size_t v = 0; v < n && budget; ++v) {
        e[v] = static_cast<std::uint32_t>(rng() % (budget + 1));
        budget -= e[v];
      }
      f = f + Poly::monomial(r, vars, e, elems[rng() % elems.size()]);
    }
    std::vector<Elem> c;
    for (std::size_t v = 0; v < n; ++v) c.push_back(elems[rng() % elems.size()]);
    f = f - Poly::constant(r, vars, f.eval(c));
    json point = json::array();
    for (const auto& x : c) point.push_back(r->to_natural(x));
    const json inst{{"ring", ring_json(r)}, {"poly", f.to_string()}, {"at", point}};
    run.run(i, inst, [&] {
      const auto h = eval_kernel_rewrite(f, c);
      Poly sum(r, vars);
      for (std::size_t v = 0; v < n; ++v)
        sum = sum + h[v] * (Poly::variable(r, vars, v) - Poly::constant(r, vars, c[v]));
      if (sum != f) run.fail(i, "sum h_i (x_i - c_i) = " + sum.to_string(), inst);
      const Poly shifted = f + Poly::constant(r, vars, r->one());
      if (!r->is_zero_ring()) {
        bool raised = false;
        try {
          eval_kernel_rewrite(shifted, c);
        } catch (const NotInKernel&) {
          raised = true;
        }
        if (!raised) run.fail(i, "f + 1 accepted although f(c) + 1 != 0", inst);
      }
      run.tally("vars=" + std::to_string(n));
    });
  }
}

void lemma7_flatness(Runner& run, const SuiteOptions&) {
  std::size_t index = 0;
  for (const auto& r : zoo_rings(64)) {
    const auto ideals = all_ideals(r);
    for (const auto& base : ideals) {
      const FiniteModule m = quotient_module(base);
      const json inst{{"ring", ring_json(r)}, {"module", m.name()}};
      const std::size_t i = index++;
      run.run(i, inst, [&] {
        const bool flat = is_flat_module(m);
        bool colons = true;
        for (const auto& a : ideals) {
          for (const auto& b : ideals)
            if (!module_colon(m, a, b).equal()) {
              colons = false;
              break;
            }
          if (!colons) break;
        }
        if (flat != colons)
          run.fail(i, "flatness " + std::to_string(flat) + " but colon criterion " + std::to_string(colons), inst);
        run.tally(flat ? "flat" : "non-flat");
        if (flat) return;
        for (const auto& a : ideals)
          for (const auto& x : r->elements()) {
            if (!module_colon(m, a, ideal_from(r, {x})).equal()) {
              std::string gens;
              for (const auto& g : a.additive_generators()) gens += format_elem(r->to_natural(g));
              if (gens.empty()) gens = "0";
              run.note("M = " + m.name() + ": I = (" + gens + "), a = " + format_elem(r->to_natural(x)));
              return;
            }
          }
        run.fail(i, "non-flat module without a principal colon witness", inst);
      });
    }
  }
}

void gabriel_axioms(Runner& run, const SuiteOptions& opts) {
  for_stream(run, opts, opts.count.value_or(100), [&](const GeneratedMap& g) {
    const GabrielFilter f = filter_of(g.map);
    const AxiomReport rep = verify_axioms(f);
    if (!rep.ok()) run.fail(g.index, rep.failures.front(), map_instance(g));
    for (const auto& i : f.members)
      for (const auto& j : f.universe)
        if (j.contains(i) && !extension(j, g.map).is_unit())
          run.fail(g.index, "extension of a larger ideal is proper", map_instance(g));
    run.tally("members=" + std::to_string(f.members.size()));
  });
}

// Flat epimorphisms out of r with target order <= 16, in two presentations.
std::vector<RingMap> flat_epis(const RingPtr& r) {
  std::vector<RingMap> out;
  const LocalDecomposition d = decompose(r);
  for (const auto& p : factor_projections(r))
    if (p.target()->order() <= 16) out.push_back(p);
  std::vector<RingMap> singles;
  for (std::size_t i = 0; i < d.size(); ++i) singles.push_back(quotient(r, {r->sub(r->one(), d.idempotents[i])}).projection);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
    std::vector<RingMap> parts;
    BigInt order = 1;
    for (std::size_t i = d.size(); i-- > 0;)
      if (mask >> i & 1) {
        parts.push_back(singles[i]);
        order *= singles[i].target()->order();
      }
    if (parts.size() >= 2 && order <= 16) out.push_back(tuple_map(parts));
  }
  return out;
}

void coro8_classify(Runner& run, const SuiteOptions&) {
  std::size_t index = 0;
  for (const auto& r : zoo_rings(64)) {
    const auto maps = flat_epis(r);
    std::vector<GabrielFilter> filters;
    for (const auto& m : maps) filters.push_back(filter_of(m));
    for (std::size_t a = 0; a < maps.size(); ++a)
      for (std::size_t b = 0; b < maps.size(); ++b) {
        const json inst{{"phi", map_to_json(maps[a])}, {"psi", map_to_json(maps[b])}};
        const std::size_t i = index++;
        run.run(i, inst, [&] {
          const bool same = filters_equal(filters[a], filters[b]);
          if (same) {
            const Classification c = classify_flat_epis(maps[a], maps[b]);
            if (c.verdict != FlatEpiClass::SameClass || !c.theta || !c.theta->is_bijective() ||
                !maps[a].then(*c.theta).same_as(maps[b]))
              run.fail(i, "equal filters but verdict " + to_string(c.verdict), inst);
            run.tally("same-class");
          } else {
            const IsoSearch s = find_compatible_iso(maps[a], maps[b]);
            if (!s.exhausted) run.fail(i, "search cap hit", inst);
            if (s.theta) run.fail(i, "unequal filters but an isomorphism exists", inst);
            if (classify_flat_epis(maps[a], maps[b]).verdict != FlatEpiClass::Different)
              run.fail(i, "unequal filters not classified as different", inst);
            run.tally("different");
          }
        });
      }
  }
}

void cor2_ff_epi(Runner& run, const SuiteOptions& opts) {
  const std::size_t count = opts.count.value_or(200);
  for_stream(run, opts, count, [&](const GeneratedMap& g) {
    const Verdict v = verify_faithfully_flat_epi_iso(g.map);
    if (v == Verdict::Counterexample) run.fail(g.index, "faithfully flat epimorphism is not bijective", map_instance(g));
    run.tally("ff-epi:" + to_string(v));
  });

  // epimorphisms out of finite fields
  InstanceGenerator gen(opts.seed);
  std::size_t index = count;
  for (const auto& k : zoo_fields()) {
    auto rng = gen.stream(index);
    std::vector<RingMap> maps;
    for (const auto& s : zoo_rings(64)) {
      try {
        maps.push_back(structure_map(k, s));
      } catch (const MapError&) {
      }
    }
    for (MapFamily fam : all_families())
      if (auto m = gen.map_from(k, fam, rng)) maps.push_back(*m);
    for (const auto& m : maps) {
      const std::size_t i = index++;
      run.run(i, map_instance(m), [&] {
        if (m.target()->is_zero_ring() || !is_epimorphism(m)) return;
        run.tally("field-source:epi");
        if (!m.is_bijective()) run.fail(i, "epimorphism from a field is not bijective", map_instance(m));
      });
    }
  }
}

void prop1_local_iso(Runner& run, const SuiteOptions& opts) {
  const std::size_t count = opts.count.value_or(200);
  for_stream(run, opts, count, [&](const GeneratedMap& g) {
    const Verdict v = check_local_iso(g.map);
    if (v == Verdict::Counterexample) run.fail(g.index, "local map of a flat epimorphism not bijective", map_instance(g));
    run.tally("stream:" + to_string(v));
  });
  std::size_t index = count;
  for (const auto& r : zoo_rings(64))
    for (const auto& p : factor_projections(r)) {
      const std::size_t i = index++;
      run.run(i, map_instance(p), [&] {
        const Verdict v = check_local_iso(p);
        if (v != Verdict::Confirmed) run.fail(i, "factor projection gave " + to_string(v), map_instance(p));
        run.tally("factor:" + to_string(v));
      });
    }
}

void th21_finite(Runner& run, const SuiteOptions&) {
  std::size_t index = 0;
  for (const auto& r : zoo_rings(64)) {
    const std::size_t i = index++;
    const json inst{{"ring", ring_json(r)}};
    run.run(i, inst, [&] {
      for (const auto& x : r->elements())
        if (r->is_regular(x) && !r->inverse(x)) run.fail(i, "regular element " + format_elem(x) + " is not a unit", inst);
      for (const auto& ideal : all_ideals(r)) {
        if (!is_faithful(ideal)) continue;
        run.tally("faithful-ideals");
        const auto elems = ideal.elements();
        if (std::none_of(elems.begin(), elems.end(), [&](const Elem& x) { return r->is_regular(x); }))
          run.fail(i, "faithful ideal without a regular element", inst);
      }
    });
  }
}

void lemma33_injectivity(Runner& run, const SuiteOptions& opts) {
  const auto rings = zoo_rings(64);
  InstanceGenerator gen(opts.seed);
  for (std::size_t i = 0; i < opts.count.value_or(200); ++i) {
    auto rng = gen.stream(i);
    const RingPtr& r = rings[rng() % rings.size()];
    const auto projections = factor_projections(r);
    const RingMap g = rng() % 2 ? projections.back() : projections[rng() % projections.size()];
    const MapFamily fam = all_families()[rng() % all_families().size()];
    auto h = gen.map_from(g.target(), fam, rng);
    if (!h) h = RingMap::identity(g.target());
    const json inst{{"g", map_to_json(g)}, {"h", map_to_json(*h)}};
    run.run(i, inst, [&] {
      if (!is_flat_map(g) || !is_epimorphism(g)) run.fail(i, "g is not a flat epimorphism", inst);
      const RingMap f = g.then(*h);
      if (!f.is_injective()) {
        run.tally("f-not-injective");
        return;
      }
      run.tally("f-injective");
      if (!h->is_injective()) run.fail(i, "h is not injective although f = h g is", inst);
    });
  }
}

using SuiteFn = std::function<void(Runner&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"th1-agreement", th1_agreement},
      {"prop2-equiv", prop2_equiv},
      {"geo5-equiv", geo5_equiv},
      {"kaehler-epi", kaehler_epi},
      {"mccoy-oracle", mccoy_oracle},
      {"coro7-regular", coro7_regular},
      {"lemma2-rewrite", lemma2_rewrite},
      {"lemma7-flatness", lemma7_flatness},
      {"gabriel-axioms", gabriel_axioms},
      {"coro8-classify", coro8_classify},
      {"cor2-ff-epi", cor2_ff_epi},
      {"prop1-local-iso", prop1_local_iso},
      {"th21-finite-hypothesis", th21_finite},
      {"lemma33-injectivity", lemma33_injectivity},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
  if (it == reg.end()) throw UnknownSuite(name);
  SuiteReport rep;
  rep.name = name;
  rep.seed = opts.seed;
  const auto start = std::chrono::steady_clock::now();
  Runner runner(rep);
  it->second(runner, opts);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::stable_sort(rep.failures.begin(), rep.failures.end(),
                   [](const Failure& a, const Failure& b) { return a.index < b.index; });
  return rep;
}

}  // namespace epilab
