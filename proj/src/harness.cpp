#include "epilab/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace epilab {

// ---------------------------------------------------------------- zoo

const std::vector<ZooEntry>& ring_zoo() {
  static const std::vector<ZooEntry> zoo = [] {
    std::vector<ZooEntry> z;
    for (std::int64_t n = 2; n <= 16; ++n) z.push_back({zmod(n), "zmod(" + std::to_string(n) + ")"});
    for (std::int64_t a = 2; a <= 16; ++a)
      for (std::int64_t b = a; a * b <= 64 && b <= 16; ++b) {
        z.push_back({product({zmod(a), zmod(b)}),
                     "zmod(" + std::to_string(a) + ")xzmod(" + std::to_string(b) + ")"});
        for (std::int64_t c = b; a * b * c <= 64 && c <= 16; ++c)
          z.push_back({product({zmod(a), zmod(b), zmod(c)}), "zmod(" + std::to_string(a) + ")xzmod(" +
                                                                 std::to_string(b) + ")xzmod(" + std::to_string(c) +
                                                                 ")"});
      }
    for (std::int64_t p : {2, 3, 4}) {
      const RingPtr base = zmod(p);
      for (std::size_t d = 1; d <= 3; ++d) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(p);
        for (std::uint64_t code = 0; code < total; ++code) {
          std::vector<Elem> f;
          std::uint64_t c = code;
          std::string label = "zmod(" + std::to_string(p) + ")[t]/(";
          for (std::size_t i = 0; i < d; ++i) {
            const auto v = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(p));
            c /= static_cast<std::uint64_t>(p);
            f.push_back(Elem{v});
            label += std::to_string(v) + ",";
          }
          f.push_back(Elem{1});
          z.push_back({poly_quotient(base, f), label + "1)"});
        }
      }
    }
    return z;
  }();
  return zoo;
}

std::vector<RingPtr> zoo_rings(std::uint64_t max_order) {
  std::vector<RingPtr> out;
  for (const auto& e : ring_zoo())
    if (e.ring->order() <= static_cast<unsigned long>(max_order)) out.push_back(e.ring);
  return out;
}

std::vector<RingPtr> zoo_fields() {
  std::vector<RingPtr> out;
  for (const auto& e : ring_zoo()) {
    const auto& r = *e.ring;
    bool field = true;
    for (const auto& x : r.elements())
      if (!r.is_zero(x) && !r.is_unit(x)) {
        field = false;
        break;
      }
    if (field) out.push_back(e.ring);
  }
  return out;
}

std::string to_string(MapFamily f) {
  switch (f) {
    case MapFamily::Identity:
      return "identity";
    case MapFamily::Surjection:
      return "surjection";
    case MapFamily::Factor:
      return "factor";
    case MapFamily::Diagonal:
      return "diagonal";
    case MapFamily::PolyInclusion:
      return "poly-inclusion";
    case MapFamily::Random:
      return "random";
    case MapFamily::Crt:
      return "crt";
  }
  return "?";
}

const std::vector<MapFamily>& all_families() {
  static const std::vector<MapFamily> f{MapFamily::Identity, MapFamily::Surjection,    MapFamily::Factor,
                                        MapFamily::Diagonal, MapFamily::PolyInclusion, MapFamily::Random,
                                        MapFamily::Crt};
  return f;
}

std::vector<RingMap> factor_projections(const RingPtr& r) {
  const LocalDecomposition d = decompose(r);
  std::vector<RingMap> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
    Elem e = r->zero();
    for (std::size_t i = 0; i < d.size(); ++i)
      if (mask >> i & 1) e = r->add(e, d.idempotents[i]);
    out.push_back(quotient(r, {r->sub(r->one(), e)}).projection);
  }
  return out;
}

RingMap tuple_map(const std::vector<RingMap>& maps) {
  if (maps.empty()) throw AlgebraError("tuple_map needs at least one map");
  const RingPtr& r = maps[0].source();
  std::vector<RingPtr> targets;
  for (const auto& m : maps) {
    if (m.source() != r) throw AlgebraError("tuple_map: maps have different sources");
    targets.push_back(m.target());
  }
  const RingPtr t = product(targets);
  std::vector<Elem> images;
  for (std::size_t i = 0; i < r->rank(); ++i) {
    const Elem b = r->basis(i);
    Elem nat;
    for (const auto& m : maps) {
      const Elem part = m.target()->to_natural(m(b));
      nat.insert(nat.end(), part.begin(), part.end());
    }
    images.push_back(t->from_natural(nat));
  }
  return RingMap::make(r, t, std::move(images));
}

// ---------------------------------------------------------------- generator

namespace {

const Elem& pick(const std::vector<Elem>& v, std::mt19937_64& rng) { return v[rng() % v.size()]; }

bool fits(const BigInt& order, std::uint64_t cap) { return order <= static_cast<unsigned long>(cap); }

}  // namespace

InstanceGenerator::InstanceGenerator(std::uint64_t seed, std::uint64_t max_order)
    : seed_(seed), max_order_(max_order), sources_(zoo_rings(max_order)) {}

std::mt19937_64 InstanceGenerator::stream(std::uint64_t index) const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::optional<RingMap> InstanceGenerator::map_from(const RingPtr& source, MapFamily family,
                                                   std::mt19937_64& rng) const {
  const auto& elems = source->elements();
  switch (family) {
    case MapFamily::Identity:
      return RingMap::identity(source);
    case MapFamily::Surjection: {
      std::vector<Elem> gens{pick(elems, rng)};
      if (rng() % 3 == 0) gens.push_back(pick(elems, rng));
      return quotient(source, gens).projection;
    }
    case MapFamily::Factor: {
      const auto maps = factor_projections(source);
      return maps[rng() % maps.size()];
    }
    case MapFamily::Diagonal: {
      // R -> R x R/(x); x = 0 gives the diagonal
      const Elem x = rng() % 2 ? source->zero() : pick(elems, rng);
      const auto q = quotient(source, {x});
      if (!fits(source->order() * q.ring->order(), max_order_)) return std::nullopt;
      return tuple_map({RingMap::identity(source), q.projection});
    }
    case MapFamily::PolyInclusion: {
      const std::size_t d = 1 + rng() % 3;
      BigInt order = 1;
      for (std::size_t i = 0; i < d; ++i) order *= source->order();
      if (!fits(order, max_order_)) return std::nullopt;
      std::vector<Elem> f;
      for (std::size_t i = 0; i < d; ++i) f.push_back(pick(elems, rng));
      f.push_back(source->one());
      const RingPtr t = poly_quotient(source, f);
      const std::size_t width = source->natural_moduli().size();
      std::vector<Elem> images;
      for (std::size_t i = 0; i < source->rank(); ++i) {
        Elem nat = source->to_natural(source->basis(i));
        nat.resize(width * d, 0);
        images.push_back(t->from_natural(nat));
      }
      return RingMap::make(source, t, std::move(images));
    }
    case MapFamily::Random: {
      const RingPtr& t = sources_[rng() % sources_.size()];
      const auto& targets = t->elements();
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Elem> images;
        for (std::size_t i = 0; i < source->rank(); ++i) images.push_back(pick(targets, rng));
        try {
          return RingMap::make(source, t, std::move(images));
        } catch (const MapError&) {
        }
      }
      return std::nullopt;
    }
    case MapFamily::Crt: {
      const auto a = quotient(source, {pick(elems, rng)});
      const auto b = quotient(source, {pick(elems, rng)});
      if (!fits(a.ring->order() * b.ring->order(), max_order_)) return std::nullopt;
      return tuple_map({a.projection, b.projection});
    }
  }
  return std::nullopt;
}

GeneratedMap InstanceGenerator::next() {
  const std::size_t index = index_++;
  std::mt19937_64 rng = stream(index);
  std::discrete_distribution<std::size_t> family_dist(weights.begin(), weights.end());
  const MapFamily family = all_families()[family_dist(rng)];
  for (int attempt = 0; attempt < 32; ++attempt) {
    const RingPtr& source = sources_[rng() % sources_.size()];
    if (auto m = map_from(source, family, rng)) return GeneratedMap{index, family, std::move(*m)};
  }
  return GeneratedMap{index, MapFamily::Identity, RingMap::identity(sources_[rng() % sources_.size()])};
}

// ---------------------------------------------------------------- oracle

bool has_polynomial_annihilator(const Poly& f, std::uint32_t max_degree) {
  const RingPtr& r = f.ring();
  if (r->is_zero_ring()) return false;
  if (f.is_zero()) return true;
  const std::uint32_t df = *f.degree();
  const std::size_t slots = max_degree + 1;
  const BigInt domain = [&] {
    BigInt s = 1;
    for (std::size_t i = 0; i < slots; ++i) s *= r->order();
    return s;
  }();

  if (domain <= 20000) {
    const auto& elems = r->elements();
    const std::uint64_t n = elems.size();
    const std::uint64_t total = domain.get_ui();
    for (std::uint64_t code = 1; code < total; ++code) {
      Poly g(r, f.vars());
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < slots; ++i, c /= n) g = g + Poly::monomial(r, f.vars(), {i}, elems[c % n]);
      if ((g * f).is_zero()) return true;
    }
    return false;
  }

  // image of g -> g.f inside R^(max_degree + deg f + 1)
  const std::size_t out_slots = max_degree + df + 1;
  const auto& inv = r->additive().invariants();
  std::vector<std::int64_t> moduli;
  for (std::size_t i = 0; i < out_slots; ++i) moduli.insert(moduli.end(), inv.begin(), inv.end());
  std::vector<Elem> gens;
  for (std::uint32_t i = 0; i <= max_degree; ++i)
    for (std::size_t k = 0; k < r->rank(); ++k) {
      const Poly p = Poly::monomial(r, f.vars(), {i}, r->basis(k)) * f;
      Elem flat;
      for (std::uint32_t e = 0; e < out_slots; ++e) {
        const Elem c = p.coefficient({e});
        flat.insert(flat.end(), c.begin(), c.end());
      }
      gens.push_back(std::move(flat));
    }
  return Subgroup(moduli, gens).order() < domain;
}

// ---------------------------------------------------------------- reports

json SuiteReport::to_json() const {
  json fails = json::array();
  for (const auto& f : failures) fails.push_back({{"index", f.index}, {"message", f.message}, {"instance", f.instance}});
  json t = json::object();
  for (const auto& [k, v] : tallies) t[k] = v;
  return json{{"suite", name}, {"seed", seed}, {"instances", instances}, {"failures", fails},
              {"tallies", t},   {"notes", notes}, {"ok", ok()},         {"wall_seconds", wall_seconds}};
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << (ok() ? "PASS" : "FAIL") << "  " << name << "  seed=" << seed << "  instances=" << instances
     << "  failures=" << failures.size() << "  time=" << std::fixed << std::setprecision(2) << wall_seconds << "s\n";
  if (!tallies.empty()) {
    os << "      ";
    for (const auto& [k, v] : tallies) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const auto& n : notes) os << "      " << n << "\n";
  for (const auto& f : failures) {
    os << "  #" << f.index << ": " << f.message << "\n";
    if (!f.instance.is_null()) os << "      reproducer: " << f.instance.dump() << "\n";
  }
  return os.str();
}

}  // namespace epilab
