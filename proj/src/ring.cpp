#include "epilab/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace epilab {

namespace {

std::vector<Elem> natural_relations(const FiniteRing& r) {
  if (r.natural()) return r.natural()->relations.generators();
  return {};
}

std::string ideal_text(const std::vector<Elem>& gens) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << format_elem(gens[i]);
  os << ')';
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- FiniteRing

RingPtr FiniteRing::create(RingData data) {
  const std::size_t k = data.additive.rank();
  if (data.mult.size() != k) throw AlgebraError("structure constants: wrong number of rows");
  for (auto& row : data.mult) {
    if (row.size() != k) throw AlgebraError("structure constants: wrong row width");
    for (auto& e : row) e = data.additive.reduce(e);
  }
  data.one = data.additive.reduce(data.one);
  std::shared_ptr<FiniteRing> r(new FiniteRing(std::move(data)));
  const FpGroup& g = r->data_.additive;
  const auto& m = r->data_.mult;
  const auto& d = g.invariants();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (m[i][j] != m[j][i])
        throw AlgebraError("ring axiom fails: e" + std::to_string(i) + "*e" + std::to_string(j) +
                           " != e" + std::to_string(j) + "*e" + std::to_string(i));
      if (!g.is_zero(g.scale(d[i], m[i][j])))
        throw AlgebraError("multiplication not compatible with additive orders");
    }
  for (std::size_t i = 0; i < k; ++i)
    if (r->mul(r->data_.one, r->basis(i)) != r->basis(i))
      throw AlgebraError("ring axiom fails: 1*e" + std::to_string(i) + " != e" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        if (r->mul(m[i][j], r->basis(l)) != r->mul(r->basis(i), m[j][l]))
          throw AlgebraError("ring axiom fails: multiplication is not associative on (e" +
                             std::to_string(i) + ", e" + std::to_string(j) + ", e" +
                             std::to_string(l) + ")");
  return r;
}

Elem FiniteRing::mul(const Elem& a, const Elem& b) const {
  const auto& d = data_.additive.invariants();
  const std::size_t k = d.size();
  Elem out(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      const std::int64_t c = a[i] * b[j];
      const Elem& m = data_.mult[i][j];
      for (std::size_t l = 0; l < k; ++l)
        if (m[l] != 0) out[l] = (out[l] + (c % d[l]) * m[l]) % d[l];
    }
  }
  return out;
}

Elem FiniteRing::pow(Elem a, std::uint64_t n) const {
  Elem result = data_.one;
  while (n > 0) {
    if (n & 1) result = mul(result, a);
    a = mul(a, a);
    n >>= 1;
  }
  return result;
}

Subgroup FiniteRing::multiple_group(const Elem& a) const {
  std::vector<Elem> gens;
  gens.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) gens.push_back(mul(a, basis(i)));
  return Subgroup(data_.additive, gens);
}

bool FiniteRing::is_regular(const Elem& a) const { return multiple_group(a).is_whole(); }

std::optional<Elem> FiniteRing::inverse(const Elem& a) const {
  if (!is_unit(a)) return std::nullopt;
  for (const auto& y : elements())
    if (mul(a, y) == data_.one) return y;
  return std::nullopt;
}

const std::vector<Elem>& FiniteRing::elements() const {
  std::call_once(elements_once_, [this] {
    if (data_.additive.order() > kEnumerationCap)
      throw AlgebraError("ring " + data_.name + " too large to enumerate");
    elements_ = std::make_shared<const std::vector<Elem>>(data_.additive.elements());
  });
  if (!elements_) throw AlgebraError("ring " + data_.name + " too large to enumerate");
  return *elements_;
}

std::vector<std::int64_t> FiniteRing::natural_moduli() const {
  return data_.natural ? data_.natural->raw_moduli : data_.additive.invariants();
}

Elem FiniteRing::from_natural(const Elem& raw) const {
  const auto mod = natural_moduli();
  if (raw.size() != mod.size())
    throw AlgebraError("malformed element " + format_elem(raw) + ": ring " + data_.name +
                       " expects " + std::to_string(mod.size()) + " coordinates");
  if (data_.natural) return data_.natural->project(raw);
  return data_.additive.reduce(raw);
}

Elem FiniteRing::to_natural(const Elem& x) const {
  if (data_.natural) return data_.natural->section(x);
  return x;
}

BuiltRing build_ring(const RawRing& raw, std::string name, std::optional<json> description,
                     bool raw_is_natural) {
  Presentation pres = present(raw.moduli, raw.relations);
  const std::size_t n = raw.moduli.size();
  for (const auto& g : pres.relations.generators())
    for (std::size_t j = 0; j < n; ++j) {
      Elem u(n, 0);
      u[j] = 1;
      if (!pres.group.is_zero(pres.project(raw.mul(g, u))))
        throw AlgebraError("relations of " + name + " do not span an ideal");
    }
  const std::size_t k = pres.group.rank();
  std::vector<Elem> lifts;
  for (std::size_t i = 0; i < k; ++i) lifts.push_back(pres.section(pres.group.basis(i)));
  RingData data;
  data.additive = pres.group;
  data.mult.assign(k, std::vector<Elem>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      data.mult[i][j] = pres.project(raw.mul(lifts[i], lifts[j]));
      data.mult[j][i] = data.mult[i][j];
    }
  data.one = pres.project(raw.one);
  data.name = std::move(name);
  data.description = std::move(description);
  if (raw_is_natural) data.natural = pres;
  RingPtr ring = FiniteRing::create(std::move(data));
  return BuiltRing{std::move(ring), std::move(pres)};
}

// ---------------------------------------------------------------- RingMap

RingMap RingMap::make(RingPtr source, RingPtr target, std::vector<Elem> images) {
  const auto& sg = source->additive();
  const auto& tg = target->additive();
  if (images.size() != sg.rank())
    throw MapError("malformed", "expected " + std::to_string(sg.rank()) + " images, got " +
                                    std::to_string(images.size()));
  for (auto& im : images) {
    tg.check(im);
    im = tg.reduce(im);
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    if (!tg.is_zero(tg.scale(sg.invariants()[i], images[i])))
      throw MapError("not additive", "e" + std::to_string(i) + " has order " +
                                         std::to_string(sg.invariants()[i]) + " but " +
                                         std::to_string(sg.invariants()[i]) + "*" +
                                         format_elem(images[i]) + " != 0 in " + target->name());
  RingMap phi(std::move(source), std::move(target), std::move(images));
  if (phi.apply(phi.source_->one()) != phi.target_->one())
    throw MapError("not unital", "1 maps to " + format_elem(phi.apply(phi.source_->one())));
  const auto& m = phi.source_->structure_constants();
  for (std::size_t i = 0; i < sg.rank(); ++i)
    for (std::size_t j = i; j < sg.rank(); ++j)
      if (phi.apply(m[i][j]) != phi.target_->mul(phi.images_[i], phi.images_[j]))
        throw MapError("not multiplicative",
                       "phi(e" + std::to_string(i) + "*e" + std::to_string(j) + ") differs");
  return phi;
}

RingMap RingMap::identity(const RingPtr& r) {
  std::vector<Elem> images;
  for (std::size_t i = 0; i < r->rank(); ++i) images.push_back(r->basis(i));
  return RingMap(r, r, std::move(images));
}

Elem RingMap::apply(const Elem& x) const {
  const auto& tg = target_->additive();
  const auto& d = tg.invariants();
  Elem y = tg.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = (y[j] + (x[i] % d[j]) * images_[i][j]) % d[j];
  }
  return y;
}

RingMap RingMap::then(const RingMap& next) const {
  if (next.source_ != target_ && next.source_->additive() != target_->additive())
    throw AlgebraError("composition: rings do not match");
  std::vector<Elem> images;
  for (const auto& im : images_) images.push_back(next.apply(im));
  return RingMap(source_, next.target_, std::move(images));
}

Subgroup RingMap::image() const { return Subgroup(target_->additive(), images_); }
bool RingMap::is_injective() const { return image().order() == source_->order(); }
bool RingMap::is_surjective() const { return image().is_whole(); }
bool RingMap::same_as(const RingMap& other) const {
  return source_->additive() == other.source_->additive() &&
         target_->additive() == other.target_->additive() && images_ == other.images_;
}

RingMap structure_map(const RingPtr& zn, const RingPtr& target) {
  return RingMap::make(zn, target, std::vector<Elem>(zn->rank(), target->one()));
}

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Elem> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  const auto& g = ring_->additive();
  for (auto& x : gens_) {
    g.check(x);
    x = g.reduce(x);
  }
  group_ = Subgroup(g, gens_);
  for (;;) {
    std::vector<Elem> more;
    for (const auto& h : group_.generators())
      for (std::size_t i = 0; i < ring_->rank(); ++i) more.push_back(ring_->mul(ring_->basis(i), h));
    if (!group_.insert(more)) break;
  }
}

std::vector<Elem> Ideal::elements() const {
  auto e = group_.elements();
  std::sort(e.begin(), e.end());
  return e;
}

Ideal ideal_from(const RingPtr& ring, const std::vector<Elem>& gens) { return Ideal(ring, gens); }

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  auto gens = i.gens();
  gens.insert(gens.end(), j.gens().begin(), j.gens().end());
  return Ideal(i.ring(), gens);
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  std::vector<Elem> gens;
  const auto& r = *i.ring();
  for (const auto& a : i.gens())
    for (const auto& b : j.gens()) gens.push_back(r.mul(a, b));
  return Ideal(i.ring(), gens);
}

Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
  std::vector<Elem> members;
  for (const auto& x : i.group().elements())
    if (j.contains(x)) members.push_back(x);
  Subgroup s(i.ring()->additive(), members);
  return Ideal(i.ring(), s.generators());
}

Ideal colon_ideal(const Ideal& i, const Ideal& j) {
  const auto& r = *i.ring();
  const auto jg = j.additive_generators();
  std::vector<Elem> members;
  for (const auto& x : r.elements()) {
    bool ok = true;
    for (const auto& h : jg)
      if (!i.contains(r.mul(x, h))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  Subgroup s(r.additive(), members);
  return Ideal(i.ring(), s.generators());
}

Ideal annihilator(const RingPtr& ring, const std::vector<Elem>& elements) {
  std::vector<Elem> members;
  for (const auto& c : ring->elements()) {
    bool kills = true;
    for (const auto& x : elements)
      if (!ring->is_zero(ring->mul(c, x))) {
        kills = false;
        break;
      }
    if (kills) members.push_back(c);
  }
  Subgroup s(ring->additive(), members);
  return Ideal(ring, s.generators());
}

bool is_faithful(const Ideal& i) { return annihilator(i.ring(), i.additive_generators()).is_zero(); }

bool is_regular(const RingPtr& ring, const Elem& r) { return ring->is_regular(ring->additive().reduce(r)); }

Ideal extension(const Ideal& i, const RingMap& phi) {
  std::vector<Elem> gens;
  for (const auto& g : i.gens()) gens.push_back(phi(g));
  return Ideal(phi.target(), gens);
}

Ideal contraction(const Ideal& j, const RingMap& phi) {
  std::vector<Elem> members;
  for (const auto& x : phi.source()->elements())
    if (j.contains(phi(x))) members.push_back(x);
  Subgroup s(phi.source()->additive(), members);
  return Ideal(phi.source(), s.generators());
}

std::vector<Ideal> all_ideals(const RingPtr& ring, std::uint64_t cap) {
  if (ring->order() > cap)
    throw AlgebraError("ideal enumeration refused: |R| = " + ring->order().get_str() +
                       " exceeds cap " + std::to_string(cap));
  std::map<std::vector<Elem>, Ideal> found;
  for (const auto& x : ring->elements()) {
    Ideal p(ring, {x});
    found.emplace(p.group().pivots(), p);
  }
  std::vector<Ideal> frontier;
  for (auto& [k, v] : found) frontier.push_back(v);
  while (!frontier.empty()) {
    std::vector<Ideal> next;
    std::vector<Ideal> current;
    for (auto& [k, v] : found) current.push_back(v);
    for (const auto& a : frontier)
      for (const auto& b : current) {
        Subgroup s = a.group().joined(b.group().generators());
        if (found.count(s.pivots())) continue;
        Ideal sum(ring, s.generators());
        found.emplace(s.pivots(), sum);
        next.push_back(sum);
      }
    frontier = std::move(next);
  }
  std::vector<Ideal> out;
  for (auto& [k, v] : found) out.push_back(v);
  std::stable_sort(out.begin(), out.end(),
                   [](const Ideal& a, const Ideal& b) { return a.order() < b.order(); });
  return out;
}

// ---------------------------------------------------------------- modules

FiniteModule FiniteModule::create(RingPtr ring, FpGroup additive,
                                  std::vector<std::vector<Elem>> action, std::string name) {
  const std::size_t k = ring->rank(), n = additive.rank();
  if (action.size() != k) throw AlgebraError("module action: wrong number of ring generators");
  for (auto& row : action) {
    if (row.size() != n) throw AlgebraError("module action: wrong row width");
    for (auto& e : row) e = additive.reduce(e);
  }
  FiniteModule m;
  m.ring_ = std::move(ring);
  m.additive_ = std::move(additive);
  m.action_ = std::move(action);
  m.name_ = std::move(name);
  const auto& rd = m.ring_->additive().invariants();
  const auto& md = m.additive_.invariants();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m.additive_.is_zero(m.additive_.scale(rd[i], m.action_[i][j])) ||
          !m.additive_.is_zero(m.additive_.scale(md[j], m.action_[i][j])))
        throw AlgebraError("module action not compatible with additive orders");
  for (std::size_t j = 0; j < n; ++j) {
    const Elem mj = m.additive_.basis(j);
    if (m.act(m.ring_->one(), mj) != mj) throw AlgebraError("module axiom fails: 1.m != m");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        const Elem ab = m.ring_->mul(m.ring_->basis(a), m.ring_->basis(b));
        if (m.act(ab, mj) != m.act(m.ring_->basis(a), m.act(m.ring_->basis(b), mj)))
          throw AlgebraError("module axiom fails: (rs).m != r.(s.m)");
      }
  }
  return m;
}

Elem FiniteModule::act(const Elem& r, const Elem& m) const {
  const auto& d = additive_.invariants();
  Elem out(d.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      const std::int64_t c = r[i] * m[j];
      const Elem& a = action_[i][j];
      for (std::size_t l = 0; l < d.size(); ++l)
        if (a[l] != 0) out[l] = (out[l] + (c % d[l]) * a[l]) % d[l];
    }
  }
  return out;
}

Subgroup FiniteModule::submodule(const std::vector<Elem>& gens) const {
  Subgroup s(additive_, gens);
  for (;;) {
    std::vector<Elem> more;
    for (const auto& h : s.generators())
      for (std::size_t i = 0; i < ring_->rank(); ++i) more.push_back(act(ring_->basis(i), h));
    if (!s.insert(more)) break;
  }
  return s;
}

Subgroup FiniteModule::ideal_times(const Ideal& i) const {
  std::vector<Elem> gens;
  for (const auto& h : i.additive_generators())
    for (std::size_t j = 0; j < additive_.rank(); ++j) gens.push_back(act(h, additive_.basis(j)));
  return Subgroup(additive_, gens);
}

FiniteModule ring_as_module(const RingPtr& r) {
  return FiniteModule::create(r, r->additive(), r->structure_constants(), r->name());
}

ModuleQuotient quotient_module(const FiniteModule& m, const std::vector<Elem>& gens) {
  Subgroup n = m.submodule(gens);
  Presentation pres = present(m.additive().invariants(), n.generators());
  const auto& r = *m.ring();
  std::vector<std::vector<Elem>> action(r.rank());
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t k = 0; k < pres.group.rank(); ++k)
      action[i].push_back(pres.project(m.act(r.basis(i), pres.section(pres.group.basis(k)))));
  FiniteModule q = FiniteModule::create(m.ring(), pres.group, std::move(action), m.name() + "/N");
  return ModuleQuotient{std::move(q), std::move(pres)};
}

FiniteModule quotient_module(const Ideal& i) {
  auto q = quotient_module(ring_as_module(i.ring()), i.additive_generators()).module;
  return FiniteModule::create(q.ring(), q.additive(), q.action(),
                              i.ring()->name() + "/" + ideal_text(i.gens()));
}

FiniteModule restrict_scalars(const RingMap& phi, const FiniteModule& m) {
  const auto& r = *phi.source();
  std::vector<std::vector<Elem>> action(r.rank());
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < m.additive().rank(); ++j)
      action[i].push_back(m.act(phi(r.basis(i)), m.additive().basis(j)));
  return FiniteModule::create(phi.source(), m.additive(), std::move(action), m.name());
}

ColonComparison module_colon(const FiniteModule& m, const Ideal& i, const Ideal& j) {
  const Ideal c = colon_ideal(i, j);
  Subgroup left = m.ideal_times(c);
  const Subgroup im = m.ideal_times(i);
  const auto jg = j.additive_generators();
  std::vector<Elem> members;
  for (const auto& x : m.additive().elements()) {
    bool ok = true;
    for (const auto& h : jg)
      if (!im.contains(m.act(h, x))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return ColonComparison{std::move(left), Subgroup(m.additive(), members)};
}

// ---------------------------------------------------------------- builders

RingPtr zmod(std::int64_t n) {
  if (n < 1) throw AlgebraError("zmod(n) requires n >= 1");
  RawRing raw;
  raw.moduli = {n};
  raw.mul = [n](const Elem& a, const Elem& b) { return Elem{mod_floor(a[0] * b[0], n)}; };
  raw.one = {mod_floor(1, n)};
  return build_ring(raw, "Z/" + std::to_string(n), json{{"type", "zmod"}, {"n", n}}, true).ring;
}

RingPtr product(const std::vector<RingPtr>& factors) {
  RawRing raw;
  std::vector<std::size_t> offset;
  std::string name;
  bool described = true;
  json parts = json::array();
  for (const auto& f : factors) {
    offset.push_back(raw.moduli.size());
    const auto mod = f->natural_moduli();
    const std::size_t off = raw.moduli.size();
    raw.moduli.insert(raw.moduli.end(), mod.begin(), mod.end());
    for (const auto& rel : natural_relations(*f)) {
      Elem e(off, 0);
      e.insert(e.end(), rel.begin(), rel.end());
      raw.relations.push_back(std::move(e));
    }
    const Elem one = f->to_natural(f->one());
    raw.one.insert(raw.one.end(), one.begin(), one.end());
    name += (name.empty() ? "" : " x ") + f->name();
    if (f->description()) parts.push_back(*f->description());
    else described = false;
  }
  if (factors.empty()) name = "0";
  offset.push_back(raw.moduli.size());
  for (auto& rel : raw.relations) rel.resize(raw.moduli.size(), 0);
  raw.mul = [factors, offset](const Elem& a, const Elem& b) {
    Elem out;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto lo = static_cast<std::ptrdiff_t>(offset[f]);
      const auto hi = static_cast<std::ptrdiff_t>(offset[f + 1]);
      Elem x(a.begin() + lo, a.begin() + hi), y(b.begin() + lo, b.begin() + hi);
      const Elem z = factors[f]->to_natural(
          factors[f]->mul(factors[f]->from_natural(x), factors[f]->from_natural(y)));
      out.insert(out.end(), z.begin(), z.end());
    }
    return out;
  };
  std::optional<json> desc;
  if (described) desc = json{{"type", "product"}, {"factors", parts}};
  return build_ring(raw, "(" + name + ")", desc, true).ring;
}

RingPtr poly_quotient(const RingPtr& base, const std::vector<Elem>& modulus, const std::string& var) {
  if (modulus.empty()) throw AlgebraError("poly_quotient: empty modulus");
  std::vector<Elem> f;
  for (const auto& c : modulus) {
    base->additive().check(c);
    f.push_back(base->additive().reduce(c));
  }
  const std::size_t n = f.size() - 1;
  const auto lead_inv = base->inverse(f.back());
  if (!lead_inv)
    throw AlgebraError("poly_quotient: leading coefficient " + format_elem(f.back()) + " of the modulus is not regular in " +
                       base->name() + ", so the quotient has no finite basis");
  for (auto& c : f) c = base->mul(*lead_inv, c);

  const auto bmod = base->natural_moduli();
  const std::size_t w = bmod.size();
  RawRing raw;
  for (std::size_t i = 0; i < n; ++i) raw.moduli.insert(raw.moduli.end(), bmod.begin(), bmod.end());
  for (std::size_t blk = 0; blk < n; ++blk)
    for (const auto& rel : natural_relations(*base)) {
      Elem e(n * w, 0);
      std::copy(rel.begin(), rel.end(), e.begin() + static_cast<std::ptrdiff_t>(blk * w));
      raw.relations.push_back(std::move(e));
    }
  raw.one.assign(n * w, 0);
  if (n > 0) {
    const Elem one = base->to_natural(base->one());
    std::copy(one.begin(), one.end(), raw.one.begin());
  }
  raw.mul = [base, f, n, w](const Elem& a, const Elem& b) {
    auto block = [&](const Elem& v, std::size_t i) {
      Elem x(v.begin() + static_cast<std::ptrdiff_t>(i * w),
             v.begin() + static_cast<std::ptrdiff_t>((i + 1) * w));
      return base->from_natural(x);
    };
    std::vector<Elem> pa, pb, c(n == 0 ? 0 : 2 * n - 1, base->zero());
    for (std::size_t i = 0; i < n; ++i) {
      pa.push_back(block(a, i));
      pb.push_back(block(b, i));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c[i + j] = base->add(c[i + j], base->mul(pa[i], pb[j]));
    for (std::size_t d = c.size(); d-- > n;) {
      const Elem top = c[d];
      for (std::size_t k = 0; k < n; ++k) c[d - n + k] = base->sub(c[d - n + k], base->mul(top, f[k]));
      c[d] = base->zero();
    }
    Elem out;
    for (std::size_t i = 0; i < n; ++i) {
      const Elem z = base->to_natural(c[i]);
      out.insert(out.end(), z.begin(), z.end());
    }
    return out;
  };
  std::optional<json> desc;
  if (base->description()) {
    json coeffs = json::array();
    for (const auto& c : modulus) coeffs.push_back(base->to_natural(base->additive().reduce(c)));
    desc = json{{"type", "poly_quotient"}, {"base", *base->description()}, {"var", var}, {"modulus", coeffs}};
  }
  std::ostringstream name;
  name << base->name() << "[" << var << "]/(deg " << n << ")";
  return build_ring(raw, name.str(), desc, true).ring;
}

QuotientRing quotient(const RingPtr& base, const std::vector<Elem>& gens) {
  const Ideal ideal(base, gens);
  RawRing raw;
  raw.moduli = base->natural_moduli();
  raw.relations = natural_relations(*base);
  for (const auto& g : ideal.additive_generators()) raw.relations.push_back(base->to_natural(g));
  raw.one = base->to_natural(base->one());
  raw.mul = [base](const Elem& a, const Elem& b) {
    return base->to_natural(base->mul(base->from_natural(a), base->from_natural(b)));
  };
  std::optional<json> desc;
  if (base->description()) {
    json ig = json::array();
    for (const auto& g : ideal.gens()) ig.push_back(base->to_natural(g));
    desc = json{{"type", "quotient"}, {"base", *base->description()}, {"ideal", ig}};
  }
  BuiltRing built = build_ring(raw, base->name() + "/" + ideal_text(ideal.gens()), desc, true);
  std::vector<Elem> images;
  for (std::size_t i = 0; i < base->rank(); ++i)
    images.push_back(built.pres.project(base->to_natural(base->basis(i))));
  RingMap proj = RingMap::make(base, built.ring, std::move(images));
  return QuotientRing{built.ring, std::move(proj)};
}

QuotientRing quotient(const Ideal& i) { return quotient(i.ring(), i.gens()); }

// ---------------------------------------------------------------- JSON

namespace {

Elem parse_elem(const json& j) {
  if (!j.is_array()) throw AlgebraError("element must be a coordinate array, got " + j.dump());
  Elem e;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw AlgebraError("element coordinates must be integers: " + j.dump());
    e.push_back(v.get<std::int64_t>());
  }
  return e;
}

}  // namespace

RingPtr ring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw AlgebraError("ring description must be an object with a type");
  const std::string type = j.at("type").get<std::string>();
  if (type == "zmod") return zmod(j.at("n").get<std::int64_t>());
  if (type == "product") {
    std::vector<RingPtr> fs;
    for (const auto& f : j.at("factors")) fs.push_back(ring_from_json(f));
    return product(fs);
  }
  if (type == "poly_quotient") {
    RingPtr base = ring_from_json(j.at("base"));
    std::vector<Elem> coeffs;
    for (const auto& c : j.at("modulus")) coeffs.push_back(base->from_natural(parse_elem(c)));
    return poly_quotient(base, coeffs, j.value("var", std::string("t")));
  }
  if (type == "quotient") {
    RingPtr base = ring_from_json(j.at("base"));
    std::vector<Elem> gens;
    for (const auto& g : j.at("ideal")) gens.push_back(base->from_natural(parse_elem(g)));
    return quotient(base, gens).ring;
  }
  throw AlgebraError("unknown ring type '" + type + "'");
}

RingMap map_from_json(const json& j) {
  RingPtr s = ring_from_json(j.at("source"));
  RingPtr t = ring_from_json(j.at("target"));
  const auto smod = s->natural_moduli();
  const auto& imgs = j.at("images");
  if (!imgs.is_array() || imgs.size() != smod.size())
    throw MapError("malformed", "expected " + std::to_string(smod.size()) + " images");
  std::vector<Elem> nat;
  for (const auto& im : imgs) nat.push_back(t->from_natural(parse_elem(im)));
  auto combine = [&](const Elem& coeffs) {
    Elem y = t->zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) y = t->add(y, t->scale(coeffs[i], nat[i]));
    return y;
  };
  for (std::size_t i = 0; i < smod.size(); ++i)
    if (!t->is_zero(t->scale(smod[i], nat[i])))
      throw MapError("not additive", "generator " + std::to_string(i) + " has order dividing " +
                                         std::to_string(smod[i]) + " but its image does not");
  for (const auto& rel : natural_relations(*s))
    if (!t->is_zero(combine(rel)))
      throw MapError("not additive", "images violate relation " + format_elem(rel));
  std::vector<Elem> images;
  for (std::size_t k = 0; k < s->rank(); ++k) images.push_back(combine(s->to_natural(s->basis(k))));
  return RingMap::make(s, t, std::move(images));
}

json ring_json(const RingPtr& r) {
  if (r->description()) return *r->description();
  return json{{"type", "opaque"}, {"name", r->name()}, {"invariants", r->additive().invariants()}};
}

json map_to_json(const RingMap& phi) {
  const auto& s = phi.source();
  const auto smod = s->natural_moduli();
  json images = json::array();
  for (std::size_t i = 0; i < smod.size(); ++i) {
    Elem u(smod.size(), 0);
    u[i] = 1;
    images.push_back(phi.target()->to_natural(phi(s->from_natural(u))));
  }
  return json{{"source", ring_json(s)}, {"target", ring_json(phi.target())}, {"images", images}};
}

}  // namespace epilab
