#include <iomanip>
#include <iostream>
#include <sstream>

#include "epilab/harness.hpp"

using namespace epilab;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void absorb(const SuiteReport& r, std::size_t min_instances = 0) {
    require(r.ok(), r.name + ": " + std::to_string(r.failures.size()) + " failures");
    require(r.instances >= min_instances, r.name + ": only " + std::to_string(r.instances) + " instances");
    if (!r.ok()) std::cerr << r.to_text();
    std::ostringstream os;
    os << (summary.empty() ? "" : ", ") << r.name << " " << r.instances << " instances " << std::fixed
       << std::setprecision(2) << r.wall_seconds << "s";
    summary += os.str();
  }
  std::string summary;
};

SuiteReport suite(const std::string& name, std::optional<std::size_t> count = std::nullopt) {
  return run_suite(name, SuiteOptions{7, count});
}

bool tally_positive(const SuiteReport& r, const std::string& key) {
  auto it = r.tallies.find(key);
  return it != r.tallies.end() && it->second > 0;
}

Criterion c1() {
  Criterion c;
  const auto r = suite("th1-agreement", 200);
  c.absorb(r, 200);
  c.require(r.wall_seconds < 60, "slower than 60 s");
  c.require(tally_positive(r, "epi") && tally_positive(r, "non-epi"), "stream lacks epis or non-epis");
  return c;
}

Criterion c2() {
  Criterion c;
  c.absorb(suite("prop2-equiv", 200), 200);
  return c;
}

Criterion c3() {
  Criterion c;
  c.absorb(suite("geo5-equiv", 200), 200);
  return c;
}

Criterion c4() {
  Criterion c;
  c.absorb(suite("kaehler-epi", 200), 200);
  const auto f2 = zmod(2);
  const auto etale = structure_map(f2, poly_quotient(f2, {Elem{0}, Elem{1}, Elem{1}}));
  c.require(kaehler(etale).order() == 1 && !is_epimorphism(etale), "etale witness");
  const auto dual = structure_map(f2, poly_quotient(f2, {Elem{0}, Elem{0}, Elem{1}}));
  c.require(kaehler(dual).order() == 4, "dual numbers |Omega| != 4");
  return c;
}

Criterion c5() {
  Criterion c;
  const auto r = suite("mccoy-oracle", 500);
  c.absorb(r, 500);
  c.require(r.wall_seconds < 120, "slower than 120 s");
  return c;
}

Criterion c6() {
  Criterion c;
  const auto r = suite("coro7-regular", 100);
  c.absorb(r);
  auto it = r.tallies.find("faithful");
  c.require(it != r.tallies.end() && it->second >= 100, "fewer than 100 faithful lists");
  const auto z6 = zmod(6);
  const auto res = regular_element({parse_poly("3", z6, {"x"}), parse_poly("2*x", z6)});
  c.require(res.element == parse_poly("3 + 2*x^2", z6), "zmod(6) example gave " + res.element.to_string());
  return c;
}

Criterion c7() {
  Criterion c;
  const auto r = suite("lemma7-flatness");
  c.absorb(r);
  c.require(tally_positive(r, "non-flat"), "no non-flat module seen");
  const auto z4 = zmod(4);
  const auto m = quotient_module(ideal_from(z4, {Elem{2}}));
  c.require(!is_flat_module(m), "zmod(2) over zmod(4) judged flat");
  c.require(!module_colon(m, Ideal::zero(z4), ideal_from(z4, {Elem{2}})).equal(), "witness I = 0, a = 2 fails");
  return c;
}

Criterion c8() {
  Criterion c;
  c.absorb(suite("gabriel-axioms", 100), 100);
  const auto r = suite("coro8-classify");
  c.absorb(r);
  c.require(tally_positive(r, "same-class") && tally_positive(r, "different"), "classification is one-sided");
  return c;
}

Criterion c9() {
  Criterion c;
  const auto ff = suite("cor2-ff-epi", 200);
  c.absorb(ff, 200);
  c.require(tally_positive(ff, "field-source:epi"), "no epimorphism out of a field tested");
  c.absorb(suite("prop1-local-iso", 200));
  c.absorb(suite("th21-finite-hypothesis"));
  const auto inj = suite("lemma33-injectivity", 200);
  c.absorb(inj, 200);
  c.require(tally_positive(inj, "f-injective"), "no injective composite tested");
  return c;
}

Criterion c10() {
  Criterion c;
  c.absorb(suite("lemma2-rewrite", 200), 200);
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion (*)()>> criteria{
      {"epimorphism conditions agree", c1},
      {"spectral criterion matches", c2},
      {"residue-field criterion matches", c3},
      {"differentials vanish on epimorphisms", c4},
      {"constant annihilators of zero-divisors", c5},
      {"regular element construction", c6},
      {"flatness via colon ideals", c7},
      {"Gabriel filters classify flat epimorphisms", c8},
      {"flat epimorphism consequences", c9},
      {"evaluation kernel rewriter", c10},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    all = all && c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << "  " << criteria[i].first << "  ("
              << (c.ok ? c.summary : c.detail) << ")\n";
  }
  return all ? 0 : 1;
}
