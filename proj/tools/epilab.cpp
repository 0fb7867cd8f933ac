#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "epilab/harness.hpp"

using namespace epilab;

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string invariants_text(const FpGroup& g) {
  std::string s = "[";
  const auto& d = g.invariants();
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

std::string natural_text(const RingPtr& r, const Elem& x) {
  const Elem n = r->to_natural(x);
  return n.size() == 1 ? std::to_string(n[0]) : format_elem(n);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

// "c1,c2,..." with integer entries for cyclic rings, or a JSON array of coordinate arrays.
std::vector<Elem> parse_point(const std::string& text, const RingPtr& r) {
  std::vector<Elem> out;
  if (!text.empty() && text.front() == '[') {
    for (const auto& c : json::parse(text)) out.push_back(r->from_natural(c.get<Elem>()));
    return out;
  }
  if (r->natural_moduli().size() != 1) throw InputError("--at needs a JSON array of coordinate arrays for " + r->name());
  for (const auto& part : split(text, ',')) out.push_back(r->from_natural(Elem{std::stoll(part)}));
  return out;
}

int emit(bool as_json, const json& j, const std::string& text) {
  std::cout << (as_json ? j.dump(2) + "\n" : text);
  return 0;
}

int cmd_check_epi(const std::string& path, bool as_json) {
  const RingMap phi = map_from_json(read_json(path));
  const EpiConditions c = epi_conditions(phi);
  const json j{{"tensor", c.tensor}, {"mult", c.mult}, {"coker", c.coker}, {"symmetric", c.symmetric},
               {"agree", c.agree()}, {"epimorphism", c.agree() && c.tensor}};
  std::ostringstream os;
  os << std::boolalpha << "map " << phi.source()->name() << " -> " << phi.target()->name() << "\n"
     << "  s(x)1 = 1(x)s      " << c.tensor << "\n"
     << "  multiplication bij " << c.mult << "\n"
     << "  S (x) coker = 0    " << c.coker << "\n"
     << "  symmetric square   " << c.symmetric << "\n"
     << "epimorphism: " << (c.agree() ? (c.tensor ? "yes" : "no") : "CONDITIONS DISAGREE") << "\n";
  emit(as_json, j, os.str());
  return c.agree() ? 0 : 1;
}

int cmd_kaehler(const std::string& path, bool as_json) {
  const RingMap phi = map_from_json(read_json(path));
  const KaehlerModule om = kaehler(phi);
  json gens = json::array();
  for (const auto& g : om.generators) gens.push_back(g);
  const json j{{"order", om.order().get_str()}, {"invariants", om.group().invariants()}, {"generators", gens}};
  return emit(as_json, j,
              "|Omega| = " + om.order().get_str() + "  invariants = " + invariants_text(om.group()) + "\n");
}

int cmd_mccoy(const std::string& path, const std::string& text, bool as_json) {
  const RingPtr r = ring_from_json(read_json(path));
  const Poly f = parse_poly(text, r);
  if (f.vars().size() > 1) throw InputError("mccoy expects a univariate polynomial");
  const auto c = mccoy_annihilator(f);
  const json j{{"poly", f.to_string()}, {"annihilator", c ? json(r->to_natural(*c)) : json(nullptr)}};
  return emit(as_json, j,
              c ? "zero-divisor: " + natural_text(r, *c) + " * (" + f.to_string() + ") = 0\n"
                : "regular: " + f.to_string() + "\n");
}

int cmd_regular(const std::string& path, const std::string& text, bool as_json) {
  const RingPtr r = ring_from_json(read_json(path));
  std::vector<Poly> fs;
  for (const auto& part : split(text, ';'))
    if (part.find_first_not_of(" \t") != std::string::npos) fs.push_back(parse_poly(part, r, {"x"}));
  try {
    const RegularElement res = regular_element(fs);
    const json j{{"element", res.element.to_string()}, {"order", res.order}, {"shifts", res.shifts}};
    std::string cert;
    for (std::size_t k = 0; k < res.order.size(); ++k)
      cert += (k ? " + " : "") + std::string("x^") + std::to_string(res.shifts[k]) + "*f" +
              std::to_string(res.order[k] + 1);
    return emit(as_json, j, "regular element: " + res.element.to_string() + "\n  = " + cert + "\n");
  } catch (const NotFaithful& e) {
    const json j{{"error", "not-faithful"}, {"witness", r->to_natural(e.witness())}};
    emit(as_json, j, std::string(e.what()) + "\n");
    return 1;
  }
}

int cmd_filter(const std::string& path, bool as_json) {
  const RingMap phi = map_from_json(read_json(path));
  const GabrielFilter f = filter_of(phi);
  const AxiomReport rep = verify_axioms(f);
  const json members = filter_json(f);
  const json j{{"members", members}, {"axioms_ok", rep.ok()}, {"failures", rep.failures}};
  std::string text = "filter of " + phi.source()->name() + " -> " + phi.target()->name() + ": " +
                     std::to_string(f.members.size()) + " of " + std::to_string(f.universe.size()) + " ideals\n";
  for (const auto& m : members) text += "  " + m.dump() + "\n";
  text += std::string("axioms: ") + (rep.ok() ? "ok" : "FAILED") + "\n";
  for (const auto& s : rep.failures) text += "  " + s + "\n";
  emit(as_json, j, text);
  return rep.ok() ? 0 : 1;
}

int cmd_rewrite(const std::string& path, const std::string& text, const std::string& at, bool as_json) {
  const RingPtr r = ring_from_json(read_json(path));
  const std::vector<Elem> c = parse_point(at, r);
  const Poly f = parse_poly(text, r, default_vars(c.size()));
  const auto h = eval_kernel_rewrite(f, c);
  json hs = json::array();
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    hs.push_back(h[i].to_string());
    out += (i ? " + " : "") + std::string("(") + h[i].to_string() + ")*(" + f.vars()[i] + " - " +
           natural_text(r, c[i]) + ")";
  }
  return emit(as_json, json{{"poly", f.to_string()}, {"h", hs}}, f.to_string() + " = " + out + "\n");
}

int cmd_suite(const std::string& name, std::uint64_t seed, std::optional<std::size_t> count, bool as_json) {
  std::vector<std::string> names;
  if (name == "all") names = suite_names();
  else names.push_back(name);
  bool ok = true;
  json reports = json::array();
  for (const auto& n : names) {
    const SuiteReport rep = run_suite(n, SuiteOptions{seed, count});
    ok = ok && rep.ok();
    if (as_json) reports.push_back(rep.to_json());
    else std::cout << rep.to_text() << std::flush;
  }
  if (as_json) std::cout << (names.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-ring epimorphism laboratory"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file, text, at, suite;
  std::uint64_t seed = 1;
  std::size_t count = 0;

  auto* check = app.add_subcommand("check-epi", "Evaluate the epimorphism conditions of a map");
  check->add_option("map", file)->required();
  auto* kae = app.add_subcommand("kaehler", "Module of differentials of a map");
  kae->add_option("map", file)->required();
  auto* mc = app.add_subcommand("mccoy", "Constant annihilator of a univariate polynomial");
  mc->add_option("ring", file)->required();
  mc->add_option("poly", text)->required();
  auto* reg = app.add_subcommand("regular", "Regular element of a faithful polynomial ideal");
  reg->add_option("ring", file)->required();
  reg->add_option("polys", text, "Semicolon-separated generators")->required();
  auto* fil = app.add_subcommand("filter", "Gabriel filter of a map");
  fil->add_option("map", file)->required();
  auto* rw = app.add_subcommand("rewrite", "Write f as a combination of x_i - c_i");
  rw->add_option("ring", file)->required();
  rw->add_option("poly", text)->required();
  rw->add_option("--at", at, "Point c1,c2,...")->required();
  auto* su = app.add_subcommand("suite", "Run a verification suite, or all of them");
  su->add_option("name", suite)->required();
  su->add_option("--seed", seed);
  auto* count_opt = su->add_option("--count", count);
  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check_epi(file, as_json);
    if (*kae) return cmd_kaehler(file, as_json);
    if (*mc) return cmd_mccoy(file, text, as_json);
    if (*reg) return cmd_regular(file, text, as_json);
    if (*fil) return cmd_filter(file, as_json);
    if (*rw) return cmd_rewrite(file, text, at, as_json);
    if (*su) {
      std::optional<std::size_t> c;
      if (count_opt->count()) c = count;
      return cmd_suite(suite, seed, c, as_json);
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
