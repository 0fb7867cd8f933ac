#pragma once

// Ring zoo, seeded instance generators and the verification suites.

#include <map>
#include <random>

#include "epilab/fraction.hpp"
#include "epilab/gabriel.hpp"

namespace epilab {

class UnknownSuite : public AlgebraError {
 public:
  explicit UnknownSuite(const std::string& name) : AlgebraError("unknown suite: " + name) {}
};

struct ZooEntry {
  RingPtr ring;
  std::string label;
};

// zmod(n) for 2 <= n <= 16, products of two or three of them up to order
// 64, and monic poly_quotients of degree <= 3 over Z/2, Z/3, Z/4.
const std::vector<ZooEntry>& ring_zoo();
std::vector<RingPtr> zoo_rings(std::uint64_t max_order);
// Finite fields of the zoo.
std::vector<RingPtr> zoo_fields();

enum class MapFamily { Identity, Surjection, Factor, Diagonal, PolyInclusion, Random, Crt };
std::string to_string(MapFamily f);
const std::vector<MapFamily>& all_families();

// The factor projections R -> R/(1 - e) for every sum e of primitive
// idempotents, including the zero ring target.
std::vector<RingMap> factor_projections(const RingPtr& r);

// x -> (f_1(x), ..., f_k(x)) into the product of the targets.
RingMap tuple_map(const std::vector<RingMap>& maps);

struct GeneratedMap {
  std::size_t index = 0;
  MapFamily family = MapFamily::Identity;
  RingMap map;
};

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed, std::uint64_t max_order = 64);

  std::uint64_t seed() const { return seed_; }
  GeneratedMap next();
  // A map of the family out of the given source, when one fits the caps.
  std::optional<RingMap> map_from(const RingPtr& source, MapFamily family, std::mt19937_64& rng) const;
  // Per-instance substream.
  std::mt19937_64 stream(std::uint64_t index) const;

  std::vector<double> weights{1, 2, 2, 2, 2, 2, 1};  // by MapFamily

 private:
  std::uint64_t seed_;
  std::uint64_t max_order_;
  std::size_t index_ = 0;
  std::vector<RingPtr> sources_;
};

// Polynomial oracle: a nonzero g of degree <= max_degree with g.f = 0.
// Enumerates every g when the search space is small, otherwise compares
// the order of the image of g -> g.f with the size of the domain.
bool has_polynomial_annihilator(const Poly& f, std::uint32_t max_degree);

struct Failure {
  std::size_t index = 0;
  std::string message;
  json instance;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  std::map<std::string, std::size_t> tallies;
  std::vector<std::string> notes;  // sample witnesses and remarks
  double wall_seconds = 0;

  bool ok() const { return failures.empty(); }
  json to_json() const;
  std::string to_text() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<std::size_t> count;  // suite default when unset
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace epilab
