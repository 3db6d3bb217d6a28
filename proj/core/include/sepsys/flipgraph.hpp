#pragma once

#include <cstdint>
#include <string>

#include "sepsys/bruhat.hpp"
#include "sepsys/symmetry.hpp"
#include "sepsys/tilings2d.hpp"
#include "sepsys/weaksep.hpp"

namespace sepsys {

enum class Family {
  strong,
  weak,
  symmetric_strong,
  symmetric_weak,
  cubillage,
  symmetric_cubillage,
};

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

struct ClassSpec {
  Family family = Family::strong;
  int n = 0;
  int d = 2;  // cubillage dimension (cubillage families); r+1 otherwise unused
};

struct FlipGraph {
  ClassSpec spec;
  // States: set families carry collections, geometric families cubillages.
  std::vector<Collection> collections;
  std::vector<Cubillage> cubillages;
  struct Edge {
    int u, v;
    std::string kind;
    bool directed;
  };
  std::vector<Edge> edges;
  long long states_validated = 0;

  int size() const {
    return static_cast<int>(std::max(collections.size(), cubillages.size()));
  }
};

FlipGraph build(const ClassSpec& spec, std::uint64_t cap = 1'000'000);

struct GraphAnalysis {
  bool connected = false;
  bool acyclic = true;  // of the directed part
  std::vector<int> sources, sinks;
  bool poset_with_unique_extremes = false;
};
GraphAnalysis analyze(const FlipGraph& g);

std::string to_dot(const FlipGraph& g);

// ---- exhaustive enumerations ----------------------------------------------------

// All size-maximal r-separated collections over 2^[n], by maximum-clique
// search on the separation graph (n <= 6 recommended).
std::vector<Collection> all_size_maximal_rsep(int n, int r, std::uint64_t cap = 1u << 22);

// All inclusion-maximal symmetric collections under a predicate, via
// maximal cliques over the star-orbit compatibility graph.
std::vector<Collection> maximal_symmetric_collections(int n, const SeparationPredicate& pred,
                                                      std::uint64_t cap = 1u << 22);

std::vector<Cubillage> all_cubillages(int n, int d, std::uint64_t cap = 1u << 22);
// Complete for n even (either parity of d) and for n, d odd.
std::vector<Cubillage> all_symmetric_cubillages(int n, int d, std::uint64_t cap = 1u << 22);

// ---- conjecture checkers ---------------------------------------------------------

struct ConjectureReport {
  std::string name;
  std::string verdict;  // PASS | FAIL | INCONCLUSIVE
  long long instances = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
};

ConjectureReport check_C1(int n, int d, std::uint64_t cap = 1u << 22);
ConjectureReport check_C2(int n, int d, std::uint64_t cap = 1u << 22);
ConjectureReport check_C3(int n, int r, std::uint64_t cap = 1u << 22);
ConjectureReport check_C4(int n, int r, std::uint64_t cap = 1u << 22);

// Lemma-style replay: inside one host, two symmetric membranes are linked by
// symmetric cubic flips; returns the number of steps.
int replay_orbit_path(const Cubillage& K, const std::vector<int>& ideal_from,
                      const std::vector<int>& ideal_to);

}  // namespace sepsys
