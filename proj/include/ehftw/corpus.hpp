#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ehftw/graph.hpp"
#include "ehftw/patterns.hpp"

namespace ehftw {

enum class Family { Chordal, Tree, CliqueGlued, RandomFiltered };
std::string to_string(Family f);
Family family_from_string(const std::string& s);  // ConfigError on unknown names

enum class Bucket { C, C_t, C_tt };
std::string to_string(Bucket b);
Bucket bucket_from_string(const std::string& s);
// Tightest bucket of a graph in C; ClassViolation when the graph is not in C.
Bucket tightest_bucket(const ClassReport& r);
bool in_bucket(const ClassReport& r, Bucket b);

struct CorpusSpec {
  Family family = Family::RandomFiltered;
  int n_min = 6, n_max = 10;
  int count = 10;
  std::uint64_t seed = 1;
  int t = 4;
  Bucket bucket = Bucket::C;  // minimum membership an emitted graph must have
  int max_attempts = 200000;
};

struct CorpusEntry {
  std::string name;
  Family family = Family::RandomFiltered;
  Graph g;
  ClassReport membership;
  Bucket bucket = Bucket::C;
};

// Deterministic under spec.seed. Throws CapabilityError when rejection
// sampling runs out of attempts.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec);

namespace gen {
// Connected chordal graph: each new vertex is made simplicial on a random
// subset (size <= max_clique - 1) of an earlier vertex's clique.
Graph random_chordal(int n, int max_clique, std::mt19937_64& rng);
// Hole cut by a hub into 3 (or 5) sectors of length 3 or 5, then further
// vertices each adjacent to an earlier vertex with probability p. n >= 10.
Graph random_wheel_extension(int n, double p, std::mt19937_64& rng);
// Identifies the clique `at_a` of a with the clique `at_b` of b (same size,
// matched in order); b's other vertices are appended after a's.
Graph glue(const Graph& a, const std::vector<Vertex>& at_a, const Graph& b, const std::vector<Vertex>& at_b);
}  // namespace gen

}  // namespace ehftw
