#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lamanspan/complex.hpp"
#include "lamanspan/spanning.hpp"

namespace lamanspan {

struct Graph {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted, no loops or repeats
};

// Errors: BadStructure (a loop, or an edge endpoint outside vertices).
Graph make_graph(std::vector<Vertex> vertices, std::vector<Edge> edges);
Graph skeleton(const SpanningComplex& s);
bool is_connected(const Graph& g);

struct PebbleResult {
  std::vector<Edge> independent;  // maximal (2,3)-sparse subset
  std::vector<Edge> rejected;
  std::vector<std::string> trace;  // one "accept a b" / "reject a b" line per edge
};

// Edges are offered in lexicographic order.
PebbleResult pebble_game(const Graph& g);

inline constexpr std::uint64_t field_modulus = (std::uint64_t{1} << 61) - 1;

struct LamanCertificate {
  std::size_t vertex_count = 0;
  std::vector<Edge> laman_edges;
  std::vector<std::string> pebble_trace;
  bool rank_checked = false;
  std::size_t rank = 0;
  std::uint64_t field_modulus = lamanspan::field_modulus;
  std::uint64_t seed = 0;
};

// Errors: NotRigid (fewer than 2|V|-3 independent edges).
LamanCertificate pebble_game_2_3(const Graph& g);

struct Framework {
  Graph graph;
  std::map<Vertex, std::array<std::int64_t, 2>> placement;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// |E| x 2|V| matrix, columns (x, y) per vertex in sorted vertex order.
IntMatrix rigidity_matrix(const Framework& f);
// Rank over Z/pZ of an integer matrix.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p = field_modulus);

struct RankCheck {
  bool rigid = false;
  std::size_t best_rank = 0;
};

// Random placements with coordinates drawn from [0, p) by mt19937_64(seed).
RankCheck generic_rank(const Graph& g, int trials = 3, std::uint64_t seed = 1);
bool is_generically_rigid(const Graph& g, int trials = 3, std::uint64_t seed = 1);

// Pebble game plus a rank check on the Laman edges. Errors: NotRigid.
LamanCertificate certify_laman(const Graph& g, std::uint64_t seed = 1, int trials = 3);

struct PlanarityResult {
  bool planar = false;
  std::map<Vertex, std::vector<Vertex>> rotation;  // cyclic neighbor order per vertex
  std::vector<Edge> kuratowski;                    // K5 or K3,3 subdivision
};

PlanarityResult is_planar(const Graph& g);
// Face count of the rotation system satisfies Euler's formula for the plane.
bool embedding_is_planar(const Graph& g, const std::map<Vertex, std::vector<Vertex>>& rotation);
// The edges form a subdivision of K5 or K3,3.
bool is_kuratowski_subdivision(const std::vector<Edge>& edges);

void write_laman(std::ostream& out, const LamanCertificate& cert);

}  // namespace lamanspan
