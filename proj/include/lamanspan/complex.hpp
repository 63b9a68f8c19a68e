#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lamanspan {

// A vertex is named by the smallest original index in its label.
using Vertex = int;
// Sorted, nonempty set of original vertex indices merged into one vertex.
using Label = std::vector<int>;

struct Edge {
  Vertex a;
  Vertex b;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted vertex triple.
using Triangle = std::array<Vertex, 3>;

Edge make_edge(Vertex u, Vertex v);
Triangle make_triangle(Vertex a, Vertex b, Vertex c);
bool contains(const Triangle& t, Vertex v);
bool contains(const Triangle& t, const Edge& e);
// The corner of t not on e (t must contain e).
Vertex opposite(const Triangle& t, const Edge& e);

enum class SurfaceClass { Sphere, ProjectivePlane, Torus, KleinBottle, Other };

struct TopologyReport {
  int euler_characteristic = 0;
  bool orientable = false;
  SurfaceClass surface_class = SurfaceClass::Other;
  friend bool operator==(const TopologyReport&, const TopologyReport&) = default;
};

SurfaceClass classify_surface(int euler_characteristic, bool orientable);
std::string surface_name(SurfaceClass c);
// Accepts sphere, rp2, torus, klein (and a few long spellings).
SurfaceClass parse_surface_name(const std::string& name);

struct LinkCycle {
  Vertex vertex;
  std::vector<Vertex> cycle;
};

// Immutable simplicial triangulation of a closed connected surface.
class Triangulation {
 public:
  // Validates a raw triangle list; every vertex gets a singleton label.
  static Triangulation validate(std::span<const Triangle> raw);
  // Validates triangles together with explicit labels (keyed by vertex name).
  static Triangulation validate(std::vector<Triangle> triangles, std::map<Vertex, Label> labels,
                                Vertex next_fresh);

  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Vertex> vertices() const;
  std::size_t num_vertices() const { return labels_.size(); }
  const std::map<Vertex, Label>& labels() const { return labels_; }
  const Label& label(Vertex v) const;
  Vertex next_fresh() const { return next_fresh_; }

  bool has_vertex(Vertex v) const { return labels_.count(v) != 0; }
  bool has_edge(const Edge& e) const;
  bool has_triangle(const Triangle& t) const;

  // Cyclic link of v: lowest-id neighbor first, then toward its lower-id
  // neighbor in the cycle.
  const std::vector<Vertex>& link(Vertex v) const;
  LinkCycle link_cycle(Vertex v) const { return {v, link(v)}; }
  // Sorted neighbors of v.
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return link(v).size(); }
  // The two vertices forming triangles with e.
  std::array<Vertex, 2> apexes(const Edge& e) const;
  // Vertex whose label contains the original index i.
  std::optional<Vertex> vertex_containing(int i) const;

  const TopologyReport& topology() const { return topology_; }

  friend bool operator==(const Triangulation& x, const Triangulation& y) {
    return x.triangles_ == y.triangles_ && x.labels_ == y.labels_;
  }

 private:
  Triangulation() = default;
  void index();

  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::map<Vertex, Label> labels_;
  std::map<Vertex, std::vector<Vertex>> links_;
  Vertex next_fresh_ = 0;
  TopologyReport topology_;
};

TopologyReport topology(const Triangulation& t);
LinkCycle link(const Triangulation& t, Vertex v);

// Triples whose three edges are present but whose face is absent, sorted.
std::vector<Triangle> empty_triangles(const Triangulation& t);
bool in_empty_triangle(const Triangulation& t, const Edge& e);

// True iff e lies in no empty triangle and the complex has more than four
// vertices.
bool is_contractible_edge(const Triangulation& t, const Edge& e);
std::vector<Edge> contractible_edges(const Triangulation& t);
bool is_irreducible(const Triangulation& t);

// Contracts e; the merged vertex carries the union of both labels.
Triangulation contract(const Triangulation& t, const Edge& e);

struct SplitResult {
  Triangulation complex;
  Vertex new_vertex;
};

// Splits v along its link: v keeps the closed interval [x1..xk] in link
// order, the new vertex receives [xk..x1]. Without `carve` the new vertex
// takes a fresh singleton label; with `carve` it takes exactly that label and
// v keeps label(v) minus carve (carve must be disjoint from every other label
// and must not contain v's name).
SplitResult split(const Triangulation& t, Vertex v, Vertex x1, Vertex xk,
                  const std::optional<Label>& carve = std::nullopt);

// Position of x in the link of v, or -1.
int link_position(const Triangulation& t, Vertex v, Vertex x);
// Vertices of the closed interval [from..to] in the link of v.
std::vector<Vertex> link_interval(const Triangulation& t, Vertex v, Vertex from, Vertex to);

// Renames vertices by an injective map (unmapped vertices keep their name);
// every label becomes the singleton of the new name.
Triangulation relabel(const Triangulation& t, const std::map<Vertex, Vertex>& rename);

// Isomorphism ignoring labels: maps vertices of `from` to vertices of `to`.
std::optional<std::map<Vertex, Vertex>> find_isomorphism(const Triangulation& from, const Triangulation& to);
// Every isomorphism, one per automorphism of from.
std::vector<std::map<Vertex, Vertex>> all_isomorphisms(const Triangulation& from, const Triangulation& to);
bool isomorphic(const Triangulation& x, const Triangulation& y);
std::vector<std::uint8_t> canonical_code(const Triangulation& t);

}  // namespace lamanspan
