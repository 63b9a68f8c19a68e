#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamanspan/complex.hpp"

namespace lamanspan {

enum class SpanClass { Disc, Cylinder, PinchedDisc, DiscSum };

std::string span_class_name(SpanClass c);
SpanClass parse_span_class(const std::string& name);

// A 2-dimensional subcomplex of a host triangulation.
struct SpanningComplex {
  std::vector<Triangle> triangles;  // sorted host triangles
  std::vector<Edge> extra_edges;    // host edges in no selected triangle
  SpanClass topology_class = SpanClass::Disc;
  std::optional<Vertex> singular;   // PinchedDisc only
  std::optional<Triangle> cap;      // DiscSum only: shared triangle, not a host face

  friend bool operator==(const SpanningComplex&, const SpanningComplex&) = default;
};

SpanningComplex make_span(std::vector<Triangle> triangles, SpanClass c);

std::vector<Edge> span_edges(const SpanningComplex& s);
std::vector<Vertex> span_vertices(const SpanningComplex& s);
bool is_vertex_spanning(const Triangulation& host, const SpanningComplex& s);
bool is_subcomplex(const Triangulation& host, const SpanningComplex& s);

// Combinatorial shape of a set of triangles in a closed surface.
struct SurfaceShape {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  int boundary_components = 0;
  bool edge_connected = false;           // dual graph through shared edges
  std::vector<Vertex> singular_vertices;  // link neither a path nor a cycle
  std::vector<Vertex> pinched_vertices;   // link exactly two disjoint paths
  bool orientable = false;
};

SurfaceShape analyse_shape(std::vector<Triangle> triangles);
bool is_disc(const std::vector<Triangle>& triangles);
bool is_cylinder(const std::vector<Triangle>& triangles);

// Checks that s has its declared topology class (and, for DiscSum, that each
// side of its cap is a disc in the host). Returns an empty string on success,
// otherwise the reason.
std::string shape_violation(const Triangulation& host, const SpanningComplex& s);

struct ExtendibilityCertificate {
  // one edge of s inside each host triangle, in host triangle order
  std::vector<std::pair<Triangle, Edge>> hit_map;
};

std::optional<Triangle> first_missed_triangle(const Triangulation& host, const SpanningComplex& s);
// Throws MissedTriangle naming the first host triangle without an edge of s.
ExtendibilityCertificate check_extendible(const Triangulation& host, const SpanningComplex& s);

// Full verification used after every pipeline step; empty string when s is a
// vertex-spanning, extendible complex of its declared class.
std::string verify_span(const Triangulation& host, const SpanningComplex& s);

// Renames vertices of s.
SpanningComplex rename_span(const SpanningComplex& s, const std::map<Vertex, Vertex>& rename);

}  // namespace lamanspan
