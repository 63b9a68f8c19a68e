#pragma once

#include <array>
#include <string>
#include <vector>

#include "lamanspan/catalog.hpp"
#include "lamanspan/complex.hpp"
#include "lamanspan/reduction.hpp"
#include "lamanspan/spanning.hpp"

namespace lamanspan {

struct StarIntersection {
  std::vector<Triangle> fan;         // S-triangles at v, consecutive in link order
  std::vector<Vertex> fan_vertices;  // link vertices of the fan, in order
  std::vector<Edge> path;            // S-edges of link(v) outside the fan
  bool whole_star = false;
};

// Errors: BadStructure (v not covered by an S-triangle, or its S-triangles
// are not consecutive).
StarIntersection star_intersection(const SpanningComplex& s, const Triangulation& host, Vertex v);

enum class StepKind { Cone, SplitBoth, SplitFirst, SplitLast, Resolve };
std::string step_kind_name(StepKind k);

struct ExtensionStep {
  StepKind kind = StepKind::Cone;
  SplitRecord record;
};

struct ExtensionResult {
  SpanningComplex span;
  Triangulation host;
  ExtensionStep step;
};

// Extends s across the split rec of host. Errors: NotExtendible.
ExtensionResult extend(const SpanningComplex& s, const Triangulation& host, const SplitRecord& rec);

// Turns a pinched disc at rec.v into a cylinder across an elongating split
// of the cycle through x, rec.v, y. Errors: NotElongating, HypothesesViolated.
ExtensionResult resolve_singularity(const SpanningComplex& s, const Triangulation& host, Vertex x, Vertex y,
                                    const SplitRecord& rec);

// S-triangles at v, renamed to v or v' according to which of them owns each
// link edge after rec. Triangles away from v are unchanged.
std::vector<Triangle> owner_mapped(const SpanningComplex& s, const Triangulation& host, const SplitRecord& rec);

// A vertex-spanning extendible disc of a projective-plane half that contains
// the face cap. Errors: CapLost.
SpanningComplex constrained_disc_pipeline(const Triangulation& half, const Triangle& cap,
                                          std::vector<std::string>* log = nullptr);

enum class CasePath { NonCrosscap, ConnectedSum, Elongated };
std::string case_path_name(CasePath p);

struct SpanOutcome {
  SpanningComplex span;
  std::vector<std::string> log;
  std::string base_name;
  std::size_t split_count = 0;
  CasePath path = CasePath::NonCrosscap;
  // Case 2 only: the rearranged trace and whether its replay matched the input
  std::optional<bool> rearranged_replay_matches;
};

// Errors: UnsupportedSurface, Unreachable (and the fatal seed errors).
SpanOutcome span_surface(const Triangulation& t, const Catalog& catalog, SeedBank& seeds);

}  // namespace lamanspan
