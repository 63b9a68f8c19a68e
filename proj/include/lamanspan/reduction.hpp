#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lamanspan/complex.hpp"

namespace lamanspan {

// One vertex split: v keeps [x1..xk] of its link, the new vertex takes
// exactly the label new_vertex (its name is the label minimum).
struct SplitRecord {
  Vertex v = 0;
  Vertex x1 = 0;
  Vertex xk = 0;
  Label new_vertex;
  friend bool operator==(const SplitRecord&, const SplitRecord&) = default;
};

Vertex new_vertex_name(const SplitRecord& r);

struct ReductionTrace {
  Triangulation base;
  std::vector<SplitRecord> splits;
};

// Errors: StaleRecord.
Triangulation apply_split(const Triangulation& t, const SplitRecord& r);
Triangulation replay(const ReductionTrace& trace);
// Complexes before and after every split: result[0] = base, result.back() = replay.
std::vector<Triangulation> replay_all(const ReductionTrace& trace);

// Contracts e and returns the record whose replay restores t exactly.
std::pair<Triangulation, SplitRecord> contract_with_record(const Triangulation& t, const Edge& e);

// Greedy reduction, always contracting the lexicographically least
// contractible edge.
ReductionTrace reduce_to_irreducible(const Triangulation& t);

// ".trace" files. The base is written next to the trace as <stem>.base.tri.
void write_trace(const std::filesystem::path& path, const ReductionTrace& trace);
ReductionTrace read_trace(const std::filesystem::path& path);
void write_trace(std::ostream& out, const ReductionTrace& trace, const std::string& base_file);

// A general (not necessarily surface) labeled simplicial complex, closed
// under taking nonempty subfaces.
struct FaceComplex {
  std::map<Vertex, Label> labels;
  std::set<std::vector<Vertex>> faces;
  friend bool operator==(const FaceComplex&, const FaceComplex&) = default;
};

FaceComplex face_complex(const Triangulation& t);
// Combinatorial contraction of the edge e; the merged vertex is named by the
// smaller label minimum. Errors: UnknownEdge.
FaceComplex contract_faces(const FaceComplex& c, const Edge& e);
// Contractions given as pairs of original indices: each step merges the
// vertices whose labels contain them.
FaceComplex run_contractions(const Triangulation& t, const std::vector<std::pair<int, int>>& merges);
// The 2-faces of c, provided every maximal face is a triangle.
std::optional<std::vector<Triangle>> pure_triangles(const FaceComplex& c);

// S (vertex names of `after`) is a face of `after` iff some choice of one
// vertex of `before` inside each label is a face of `before`.
// Errors: LabelMismatch.
bool face_preimage_test(const Triangulation& before, const FaceComplex& after, const std::vector<Vertex>& s);
bool face_preimage_test(const Triangulation& before, const Triangulation& after, const std::vector<Vertex>& s);

// A contraction sequence with the same final labels whose last step merges
// a group containing i with one containing j. Errors: NoSuchMerge.
std::vector<std::pair<int, int>> reorder_last_contraction(const Triangulation& t,
                                                          const std::vector<std::pair<int, int>>& merges, int i,
                                                          int j);

struct SurvivalReport {
  bool survived_all = true;
  std::optional<std::size_t> first_elongating_index;
  std::vector<Vertex> tracked_cycle;  // A B C, or the 4-cycle after elongation
};

// Follows the cycle abc (vertices of trace.base) through the splits.
// Errors: NotOnCycle.
SurvivalReport track_survival(const ReductionTrace& trace, const std::array<Vertex, 3>& abc);

enum class ArrangementKind {
  Elongating,   // trace.splits[0] elongates abc
  Survives,     // abc survives every split of trace
  NonCrosscap,  // trace.base is not a cross-cap entry
};

struct CrosscapArrangement {
  ReductionTrace trace;
  ArrangementKind kind = ArrangementKind::Elongating;
  std::array<Vertex, 3> abc{};  // in trace.base names (cross-cap kinds only)
  std::size_t moves = 0;
};

// For a base triangulation: every image of its distinguished triangle under
// the isomorphisms from its catalog entry; empty for a non-cross-cap entry.
using CrosscapLookup = std::function<std::vector<std::array<Vertex, 3>>(const Triangulation&)>;

// Rewrites a cross-cap trace whose abc is elongated by some split into a
// trace of the same complex whose first split elongates abc. Contractions
// never touch the 4-cycle; when reordering alone does not make progress the
// complex is re-reduced, which may reach a different base (see kind).
// Errors: Unreachable.
CrosscapArrangement rearrange_crosscap(const ReductionTrace& trace, const std::array<Vertex, 3>& abc,
                                       const CrosscapLookup& lookup);

}  // namespace lamanspan
