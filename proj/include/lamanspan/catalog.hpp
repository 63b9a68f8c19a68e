#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lamanspan/complex.hpp"
#include "lamanspan/spanning.hpp"

namespace lamanspan {

struct CatalogEntry {
  std::string name;
  SurfaceClass surface_class = SurfaceClass::Other;
  Triangulation complex;
  bool crosscap = false;
  std::optional<std::array<Vertex, 3>> abc;  // (A, B, C) for cross-cap entries
};

// A small triangulation of each supported surface (the generator's start).
Triangulation catalog_seed_triangulation(SurfaceClass c);

// Empty triangles of t whose two capped halves are both projective planes.
std::vector<Triangle> crosscap_triangles(const Triangulation& t);

// Builds an entry; for Klein bottles without an explicit abc the
// lexicographically least cross-cap triangle (if any) is used.
CatalogEntry make_entry(std::string name, const Triangulation& complex,
                        const std::optional<std::array<Vertex, 3>>& abc = std::nullopt);
void write_entry_file(const std::filesystem::path& path, const CatalogEntry& entry);

// $LAMANSPAN_CATALOG if set, otherwise the catalog shipped with the sources.
std::filesystem::path default_catalog_dir();
std::size_t expected_entry_count(SurfaceClass c);
std::size_t expected_crosscap_count(SurfaceClass c);

// Reads <dir>/<surface>/*.tri in filename order and re-verifies every entry.
// Errors: CorruptEntry, WrongCount.
std::vector<CatalogEntry> load_catalog(SurfaceClass c, const std::filesystem::path& dir = default_catalog_dir());

struct Classification {
  const CatalogEntry* entry = nullptr;
  std::map<Vertex, Vertex> entry_to_input;  // isomorphism from entry->complex onto the input
};

class Catalog {
 public:
  static Catalog load(const std::filesystem::path& dir = default_catalog_dir());

  const std::vector<CatalogEntry>& entries(SurfaceClass c) const;
  // Errors: NotInCatalog (also for reducible inputs), UnsupportedSurface.
  Classification classify(const Triangulation& t) const;
  // One classification per automorphism of the matched entry.
  std::vector<Classification> classify_all(const Triangulation& t) const;

 private:
  std::map<SurfaceClass, std::vector<CatalogEntry>> entries_;
  std::map<std::vector<std::uint8_t>, std::pair<SurfaceClass, std::size_t>> by_code_;
};

// Backtracking search for a vertex-spanning extendible subcomplex of a given
// class. Triangles are decided in lexicographic order, inclusion first.
struct SeedConstraints {
  std::vector<Triangle> forced_in;
  std::vector<Triangle> forced_out;
  std::vector<Edge> forbidden_edges;      // no selected triangle may contain these
  std::optional<Vertex> pinch;            // required singular vertex (PinchedDisc)
  std::size_t node_budget = 0;            // 0 means unlimited
};

std::optional<SpanningComplex> search_span(const Triangulation& host, SpanClass target,
                                           const SeedConstraints& constraints = {});

// Disc for Sphere and ProjectivePlane entries, Cylinder for Torus and Klein.
// Errors: SeedNotFound, BadStructure (cross-cap entry).
SpanningComplex find_seed(const CatalogEntry& entry);

// Pinched disc at pivot meeting the resolve-singularity hypotheses for the
// cycle abc. Errors: SeedNotFound, BadStructure.
SpanningComplex find_pinched_seed(const CatalogEntry& entry, Vertex pivot);

// Constraints expressing the resolve-singularity hypotheses at v for the
// Γ-neighbors x and y.
SeedConstraints pinched_constraints(const Triangulation& host, Vertex v, Vertex x, Vertex y);

// Thread-safe memo of seeds per entry (and pivot).
class SeedBank {
 public:
  SpanningComplex seed(const CatalogEntry& entry);
  SpanningComplex pinched_seed(const CatalogEntry& entry, Vertex pivot);

 private:
  std::mutex mutex_;
  std::map<std::pair<std::string, Vertex>, SpanningComplex> cache_;
};

}  // namespace lamanspan
