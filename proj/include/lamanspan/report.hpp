#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lamanspan/extension.hpp"
#include "lamanspan/rigidity.hpp"

namespace lamanspan {

// One line of key=value text per instance.
struct RunReport {
  std::string id;
  SurfaceClass surface_class = SurfaceClass::Other;
  std::string base_name;
  std::size_t split_count = 0;
  std::string case_path;
  std::string span_class;
  bool extendible = false;
  bool planar = false;
  std::size_t laman_edges = 0;
  std::size_t rank = 0;
  bool passed = false;
  std::string error;  // empty on success
  double seconds = 0;
};

std::string format_report(const RunReport& r);

struct SpanRun {
  SpanOutcome outcome;
  LamanCertificate laman;
  RunReport report;
};

// span_surface plus every certificate: extendibility, planarity of the
// 1-skeleton (with an independent check of the embedding), a Laman subgraph
// of 2|V|-3 edges and full generic rank. Errors propagate from span_surface;
// failed certificates raise Unreachable.
SpanRun run_span(const Triangulation& t, const Catalog& catalog, SeedBank& seeds, const std::string& id,
                 std::uint64_t rank_seed = 1);

}  // namespace lamanspan
