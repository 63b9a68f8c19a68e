#include "lamanspan/report.hpp"

#include <chrono>
#include <sstream>

#include "lamanspan/error.hpp"

namespace lamanspan {

std::string format_report(const RunReport& r) {
  std::ostringstream os;
  os << "id=" << r.id << " surface=" << surface_name(r.surface_class) << " base=" << r.base_name
     << " splits=" << r.split_count << " path=" << r.case_path << " span=" << r.span_class
     << " extendible=" << (r.extendible ? "ok" : "no") << " planar=" << (r.planar ? "ok" : "no")
     << " laman=" << r.laman_edges << " rank=" << r.rank << " status=" << (r.passed ? "pass" : "fail");
  os.setf(std::ios::fixed);
  os.precision(3);
  os << " time=" << r.seconds << "s";
  if (!r.error.empty()) os << " error=\"" << r.error << '"';
  return os.str();
}

SpanRun run_span(const Triangulation& t, const Catalog& catalog, SeedBank& seeds, const std::string& id,
                 std::uint64_t rank_seed) {
  const auto start = std::chrono::steady_clock::now();
  SpanRun run;
  RunReport& r = run.report;
  r.id = id;
  r.surface_class = t.topology().surface_class;
  run.outcome = span_surface(t, catalog, seeds);
  r.base_name = run.outcome.base_name;
  r.split_count = run.outcome.split_count;
  r.case_path = case_path_name(run.outcome.path);
  r.span_class = span_class_name(run.outcome.span.topology_class);

  check_extendible(t, run.outcome.span);
  r.extendible = true;

  const Graph g = skeleton(run.outcome.span);
  PlanarityResult p = is_planar(g);
  if (!p.planar) fail(ErrorCode::Unreachable, "1-skeleton of the spanning complex is not planar");
  if (!embedding_is_planar(g, p.rotation)) fail(ErrorCode::Unreachable, "planar embedding fails the face count");
  r.planar = true;

  run.laman = certify_laman(g, rank_seed);
  r.laman_edges = run.laman.laman_edges.size();
  r.rank = run.laman.rank;
  const std::size_t n = g.vertices.size();
  if (r.laman_edges != 2 * n - 3 || r.rank != 2 * n - 3)
    fail(ErrorCode::Unreachable, "Laman certificate has the wrong size");
  r.passed = true;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace lamanspan
