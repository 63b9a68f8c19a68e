#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamanspan/catalog.hpp"
#include "lamanspan/error.hpp"
#include "lamanspan/generate.hpp"
#include "lamanspan/io.hpp"
#include "lamanspan/reduction.hpp"
#include "lamanspan/report.hpp"

namespace fs = std::filesystem;
using namespace lamanspan;

namespace {

// Stable exit codes.
constexpr int exit_failure = 1;
constexpr int exit_not_a_surface = 2;
constexpr int exit_parse = 3;
constexpr int exit_unsupported = 4;
constexpr int exit_unreachable = 5;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotASurface:
    case ErrorCode::Disconnected:
    case ErrorCode::DuplicateTriangle:
    case ErrorCode::TooSmall:
      return exit_not_a_surface;
    case ErrorCode::ParseError: return exit_parse;
    case ErrorCode::UnsupportedSurface: return exit_unsupported;
    case ErrorCode::Unreachable: return exit_unreachable;
    default: return exit_failure;
  }
}

std::string orientation_word(bool orientable) { return orientable ? "orientable" : "non-orientable"; }

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
}

int cmd_verify(const fs::path& path) {
  const Triangulation t = read_triangulation(path);
  const TopologyReport& r = t.topology();
  std::cout << surface_name(r.surface_class) << " chi=" << r.euler_characteristic << ' '
            << orientation_word(r.orientable) << '\n';
  return 0;
}

int cmd_span(const fs::path& path, const fs::path& out_dir, std::uint64_t seed) {
  const Triangulation t = read_triangulation(path);
  const Catalog catalog = Catalog::load();
  SeedBank seeds;
  const std::string id = path.stem().string();
  SpanRun run;
  try {
    run = run_span(t, catalog, seeds, id, seed);
  } catch (const Error& e) {
    RunReport r;
    r.id = id;
    r.surface_class = t.topology().surface_class;
    r.error = e.what();
    std::cout << format_report(r) << '\n';
    throw;
  }
  fs::create_directories(out_dir);
  std::ofstream span(out_dir / (id + ".span"));
  write_span(span, run.outcome.span);
  std::ofstream laman(out_dir / (id + ".laman"));
  write_laman(laman, run.laman);
  std::string log;
  for (const auto& line : run.outcome.log) log += line + '\n';
  write_text(out_dir / (id + ".log"), log);
  std::cout << format_report(run.report) << '\n';
  return 0;
}

int cmd_gen(const std::string& surface, std::size_t n_splits, std::uint64_t seed, const std::string& out) {
  const SurfaceClass sc = parse_surface_name(surface);
  const Catalog catalog = Catalog::load();
  GeneratedInstance g = generate_instance(catalog, sc, n_splits, seed);
  if (out.empty() || out == "-") {
    write_tri(std::cout, g.complex, surface_name(sc));
  } else {
    fs::path p = out;
    if (fs::is_directory(p)) p /= surface_name(sc) + "_" + std::to_string(n_splits) + "_" + std::to_string(seed) + ".tri";
    write_tri_file(p, g.complex, surface_name(sc));
    std::cout << p.string() << '\n';
  }
  return 0;
}

struct BatchItem {
  std::uint64_t seed = 0;
  std::size_t n_splits = 0;
  RunReport report;
};

int cmd_batch(const std::string& surface, std::size_t count, std::size_t max_splits, std::uint64_t seed,
              unsigned jobs, const std::string& report_path) {
  const SurfaceClass sc = parse_surface_name(surface);
  const Catalog catalog = Catalog::load();
  SeedBank seeds;

  std::vector<BatchItem> items(count);
  std::mt19937_64 rng(seed);
  for (auto& it : items) {
    it.seed = rng();
    it.n_splits = std::uniform_int_distribution<std::size_t>(0, max_splits)(rng);
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();) {
      BatchItem& it = items[i];
      const std::string id = surface_name(sc) + "-" + std::to_string(i) + "-seed" + std::to_string(it.seed);
      try {
        GeneratedInstance g = generate_instance(catalog, sc, it.n_splits, it.seed);
        it.report = run_span(g.complex, catalog, seeds, id, it.seed).report;
      } catch (const std::exception& e) {
        it.report.id = id;
        it.report.surface_class = sc;
        it.report.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < std::max(1u, jobs); ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::map<std::string, std::size_t> paths{{"case1", 0}, {"case2", 0}, {"non-crosscap", 0}};
  std::size_t passed = 0;
  const BatchItem* first_failure = nullptr;
  for (const auto& it : items) {
    std::cout << format_report(it.report) << '\n';
    if (it.report.passed) {
      ++passed;
      ++paths[it.report.case_path];
    } else if (!first_failure) {
      first_failure = &it;
    }
  }
  std::cout << "batch surface=" << surface_name(sc) << " count=" << count << " passed=" << passed
            << " failed=" << count - passed;
  for (const auto& [p, n] : paths) std::cout << ' ' << p << '=' << n;
  std::cout << '\n';
  if (first_failure)
    std::cout << "first failure: seed=" << first_failure->seed << " splits=" << first_failure->n_splits << ": "
              << first_failure->report.error << '\n';

  if (!report_path.empty()) {
    nlohmann::json j;
    j["surface"] = surface_name(sc);
    j["count"] = count;
    j["max_splits"] = max_splits;
    j["seed"] = seed;
    j["passed"] = passed;
    j["paths"] = paths;
    for (const auto& it : items) {
      const RunReport& r = it.report;
      j["instances"].push_back({{"id", r.id},
                                {"seed", it.seed},
                                {"splits", it.n_splits},
                                {"base", r.base_name},
                                {"path", r.case_path},
                                {"span", r.span_class},
                                {"laman_edges", r.laman_edges},
                                {"rank", r.rank},
                                {"passed", r.passed},
                                {"error", r.error},
                                {"seconds", r.seconds}});
    }
    write_text(report_path, j.dump(2) + '\n');
  }
  return first_failure ? exit_failure : 0;
}

int cmd_catalog_verify() {
  const Catalog catalog = Catalog::load();
  for (SurfaceClass c : {SurfaceClass::Sphere, SurfaceClass::ProjectivePlane, SurfaceClass::Torus,
                         SurfaceClass::KleinBottle}) {
    std::size_t crosscap = 0;
    for (const auto& e : catalog.entries(c)) crosscap += e.crosscap;
    std::cout << surface_name(c) << ' ' << catalog.entries(c).size() << " entries";
    if (crosscap) std::cout << " (" << crosscap << " cross-cap)";
    std::cout << '\n';
  }
  std::cout << "catalog ok\n";
  return 0;
}

int cmd_reduce(const fs::path& path, const fs::path& out) {
  const Triangulation t = read_triangulation(path);
  ReductionTrace trace = reduce_to_irreducible(t);
  fs::path target = out.empty() ? fs::path(path).replace_extension(".trace") : out;
  if (fs::is_directory(target)) target /= path.stem().string() + ".trace";
  write_trace(target, trace);
  std::string base = "?";
  try {
    base = Catalog::load().classify(trace.base).entry->name;
  } catch (const Error&) {
  }
  std::cout << target.string() << ": " << trace.splits.size() << " contractions to " << trace.base.num_vertices()
            << " vertices (" << base << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex-spanning planar Laman subcomplexes of surface triangulations"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
  std::string format = "tri";

  std::string path;
  auto* verify = app.add_subcommand("verify", "print Euler characteristic, orientability and surface class");
  verify->add_option("path", path, ".tri file")->required();

  auto* span = app.add_subcommand("span", "write .span, .laman and .log for a triangulation");
  span->add_option("path", path, ".tri file")->required();
  span->add_option("--out", out, "output directory (default: next to the input)");
  span->add_option("--seed", seed, "seed for the rank check");

  std::string surface;
  std::size_t n_splits = 0;
  auto* gen = app.add_subcommand("gen", "random triangulation: catalog entry plus random splits");
  gen->add_option("surface", surface, "sphere, rp2, torus or klein")->required();
  gen->add_option("n_splits", n_splits, "number of vertex splits")->required();
  gen->add_option("--seed", seed);
  gen->add_option("--out", out, "output file or directory (default: stdout)");
  gen->add_option("--format", format)->check(CLI::IsMember({"tri"}));

  std::size_t count = 0, max_splits = 0;
  std::string report;
  auto* batch = app.add_subcommand("batch", "generate and span many instances");
  batch->add_option("surface", surface)->required();
  batch->add_option("count", count)->required();
  batch->add_option("max_splits", max_splits)->required();
  batch->add_option("--seed", seed);
  batch->add_option("--jobs", jobs);
  batch->add_option("--out", report, "write a JSON report to this file");

  auto* catalog = app.add_subcommand("catalog", "catalog maintenance");
  catalog->require_subcommand(1);
  auto* catalog_verify = catalog->add_subcommand("verify", "load and re-verify every entry");

  auto* reduce = app.add_subcommand("reduce", "greedy reduction to an irreducible base; writes a .trace");
  reduce->add_option("path", path, ".tri file")->required();
  reduce->add_option("--out", out, "trace file or directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(path);
    if (*span) {
      fs::path dir = out.empty() ? fs::path(path).parent_path() : fs::path(out);
      return cmd_span(path, dir.empty() ? fs::path(".") : dir, seed);
    }
    if (*gen) return cmd_gen(surface, n_splits, seed, out);
    if (*batch) return cmd_batch(surface, count, max_splits, seed, jobs, report);
    if (*catalog_verify) return cmd_catalog_verify();
    if (*reduce) return cmd_reduce(path, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_failure;
}
