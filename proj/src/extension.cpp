#include "lamanspan/extension.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lamanspan/error.hpp"
#include "lamanspan/surgery.hpp"

namespace lamanspan {

namespace {

bool has(const std::vector<Vertex>& vs, Vertex x) { return std::find(vs.begin(), vs.end(), x) != vs.end(); }

// True when a and b are consecutive along the open path `iv`.
bool consecutive(const std::vector<Vertex>& iv, Vertex a, Vertex b) {
  for (std::size_t i = 0; i + 1 < iv.size(); ++i)
    if ((iv[i] == a && iv[i + 1] == b) || (iv[i] == b && iv[i + 1] == a)) return true;
  return false;
}

std::string show(const SplitRecord& r) {
  std::ostringstream out;
  out << r.v << " [" << r.x1 << ".." << r.xk << "] -> " << new_vertex_name(r);
  return out.str();
}

void ensure_valid(const Triangulation& host, const SpanningComplex& s, const std::string& what) {
  std::string why = verify_span(host, s);
  if (!why.empty()) fail(ErrorCode::Unreachable, what + ": " + why);
}

}  // namespace

StarIntersection star_intersection(const SpanningComplex& s, const Triangulation& host, Vertex v) {
  const auto& lk = host.link(v);
  const std::size_t d = lk.size();
  std::vector<char> in(d);
  std::size_t count = 0;
  for (std::size_t i = 0; i < d; ++i) {
    in[i] = std::binary_search(s.triangles.begin(), s.triangles.end(), make_triangle(v, lk[i], lk[(i + 1) % d]));
    count += in[i];
  }
  if (count == 0) fail(ErrorCode::BadStructure, "vertex " + std::to_string(v) + " lies in no selected triangle");
  StarIntersection si;
  if (count == d) {
    si.whole_star = true;
    for (std::size_t i = 0; i < d; ++i) si.fan.push_back(make_triangle(v, lk[i], lk[(i + 1) % d]));
    si.fan_vertices = lk;
    return si;
  }
  std::size_t starts = 0, start = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (in[i] && !in[(i + d - 1) % d]) {
      ++starts;
      start = i;
    }
  }
  if (starts != 1)
    fail(ErrorCode::BadStructure, "selected triangles at " + std::to_string(v) + " are not consecutive");
  si.fan_vertices.push_back(lk[start]);
  for (std::size_t i = start; in[i % d]; ++i) {
    si.fan.push_back(make_triangle(v, lk[i % d], lk[(i + 1) % d]));
    si.fan_vertices.push_back(lk[(i + 1) % d]);
  }
  const auto edges = span_edges(s);
  for (std::size_t i = 0; i < d; ++i) {
    if (in[i]) continue;
    Edge e = make_edge(lk[i], lk[(i + 1) % d]);
    if (std::binary_search(edges.begin(), edges.end(), e)) si.path.push_back(e);
  }
  return si;
}

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Cone: return "cone";
    case StepKind::SplitBoth: return "split-2a";
    case StepKind::SplitFirst: return "split-2b";
    case StepKind::SplitLast: return "split-2c";
    case StepKind::Resolve: return "resolve";
  }
  return "?";
}

std::vector<Triangle> owner_mapped(const SpanningComplex& s, const Triangulation& host, const SplitRecord& rec) {
  const Vertex v = rec.v, nv = new_vertex_name(rec);
  const auto keep = link_interval(host, v, rec.x1, rec.xk);
  std::vector<Triangle> out;
  for (const auto& t : s.triangles) {
    if (!contains(t, v)) {
      out.push_back(t);
      continue;
    }
    Vertex a = -1, b = -1;
    for (Vertex u : t)
      if (u != v) (a < 0 ? a : b) = u;
    out.push_back(consecutive(keep, a, b) ? t : make_triangle(nv, a, b));
  }
  return out;
}

ExtensionResult extend(const SpanningComplex& s, const Triangulation& host, const SplitRecord& rec) {
  if (!host.has_vertex(rec.v)) fail(ErrorCode::NotExtendible, "split vertex not in host");
  if (!is_subcomplex(host, s)) fail(ErrorCode::NotExtendible, "not a subcomplex of the host");
  if (auto missed = first_missed_triangle(host, s)) {
    const auto& t = *missed;
    fail(ErrorCode::NotExtendible, "triangle " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
                                       std::to_string(t[2]) + " has no selected edge");
  }
  const StarIntersection si = star_intersection(s, host, rec.v);
  Triangulation after = apply_split(host, rec);
  const Vertex v = rec.v, nv = new_vertex_name(rec);
  std::vector<Triangle> tris = owner_mapped(s, host, rec);
  const bool first_in = has(si.fan_vertices, rec.x1), last_in = has(si.fan_vertices, rec.xk);

  StepKind kind;
  if (!first_in && !last_in) {
    kind = StepKind::Cone;
    // the fan sits on one side; the other vertex is coned over its interval
    const auto keep = link_interval(host, v, rec.x1, rec.xk);
    const bool fan_on_v = consecutive(keep, si.fan_vertices[0], si.fan_vertices[1]);
    const Vertex apex = fan_on_v ? nv : v;
    const auto iv = fan_on_v ? link_interval(host, v, rec.xk, rec.x1) : keep;
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) tris.push_back(make_triangle(apex, iv[i], iv[i + 1]));
  } else {
    if (first_in) tris.push_back(make_triangle(v, nv, rec.x1));
    if (last_in) tris.push_back(make_triangle(v, nv, rec.xk));
    kind = first_in && last_in ? StepKind::SplitBoth : first_in ? StepKind::SplitFirst : StepKind::SplitLast;
  }
  SpanningComplex next = make_span(std::move(tris), s.topology_class);
  ensure_valid(after, next, "extension across split " + show(rec) + " (" + step_kind_name(kind) + ")");
  return {std::move(next), std::move(after), {kind, rec}};
}

ExtensionResult resolve_singularity(const SpanningComplex& s, const Triangulation& host, Vertex x, Vertex y,
                                    const SplitRecord& rec) {
  const Vertex v = rec.v;
  if (s.topology_class != SpanClass::PinchedDisc || s.singular != v)
    fail(ErrorCode::HypothesesViolated, "expected a pinched disc singular at " + std::to_string(v));
  const SeedConstraints c = pinched_constraints(host, v, x, y);
  auto selected = [&](const Triangle& t) { return std::binary_search(s.triangles.begin(), s.triangles.end(), t); };
  for (const auto& t : c.forced_in)
    if (!selected(t)) fail(ErrorCode::HypothesesViolated, "a star triangle away from the cycle is missing");
  for (const auto& t : c.forced_out)
    if (selected(t)) fail(ErrorCode::HypothesesViolated, "a star triangle on the cycle is selected");
  const auto edges = span_edges(s);
  for (const auto& e : c.forbidden_edges)
    if (std::binary_search(edges.begin(), edges.end(), e))
      fail(ErrorCode::HypothesesViolated, "a link edge at a cycle neighbor is selected");

  auto keep = link_interval(host, v, rec.x1, rec.xk);
  auto give = link_interval(host, v, rec.xk, rec.x1);
  auto strictly = [&](const std::vector<Vertex>& iv, Vertex u) { return has(iv, u) && u != rec.x1 && u != rec.xk; };
  const bool elongating = (strictly(keep, x) && strictly(give, y)) || (strictly(give, x) && strictly(keep, y));
  if (!elongating)
    fail(ErrorCode::NotElongating, "split " + show(rec) + " does not separate " + std::to_string(x) + " from " +
                                       std::to_string(y));

  Triangulation after = apply_split(host, rec);
  const Vertex nv = new_vertex_name(rec);
  std::vector<Triangle> tris = owner_mapped(s, host, rec);
  tris.push_back(make_triangle(v, nv, rec.x1));
  tris.push_back(make_triangle(v, nv, rec.xk));
  SpanningComplex next = make_span(std::move(tris), SpanClass::Cylinder);
  ensure_valid(after, next, "resolving the singularity across " + show(rec));
  return {std::move(next), std::move(after), {StepKind::Resolve, rec}};
}

SpanningComplex constrained_disc_pipeline(const Triangulation& half, const Triangle& cap,
                                          std::vector<std::string>* log) {
  auto note = [&](const std::string& line) {
    if (log) log->push_back(line);
  };
  const Triangle face = make_triangle(cap[0], cap[1], cap[2]);
  if (!half.has_triangle(face)) fail(ErrorCode::CapLost, "cap is not a face of the half");
  auto contains_cap = [&](const SpanningComplex& s) {
    return std::binary_search(s.triangles.begin(), s.triangles.end(), face);
  };

  auto fallback = [&](const std::string& why) {
    note("  cap fallback (" + why + "): searching the full half");
    SeedConstraints c;
    c.forced_in = {face};
    c.node_budget = 2'000'000;
    auto s = search_span(half, SpanClass::Disc, c);
    if (!s) fail(ErrorCode::CapLost, "no disc containing the cap was found: " + why);
    return *s;
  };

  // reduce while never contracting a cap edge
  Triangulation t = half;
  std::vector<SplitRecord> undo;
  for (;;) {
    std::array<Vertex, 3> cur;
    for (int k = 0; k < 3; ++k) cur[k] = *t.vertex_containing(cap[k]);
    std::optional<Edge> pick;
    for (const Edge& e : t.edges()) {
      bool cap_edge = contains(make_triangle(cur[0], cur[1], cur[2]), e);
      if (!cap_edge && is_contractible_edge(t, e)) {
        pick = e;
        break;
      }
    }
    if (!pick) break;
    auto [next, rec] = contract_with_record(t, *pick);
    undo.push_back(std::move(rec));
    t = std::move(next);
  }
  std::reverse(undo.begin(), undo.end());
  std::array<Vertex, 3> base_cap;
  for (int k = 0; k < 3; ++k) base_cap[k] = *t.vertex_containing(cap[k]);
  const Triangle base_face = make_triangle(base_cap[0], base_cap[1], base_cap[2]);
  note("  half reduced to " + std::to_string(t.num_vertices()) + " vertices with " + std::to_string(undo.size()) +
       " splits");

  std::optional<SpanningComplex> seed;
  for (int k : {1, 0, 2}) {
    std::vector<Triangle> star;
    for (const auto& tri : t.triangles())
      if (contains(tri, base_cap[k])) star.push_back(tri);
    SpanningComplex s = make_span(std::move(star), SpanClass::Disc);
    if (verify_span(t, s).empty()) {
      seed = s;
      note("  seed: star of " + std::to_string(base_cap[k]));
      break;
    }
  }
  if (!seed) {
    SeedConstraints c;
    c.forced_in = {base_face};
    c.node_budget = 2'000'000;
    seed = search_span(t, SpanClass::Disc, c);
    if (!seed) return fallback("no seed on the reduced half");
    note("  seed: searched disc with " + std::to_string(seed->triangles.size()) + " triangles");
  }

  SpanningComplex s = *seed;
  Triangulation host = t;
  try {
    for (const auto& rec : undo) {
      auto res = extend(s, host, rec);
      s = std::move(res.span);
      host = std::move(res.host);
    }
  } catch (const Error& e) {
    return fallback(e.what());
  }
  if (!contains_cap(s)) return fallback("cap triangle dropped");
  return s;
}

std::string case_path_name(CasePath p) {
  switch (p) {
    case CasePath::NonCrosscap: return "non-crosscap";
    case CasePath::ConnectedSum: return "case1";
    case CasePath::Elongated: return "case2";
  }
  return "?";
}

namespace {

SpanningComplex fold(SpanningComplex s, Triangulation host, const std::vector<SplitRecord>& splits,
                     std::size_t from, std::vector<std::string>& log) {
  for (std::size_t i = from; i < splits.size(); ++i) {
    auto res = extend(s, host, splits[i]);
    log.push_back("split " + std::to_string(i) + ": " + show(splits[i]) + " " + step_kind_name(res.step.kind));
    s = std::move(res.span);
    host = std::move(res.host);
  }
  return s;
}

SpanningComplex standard_path(const ReductionTrace& trace, const Classification& cls, SeedBank& seeds,
                              std::vector<std::string>& log) {
  SpanningComplex seed = rename_span(seeds.seed(*cls.entry), cls.entry_to_input);
  log.push_back("seed: " + span_class_name(seed.topology_class) + " with " + std::to_string(seed.triangles.size()) +
                " triangles");
  ensure_valid(trace.base, seed, "seed on " + cls.entry->name);
  return fold(std::move(seed), trace.base, trace.splits, 0, log);
}

}  // namespace

namespace {

SpanningComplex connected_sum_path(const Triangulation& t, const SurvivalReport& rep, std::vector<std::string>& log) {
  const std::array<Vertex, 3> cyc{rep.tracked_cycle[0], rep.tracked_cycle[1], rep.tracked_cycle[2]};
  const Triangle cap = make_triangle(cyc[0], cyc[1], cyc[2]);
  log.push_back("case1: abc survives as " + std::to_string(cyc[0]) + " " + std::to_string(cyc[1]) + " " +
                std::to_string(cyc[2]));
  CutHalves halves = cut_along_triangle(t, cap);
  std::vector<Triangle> tris;
  for (const auto* half : {&halves.left, &halves.right}) {
    log.push_back(" half with " + std::to_string(half->num_vertices()) + " vertices");
    SpanningComplex d = constrained_disc_pipeline(*half, {cyc[0], cyc[1], cyc[2]}, &log);
    for (const auto& tri : d.triangles)
      if (tri != cap) tris.push_back(tri);
  }
  SpanningComplex s = make_span(std::move(tris), SpanClass::DiscSum);
  s.cap = cap;
  const auto covered = span_edges(s);
  for (const Edge& e : {Edge{cap[0], cap[1]}, Edge{cap[0], cap[2]}, Edge{cap[1], cap[2]}})
    if (!std::binary_search(covered.begin(), covered.end(), e)) s.extra_edges.push_back(e);
  return s;
}

SpanningComplex elongated_path(const ReductionTrace& trace, const Classification& cls, const std::array<Vertex, 3>& abc,
                               SeedBank& seeds, std::vector<std::string>& log) {
  const SplitRecord& first = trace.splits.front();
  std::map<Vertex, Vertex> back;
  for (const auto& [e, b] : cls.entry_to_input) back[b] = e;
  SpanningComplex seed = rename_span(seeds.pinched_seed(*cls.entry, back.at(first.v)), cls.entry_to_input);
  std::vector<Vertex> others;
  for (Vertex u : abc)
    if (u != first.v) others.push_back(u);
  log.push_back("seed: pinched disc at " + std::to_string(first.v));
  auto res = resolve_singularity(seed, trace.base, others[0], others[1], first);
  log.push_back("split 0: " + show(first) + " resolve");
  return fold(std::move(res.span), std::move(res.host), trace.splits, 1, log);
}

std::array<Vertex, 3> input_abc(const Classification& cls) {
  std::array<Vertex, 3> abc;
  for (int k = 0; k < 3; ++k) abc[k] = cls.entry_to_input.at((*cls.entry->abc)[k]);
  return abc;
}

}  // namespace

SpanOutcome span_surface(const Triangulation& t, const Catalog& catalog, SeedBank& seeds) {
  const SurfaceClass sc = t.topology().surface_class;
  if (sc == SurfaceClass::Other)
    fail(ErrorCode::UnsupportedSurface, "chi=" + std::to_string(t.topology().euler_characteristic) +
                                            (t.topology().orientable ? " orientable" : " non-orientable"));
  SpanOutcome out;
  ReductionTrace trace = reduce_to_irreducible(t);
  const std::vector<Classification> all = catalog.classify_all(trace.base);
  const Classification& cls = all.front();
  out.base_name = cls.entry->name;
  out.split_count = trace.splits.size();
  out.log.push_back("reduce: " + surface_name(sc) + " base " + cls.entry->name + " after " +
                    std::to_string(trace.splits.size()) + " contractions");

  if (!cls.entry->crosscap) {
    out.path = CasePath::NonCrosscap;
    out.span = standard_path(trace, cls, seeds, out.log);
    ensure_valid(t, out.span, "final spanning complex");
    return out;
  }

  // Any automorphic image of abc will do; prefer one that survives, then
  // one whose elongating split comes first.
  std::optional<std::pair<SurvivalReport, std::array<Vertex, 3>>> best;
  for (const auto& c : all) {
    const std::array<Vertex, 3> abc = input_abc(c);
    SurvivalReport rep = track_survival(trace, abc);
    if (!best || rep.survived_all ||
        (!best->first.survived_all && *rep.first_elongating_index < *best->first.first_elongating_index))
      best.emplace(std::move(rep), abc);
    if (best->first.survived_all) break;
  }
  const auto& [rep, abc] = *best;
  if (rep.survived_all) {
    out.path = CasePath::ConnectedSum;
    out.span = connected_sum_path(t, rep, out.log);
    ensure_valid(t, out.span, "final spanning complex");
    return out;
  }

  out.path = CasePath::Elongated;
  out.log.push_back("case2: first elongating split at index " + std::to_string(*rep.first_elongating_index));
  auto lookup = [&](const Triangulation& b) {
    std::vector<std::array<Vertex, 3>> options;
    for (const auto& c : catalog.classify_all(b))
      if (c.entry->crosscap) options.push_back(input_abc(c));
    return options;
  };
  CrosscapArrangement arr = rearrange_crosscap(trace, abc, lookup);
  out.rearranged_replay_matches = replay(arr.trace) == t;
  out.log.push_back("rearranged with " + std::to_string(arr.moves) + " moves");
  if (!*out.rearranged_replay_matches) fail(ErrorCode::Unreachable, "rearranged trace does not replay to input");
  const std::vector<Classification> others = catalog.classify_all(arr.trace.base);
  out.base_name = others.front().entry->name;
  out.split_count = arr.trace.splits.size();
  switch (arr.kind) {
    case ArrangementKind::NonCrosscap:
      out.log.push_back("rearrangement reached non-crosscap base " + out.base_name);
      out.path = CasePath::NonCrosscap;
      out.span = standard_path(arr.trace, others.front(), seeds, out.log);
      break;
    case ArrangementKind::Survives:
      out.log.push_back("rearrangement reached base " + out.base_name + " where abc survives");
      out.path = CasePath::ConnectedSum;
      out.span = connected_sum_path(t, track_survival(arr.trace, arr.abc), out.log);
      break;
    case ArrangementKind::Elongating: {
      auto match = std::find_if(others.begin(), others.end(), [&](const Classification& c) {
        auto x = input_abc(c), y = arr.abc;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
      });
      if (match == others.end()) fail(ErrorCode::Unreachable, "rearranged abc is not an image of the entry's abc");
      out.span = elongated_path(arr.trace, *match, arr.abc, seeds, out.log);
      break;
    }
  }
  ensure_valid(t, out.span, "final spanning complex");
  return out;
}

}  // namespace lamanspan
