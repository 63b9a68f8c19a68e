#include "lamanspan/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <set>

#include "lamanspan/error.hpp"
#include "lamanspan/io.hpp"

namespace lamanspan {

Vertex new_vertex_name(const SplitRecord& r) {
  if (r.new_vertex.empty()) fail(ErrorCode::StaleRecord, "split record without a new vertex label");
  return r.new_vertex.front();
}

Triangulation apply_split(const Triangulation& t, const SplitRecord& r) {
  if (!t.has_vertex(r.v)) fail(ErrorCode::StaleRecord, "split vertex " + std::to_string(r.v) + " is gone");
  if (link_position(t, r.v, r.x1) < 0 || link_position(t, r.v, r.xk) < 0)
    fail(ErrorCode::StaleRecord, "split endpoints " + std::to_string(r.x1) + "," + std::to_string(r.xk) +
                                     " are not on the link of " + std::to_string(r.v));
  try {
    return split(t, r.v, r.x1, r.xk, r.new_vertex).complex;
  } catch (const Error& e) {
    fail(ErrorCode::StaleRecord, std::string("split record does not apply: ") + e.what());
  }
}

Triangulation replay(const ReductionTrace& trace) {
  Triangulation t = trace.base;
  for (const auto& r : trace.splits) t = apply_split(t, r);
  return t;
}

std::vector<Triangulation> replay_all(const ReductionTrace& trace) {
  std::vector<Triangulation> out{trace.base};
  for (const auto& r : trace.splits) out.push_back(apply_split(out.back(), r));
  return out;
}

std::pair<Triangulation, SplitRecord> contract_with_record(const Triangulation& t, const Edge& raw) {
  const Edge e = make_edge(raw.a, raw.b);
  Triangulation after = contract(t, e);
  auto [p, q] = t.apexes(e);
  for (auto [x1, xk] : {std::pair{p, q}, std::pair{q, p}}) {
    SplitRecord rec{e.a, x1, xk, t.label(e.b)};
    if (apply_split(after, rec) == t) return {std::move(after), std::move(rec)};
  }
  fail(ErrorCode::Unreachable, "no split record restores the contraction of " + std::to_string(e.a) + "-" +
                                   std::to_string(e.b));
}

ReductionTrace reduce_to_irreducible(const Triangulation& input) {
  Triangulation t = input;
  std::vector<SplitRecord> undo;
  for (;;) {
    std::optional<Edge> pick;
    for (const Edge& e : t.edges()) {
      if (is_contractible_edge(t, e)) {
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
  return {std::move(t), std::move(undo)};
}

void write_trace(std::ostream& out, const ReductionTrace& trace, const std::string& base_file) {
  out << "base " << base_file << '\n';
  for (const auto& r : trace.splits)
    out << "s " << r.v << ' ' << r.x1 << ' ' << r.xk << ' ' << new_vertex_name(r) << '\n';
}

void write_trace(const std::filesystem::path& path, const ReductionTrace& trace) {
  std::filesystem::path base = path;
  base.replace_extension(".base.tri");
  write_tri_file(base, trace.base, surface_name(trace.base.topology().surface_class));
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  write_trace(out, trace, base.filename().string());
}

ReductionTrace read_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
  std::optional<Triangulation> base;
  std::vector<SplitRecord> splits;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "base") {
      std::string file;
      if (!(ls >> file)) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": base without file");
      base = read_triangulation(path.parent_path() / file);
    } else if (head == "s") {
      SplitRecord r;
      Vertex nv = -1;
      if (!(ls >> r.v >> r.x1 >> r.xk >> nv) || nv < 0)
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad split line");
      r.new_vertex = {nv};
      splits.push_back(r);
    } else {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown record '" + head + "'");
    }
  }
  if (!base) fail(ErrorCode::ParseError, "trace has no base line");
  return {std::move(*base), std::move(splits)};
}

FaceComplex face_complex(const Triangulation& t) {
  FaceComplex c{t.labels(), {}};
  for (const auto& tri : t.triangles()) {
    for (int mask = 1; mask < 8; ++mask) {
      std::vector<Vertex> f;
      for (int k = 0; k < 3; ++k)
        if (mask & (1 << k)) f.push_back(tri[k]);
      c.faces.insert(f);
    }
  }
  return c;
}

FaceComplex contract_faces(const FaceComplex& c, const Edge& raw) {
  const Edge e = make_edge(raw.a, raw.b);
  if (!c.faces.count({e.a, e.b}))
    fail(ErrorCode::UnknownEdge, std::to_string(e.a) + "-" + std::to_string(e.b) + " is not an edge");
  FaceComplex out;
  out.labels = c.labels;
  Label merged = out.labels[e.a];
  const Label& other = out.labels[e.b];
  merged.insert(merged.end(), other.begin(), other.end());
  std::sort(merged.begin(), merged.end());
  out.labels.erase(e.b);
  out.labels[e.a] = merged;
  for (auto f : c.faces) {
    for (Vertex& v : f)
      if (v == e.b) v = e.a;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    out.faces.insert(std::move(f));
  }
  return out;
}

namespace {

std::optional<Vertex> holder(const FaceComplex& c, int id) {
  for (const auto& [v, l] : c.labels)
    if (std::binary_search(l.begin(), l.end(), id)) return v;
  return std::nullopt;
}

}  // namespace

FaceComplex run_contractions(const Triangulation& t, const std::vector<std::pair<int, int>>& merges) {
  FaceComplex c = face_complex(t);
  for (auto [a, b] : merges) {
    auto u = holder(c, a), w = holder(c, b);
    if (!u || !w) fail(ErrorCode::NoSuchMerge, "index not present in the complex");
    if (*u == *w) fail(ErrorCode::NoSuchMerge, std::to_string(a) + " and " + std::to_string(b) + " already merged");
    c = contract_faces(c, make_edge(*u, *w));
  }
  return c;
}

std::optional<std::vector<Triangle>> pure_triangles(const FaceComplex& c) {
  std::vector<Triangle> tris;
  for (const auto& f : c.faces)
    if (f.size() == 3) tris.push_back({f[0], f[1], f[2]});
  for (const auto& f : c.faces) {
    if (f.size() >= 3) continue;
    bool covered = std::any_of(tris.begin(), tris.end(), [&](const Triangle& t) {
      return std::all_of(f.begin(), f.end(), [&](Vertex v) { return contains(t, v); });
    });
    if (!covered) return std::nullopt;
  }
  return tris;
}

bool face_preimage_test(const Triangulation& before, const FaceComplex& after, const std::vector<Vertex>& s) {
  std::map<Vertex, int> group;
  std::map<Vertex, int> owner_of_after;
  for (const auto& [w, l] : after.labels) {
    for (int id : l) {
      auto u = before.vertex_containing(id);
      if (!u) fail(ErrorCode::LabelMismatch, "index " + std::to_string(id) + " unknown to the original complex");
      if (before.label(*u).front() == id) owner_of_after[*u] = w;
    }
  }
  for (const auto& [u, l] : before.labels()) {
    auto it = owner_of_after.find(u);
    if (it == owner_of_after.end()) fail(ErrorCode::LabelMismatch, "vertex " + std::to_string(u) + " not merged");
    const Label& big = after.labels.at(it->second);
    if (!std::includes(big.begin(), big.end(), l.begin(), l.end()))
      fail(ErrorCode::LabelMismatch, "label of " + std::to_string(u) + " split across merged vertices");
  }
  std::vector<Vertex> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex w : sorted)
    if (!after.labels.count(w)) fail(ErrorCode::LabelMismatch, "vertex " + std::to_string(w) + " not in complex");
  if (sorted.empty()) return true;
  if (sorted.size() > 3) return false;
  for (std::size_t k = 0; k < sorted.size(); ++k) group[sorted[k]] = static_cast<int>(k);

  auto matches = [&](const std::vector<Vertex>& face) {
    if (face.size() != sorted.size()) return false;
    std::vector<int> seen;
    for (Vertex u : face) {
      auto g = group.find(owner_of_after.at(u));
      if (g == group.end()) return false;
      seen.push_back(g->second);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  };

  if (sorted.size() == 1) return true;
  if (sorted.size() == 2) {
    for (const Edge& e : before.edges())
      if (matches({e.a, e.b})) return true;
    return false;
  }
  for (const auto& t : before.triangles())
    if (matches({t[0], t[1], t[2]})) return true;
  return false;
}

bool face_preimage_test(const Triangulation& before, const Triangulation& after, const std::vector<Vertex>& s) {
  return face_preimage_test(before, face_complex(after), s);
}

namespace {

struct UnionFind {
  std::map<Vertex, Vertex> parent;
  Vertex find(Vertex v) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      parent[v] = v;
      return v;
    }
    if (it->second == v) return v;
    Vertex r = find(it->second);
    parent[v] = r;
    return r;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

std::vector<std::pair<int, int>> reorder_last_contraction(const Triangulation& t,
                                                          const std::vector<std::pair<int, int>>& merges, int i,
                                                          int j) {
  auto vi = t.vertex_containing(i), vj = t.vertex_containing(j);
  if (!vi || !vj || *vi == *vj) fail(ErrorCode::NoSuchMerge, "indices must lie in distinct vertices");
  if (!t.has_edge(make_edge(*vi, *vj)))
    fail(ErrorCode::NoSuchMerge, std::to_string(i) + "-" + std::to_string(j) + " is not an edge");
  // final groups of original vertices
  UnionFind groups;
  for (auto [a, b] : merges) {
    auto u = t.vertex_containing(a), w = t.vertex_containing(b);
    if (!u || !w) fail(ErrorCode::NoSuchMerge, "merge names an unknown index");
    groups.unite(*u, *w);
  }
  if (groups.find(*vi) != groups.find(*vj))
    fail(ErrorCode::NoSuchMerge, std::to_string(i) + " and " + std::to_string(j) + " end in different vertices");
  const Vertex target = groups.find(*vi);

  // spanning tree of every group inside the original 1-skeleton, with ij
  // forced into the tree of the target group
  UnionFind tree;
  tree.unite(*vi, *vj);
  std::vector<std::pair<int, int>> head, tail;
  for (const Edge& e : t.edges()) {
    if (groups.find(e.a) != groups.find(e.b)) continue;
    if (!tree.unite(e.a, e.b)) continue;
    (groups.find(e.a) == target ? tail : head).emplace_back(e.a, e.b);
  }
  head.insert(head.end(), tail.begin(), tail.end());
  head.emplace_back(i, j);
  if (head.size() != merges.size())
    fail(ErrorCode::NoSuchMerge, "merge groups are not connected in the original complex");
  return head;
}

SurvivalReport track_survival(const ReductionTrace& trace, const std::array<Vertex, 3>& abc) {
  const Triangulation& base = trace.base;
  for (int k = 0; k < 3; ++k) {
    if (!base.has_vertex(abc[k])) fail(ErrorCode::NotOnCycle, std::to_string(abc[k]) + " is not a base vertex");
    if (!base.has_edge(make_edge(abc[k], abc[(k + 1) % 3])))
      fail(ErrorCode::NotOnCycle, "abc is not a 3-cycle of the base");
  }
  if (base.has_triangle(make_triangle(abc[0], abc[1], abc[2])))
    fail(ErrorCode::NotOnCycle, "abc bounds a face of the base");

  SurvivalReport rep;
  std::array<Vertex, 3> cur = abc;
  rep.tracked_cycle.assign(cur.begin(), cur.end());
  Triangulation t = base;
  for (std::size_t s = 0; s < trace.splits.size(); ++s) {
    const SplitRecord& r = trace.splits[s];
    auto pos = std::find(cur.begin(), cur.end(), r.v);
    if (pos != cur.end()) {
      const Vertex q = cur[(pos - cur.begin() + 1) % 3], w = cur[(pos - cur.begin() + 2) % 3];
      const auto keep = link_interval(t, r.v, r.x1, r.xk);
      const auto give = link_interval(t, r.v, r.xk, r.x1);
      auto in = [](const std::vector<Vertex>& iv, Vertex x) { return std::find(iv.begin(), iv.end(), x) != iv.end(); };
      const Vertex nv = new_vertex_name(r);
      if (in(keep, q) && in(keep, w)) {
        // the split vertex keeps the cycle
      } else if (in(give, q) && in(give, w)) {
        *pos = nv;
      } else {
        const Vertex to_q = in(keep, q) ? r.v : nv;
        const Vertex to_w = to_q == r.v ? nv : r.v;
        rep.survived_all = false;
        rep.first_elongating_index = s;
        rep.tracked_cycle = {to_q, q, w, to_w};
        return rep;
      }
    }
    t = apply_split(t, r);
  }
  rep.tracked_cycle.assign(cur.begin(), cur.end());
  return rep;
}

namespace {

// Contracts each merge topologically, recording the inverse splits.
std::optional<ReductionTrace> run_merges(const Triangulation& top, const std::vector<std::pair<int, int>>& merges) {
  Triangulation t = top;
  std::vector<SplitRecord> undo;
  for (auto [a, b] : merges) {
    auto u = t.vertex_containing(a), w = t.vertex_containing(b);
    if (!u || !w || *u == *w) return std::nullopt;
    const Edge e = make_edge(*u, *w);
    if (!t.has_edge(e) || !is_contractible_edge(t, e)) return std::nullopt;
    auto [next, rec] = contract_with_record(t, e);
    undo.push_back(std::move(rec));
    t = std::move(next);
  }
  std::reverse(undo.begin(), undo.end());
  return ReductionTrace{std::move(t), std::move(undo)};
}

ReductionTrace prefix(const ReductionTrace& trace, std::size_t count) {
  return {trace.base, std::vector<SplitRecord>(trace.splits.begin(), trace.splits.begin() + count)};
}

}  // namespace

namespace {

struct ArrangementState {
  ReductionTrace trace;
  std::array<Vertex, 3> abc;
  SurvivalReport report;
  std::size_t moves = 0;
};

void append_complex(std::ostringstream& k, const Triangulation& t) {
  for (const auto& tri : t.triangles()) k << tri[0] << ',' << tri[1] << ',' << tri[2] << ';';
  for (const auto& [v, l] : t.labels()) {
    k << v << ':';
    for (int id : l) k << id << ',';
  }
  k << '|';
}

// Traces with the same base and the same complex just after the elongating
// split behave alike for the search.
std::string state_key(const ReductionTrace& trace, std::array<Vertex, 3> abc, std::size_t j) {
  std::ostringstream k;
  std::sort(abc.begin(), abc.end());
  k << abc[0] << ' ' << abc[1] << ' ' << abc[2] << '|';
  append_complex(k, trace.base);
  append_complex(k, replay(prefix(trace, j + 1)));
  return k.str();
}

constexpr std::size_t arrangement_budget = 4000;

}  // namespace

CrosscapArrangement rearrange_crosscap(const ReductionTrace& input, const std::array<Vertex, 3>& abc,
                                       const CrosscapLookup& lookup) {
  SurvivalReport first = track_survival(input, abc);
  if (first.survived_all) fail(ErrorCode::NotElongating, "abc survives every split; nothing to rearrange");

  // Depth-first over rewritten traces; among the successors of a state the
  // one with the smallest elongating index is tried first.
  std::vector<ArrangementState> states;
  std::set<std::string> seen;
  std::vector<std::size_t> stack, batch;
  auto push = [&](ReductionTrace trace, const std::array<Vertex, 3>& a, SurvivalReport rep, std::size_t moves) {
    if (!seen.insert(state_key(trace, a, *rep.first_elongating_index)).second) return;
    batch.push_back(states.size());
    states.push_back({std::move(trace), a, std::move(rep), moves});
  };
  push(input, abc, first, 0);

  for (std::size_t expanded = 0; expanded < arrangement_budget; ++expanded) {
    std::stable_sort(batch.begin(), batch.end(), [&](std::size_t x, std::size_t y) {
      return *states[x].report.first_elongating_index > *states[y].report.first_elongating_index;
    });
    stack.insert(stack.end(), batch.begin(), batch.end());
    batch.clear();
    if (stack.empty()) break;
    const ArrangementState cur = states[stack.back()];
    stack.pop_back();
    const std::size_t j = *cur.report.first_elongating_index;
    if (j == 0) return {cur.trace, ArrangementKind::Elongating, cur.abc, cur.moves};

    const Triangulation top = replay(prefix(cur.trace, j + 1));
    const std::vector<SplitRecord> rest(cur.trace.splits.begin() + j + 1, cur.trace.splits.end());
    std::vector<std::pair<int, int>> merges;
    for (std::size_t i = j + 1; i-- > 0;)
      merges.emplace_back(cur.trace.splits[i].v, new_vertex_name(cur.trace.splits[i]));
    std::vector<Edge> cycle;
    for (std::size_t k = 0; k < 4; ++k)
      cycle.push_back(make_edge(cur.report.tracked_cycle[k], cur.report.tracked_cycle[(k + 1) % 4]));
    auto on_cycle = [&](const Edge& e) { return std::find(cycle.begin(), cycle.end(), e) != cycle.end(); };
    auto with_rest = [&](ReductionTrace t) {
      t.splits.insert(t.splits.end(), rest.begin(), rest.end());
      return t;
    };

    // Reordering: contract first an edge standing in for an earlier merge
    // (merges[0] undoes the elongating split), keeping the base.
    bool improved = false;
    for (std::size_t k = 1; k < merges.size(); ++k) {
      UnionFind uf;
      for (std::size_t m = 0; m < merges.size(); ++m)
        if (m != k) uf.unite(merges[m].first, merges[m].second);
      const Vertex ca = uf.find(merges[k].first), cb = uf.find(merges[k].second);
      for (const Edge& e : top.edges()) {
        if (on_cycle(e)) continue;
        const Vertex fa = uf.find(e.a), fb = uf.find(e.b);
        if (!((fa == ca && fb == cb) || (fa == cb && fb == ca))) continue;
        std::vector<std::pair<int, int>> reordered{{e.a, e.b}};
        for (std::size_t m = 0; m < merges.size(); ++m)
          if (m != k) reordered.push_back(merges[m]);
        auto attempt = run_merges(top, reordered);
        if (!attempt || !(attempt->base == cur.trace.base)) continue;
        ReductionTrace full = with_rest(std::move(*attempt));
        SurvivalReport rep = track_survival(full, cur.abc);
        if (rep.survived_all) return {std::move(full), ArrangementKind::Survives, cur.abc, cur.moves + 1};
        if (*rep.first_elongating_index >= j) continue;
        improved = true;
        push(std::move(full), cur.abc, std::move(rep), cur.moves + 1);
      }
    }
    if (improved) continue;

    // Stuck: contract an edge off the 4-cycle and reduce greedily, which
    // may reach another base or another image of abc.
    std::optional<ReductionTrace> non_crosscap;
    for (const Edge& e : top.edges()) {
      if (on_cycle(e) || !is_contractible_edge(top, e)) continue;
      auto [smaller, rec] = contract_with_record(top, e);
      ReductionTrace red = reduce_to_irreducible(smaller);
      red.splits.push_back(rec);
      red = with_rest(std::move(red));
      const auto options = lookup(red.base);
      if (options.empty()) {
        if (!non_crosscap) non_crosscap = std::move(red);
        continue;
      }
      for (const auto& o : options) {
        SurvivalReport rep = track_survival(red, o);
        if (rep.survived_all) return {std::move(red), ArrangementKind::Survives, o, cur.moves + 1};
        push(red, o, std::move(rep), cur.moves + 1);
      }
    }
    if (non_crosscap) return {std::move(*non_crosscap), ArrangementKind::NonCrosscap, {}, cur.moves + 1};
  }

  const SurvivalReport& rep = first;
  std::ostringstream why;
  why << "no sequence of contractions avoiding the 4-cycle";
  for (Vertex v : rep.tracked_cycle) why << ' ' << v;
  why << " brings the elongating split (index " << *rep.first_elongating_index << ") first";
  fail(ErrorCode::Unreachable, why.str());
}

}  // namespace lamanspan
