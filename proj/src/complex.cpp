#include "lamanspan/complex.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "lamanspan/canonical.hpp"
#include "lamanspan/error.hpp"

namespace lamanspan {

Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

bool contains(const Triangle& t, Vertex v) { return t[0] == v || t[1] == v || t[2] == v; }

bool contains(const Triangle& t, const Edge& e) { return contains(t, e.a) && contains(t, e.b); }

Vertex opposite(const Triangle& t, const Edge& e) {
  for (Vertex v : t)
    if (v != e.a && v != e.b) return v;
  return -1;
}

SurfaceClass classify_surface(int chi, bool orientable) {
  if (chi == 2) return SurfaceClass::Sphere;
  if (chi == 1) return SurfaceClass::ProjectivePlane;
  if (chi == 0) return orientable ? SurfaceClass::Torus : SurfaceClass::KleinBottle;
  return SurfaceClass::Other;
}

std::string surface_name(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Sphere: return "sphere";
    case SurfaceClass::ProjectivePlane: return "rp2";
    case SurfaceClass::Torus: return "torus";
    case SurfaceClass::KleinBottle: return "klein";
    case SurfaceClass::Other: return "other";
  }
  return "other";
}

SurfaceClass parse_surface_name(const std::string& name) {
  if (name == "sphere" || name == "s2") return SurfaceClass::Sphere;
  if (name == "rp2" || name == "projective-plane" || name == "projective_plane") return SurfaceClass::ProjectivePlane;
  if (name == "torus") return SurfaceClass::Torus;
  if (name == "klein" || name == "klein-bottle" || name == "klein_bottle") return SurfaceClass::KleinBottle;
  fail(ErrorCode::UnsupportedSurface, "unknown surface name '" + name + "'");
}

namespace {

std::string show(const Triangle& t) {
  std::ostringstream os;
  os << t[0] << ' ' << t[1] << ' ' << t[2];
  return os.str();
}

}  // namespace

Triangulation Triangulation::validate(std::span<const Triangle> raw) {
  std::map<Vertex, Label> labels;
  Vertex next = 0;
  for (const auto& t : raw) {
    for (Vertex v : t) {
      if (v < 0) fail(ErrorCode::NotASurface, "negative vertex id");
      labels[v] = Label{v};
      next = std::max(next, v + 1);
    }
  }
  std::vector<Triangle> tris;
  tris.reserve(raw.size());
  for (const auto& t : raw) tris.push_back(make_triangle(t[0], t[1], t[2]));
  return validate(std::move(tris), std::move(labels), next);
}

Triangulation Triangulation::validate(std::vector<Triangle> triangles, std::map<Vertex, Label> labels,
                                      Vertex next_fresh) {
  Triangulation t;
  for (auto& tri : triangles) {
    tri = make_triangle(tri[0], tri[1], tri[2]);
    if (tri[0] == tri[1] || tri[1] == tri[2]) fail(ErrorCode::NotASurface, "degenerate triangle " + show(tri));
  }
  std::sort(triangles.begin(), triangles.end());
  if (std::adjacent_find(triangles.begin(), triangles.end()) != triangles.end())
    fail(ErrorCode::DuplicateTriangle, "triangle listed twice");

  std::set<Vertex> used;
  for (const auto& tri : triangles) used.insert(tri.begin(), tri.end());
  for (Vertex v : used) {
    auto it = labels.find(v);
    if (it == labels.end() || it->second.empty() || it->second.front() != v ||
        !std::is_sorted(it->second.begin(), it->second.end()))
      fail(ErrorCode::LabelMismatch, "vertex " + std::to_string(v) + " lacks a label named by its minimum");
  }
  if (labels.size() != used.size()) fail(ErrorCode::LabelMismatch, "label for a vertex in no triangle");
  if (used.size() < 4) fail(ErrorCode::TooSmall, "fewer than four vertices");

  t.triangles_ = std::move(triangles);
  t.labels_ = std::move(labels);
  t.next_fresh_ = next_fresh;
  for (const auto& [v, l] : t.labels_) t.next_fresh_ = std::max(t.next_fresh_, l.back() + 1);
  t.index();
  return t;
}

void Triangulation::index() {
  std::map<Edge, std::vector<Vertex>> apex;
  for (const auto& tri : triangles_) {
    apex[make_edge(tri[0], tri[1])].push_back(tri[2]);
    apex[make_edge(tri[0], tri[2])].push_back(tri[1]);
    apex[make_edge(tri[1], tri[2])].push_back(tri[0]);
  }
  edges_.clear();
  for (const auto& [e, ap] : apex) {
    if (ap.size() != 2)
      fail(ErrorCode::NotASurface, "edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " lies in " +
                                       std::to_string(ap.size()) + " triangle(s)");
    edges_.push_back(e);
  }

  // links: every neighbor has exactly two link-neighbors, so each link is a
  // union of cycles; require a single one
  std::map<Vertex, std::map<Vertex, std::vector<Vertex>>> link_graph;
  for (const auto& tri : triangles_) {
    for (int i = 0; i < 3; ++i) {
      Vertex v = tri[i], a = tri[(i + 1) % 3], b = tri[(i + 2) % 3];
      link_graph[v][a].push_back(b);
      link_graph[v][b].push_back(a);
    }
  }
  links_.clear();
  for (auto& [v, g] : link_graph) {
    Vertex start = g.begin()->first;
    const auto& first = g.begin()->second;
    Vertex prev = start;
    Vertex cur = std::min(first[0], first[1]);
    std::vector<Vertex> cyc{start};
    while (cur != start) {
      cyc.push_back(cur);
      const auto& two = g[cur];
      Vertex nxt = two[0] == prev ? two[1] : two[0];
      prev = cur;
      cur = nxt;
      if (cyc.size() > g.size()) break;
    }
    if (cyc.size() != g.size())
      fail(ErrorCode::NotASurface, "link of vertex " + std::to_string(v) + " is not a single cycle");
    links_[v] = std::move(cyc);
  }

  // connectivity over the 1-skeleton
  std::set<Vertex> seen;
  std::vector<Vertex> stack{labels_.begin()->first};
  seen.insert(stack.back());
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : links_[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  if (seen.size() != labels_.size()) fail(ErrorCode::Disconnected, "complex is not connected");

  // orientation propagation
  std::map<Triangle, std::array<Vertex, 3>> oriented;
  bool orientable = true;
  std::map<Edge, std::vector<std::size_t>> by_edge;
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    const auto& tri = triangles_[i];
    by_edge[make_edge(tri[0], tri[1])].push_back(i);
    by_edge[make_edge(tri[0], tri[2])].push_back(i);
    by_edge[make_edge(tri[1], tri[2])].push_back(i);
  }
  std::vector<std::array<Vertex, 3>> orient(triangles_.size());
  std::vector<char> done(triangles_.size(), 0);
  std::queue<std::size_t> q;
  orient[0] = triangles_[0];
  done[0] = 1;
  q.push(0);
  while (!q.empty()) {
    std::size_t i = q.front();
    q.pop();
    const auto& o = orient[i];
    for (int k = 0; k < 3; ++k) {
      Vertex p = o[k], r = o[(k + 1) % 3];
      for (std::size_t j : by_edge[make_edge(p, r)]) {
        if (j == i) continue;
        // neighbor must traverse the shared edge as r -> p
        Vertex s = opposite(triangles_[j], make_edge(p, r));
        std::array<Vertex, 3> want{r, p, s};
        if (!done[j]) {
          orient[j] = want;
          done[j] = 1;
          q.push(j);
        } else {
          const auto& have = orient[j];
          bool same = false;
          for (int m = 0; m < 3; ++m)
            if (have[m] == want[0] && have[(m + 1) % 3] == want[1]) same = true;
          if (!same) orientable = false;
        }
      }
    }
  }
  int chi = static_cast<int>(labels_.size()) - static_cast<int>(edges_.size()) + static_cast<int>(triangles_.size());
  topology_ = TopologyReport{chi, orientable, classify_surface(chi, orientable)};
}

std::vector<Vertex> Triangulation::vertices() const {
  std::vector<Vertex> out;
  out.reserve(labels_.size());
  for (const auto& [v, l] : labels_) out.push_back(v);
  return out;
}

const Label& Triangulation::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  return it->second;
}

bool Triangulation::has_edge(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool Triangulation::has_triangle(const Triangle& t) const {
  return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

const std::vector<Vertex>& Triangulation::link(Vertex v) const {
  auto it = links_.find(v);
  if (it == links_.end()) fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  return it->second;
}

std::vector<Vertex> Triangulation::neighbors(Vertex v) const {
  std::vector<Vertex> n = link(v);
  std::sort(n.begin(), n.end());
  return n;
}

std::array<Vertex, 2> Triangulation::apexes(const Edge& e) const {
  if (!has_edge(e)) fail(ErrorCode::UnknownEdge, std::to_string(e.a) + "-" + std::to_string(e.b));
  const auto& lk = link(e.a);
  const int d = static_cast<int>(lk.size());
  for (int i = 0; i < d; ++i) {
    if (lk[i] == e.b) {
      Vertex p = lk[(i + d - 1) % d], n = lk[(i + 1) % d];
      return {std::min(p, n), std::max(p, n)};
    }
  }
  fail(ErrorCode::UnknownEdge, "edge missing from link");
}

std::optional<Vertex> Triangulation::vertex_containing(int i) const {
  for (const auto& [v, l] : labels_)
    if (std::binary_search(l.begin(), l.end(), i)) return v;
  return std::nullopt;
}

TopologyReport topology(const Triangulation& t) { return t.topology(); }

LinkCycle link(const Triangulation& t, Vertex v) { return t.link_cycle(v); }

std::vector<Triangle> empty_triangles(const Triangulation& t) {
  std::vector<Triangle> out;
  for (const auto& e : t.edges()) {
    auto na = t.neighbors(e.a);
    for (Vertex c : t.neighbors(e.b)) {
      if (c <= e.b) continue;
      if (!std::binary_search(na.begin(), na.end(), c)) continue;
      Triangle tri{e.a, e.b, c};
      if (!t.has_triangle(tri)) out.push_back(tri);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_empty_triangle(const Triangulation& t, const Edge& e) {
  auto ap = t.apexes(e);
  auto na = t.neighbors(e.a);
  for (Vertex c : t.neighbors(e.b)) {
    if (c == e.a || c == ap[0] || c == ap[1]) continue;
    if (std::binary_search(na.begin(), na.end(), c)) return true;
  }
  return false;
}

bool is_contractible_edge(const Triangulation& t, const Edge& e) {
  if (!t.has_edge(e)) fail(ErrorCode::UnknownEdge, std::to_string(e.a) + "-" + std::to_string(e.b));
  return t.num_vertices() > 4 && !in_empty_triangle(t, e);
}

std::vector<Edge> contractible_edges(const Triangulation& t) {
  std::vector<Edge> out;
  for (const auto& e : t.edges())
    if (is_contractible_edge(t, e)) out.push_back(e);
  return out;
}

bool is_irreducible(const Triangulation& t) {
  for (const auto& e : t.edges())
    if (is_contractible_edge(t, e)) return false;
  return true;
}

Triangulation contract(const Triangulation& t, const Edge& e) {
  if (!is_contractible_edge(t, e))
    fail(ErrorCode::NotContractible, std::to_string(e.a) + "-" + std::to_string(e.b));
  Label merged = t.label(e.a);
  const Label& other = t.label(e.b);
  merged.insert(merged.end(), other.begin(), other.end());
  std::sort(merged.begin(), merged.end());
  const Vertex name = merged.front();
  std::vector<Triangle> tris;
  for (const auto& tri : t.triangles()) {
    if (contains(tri, e)) continue;
    Triangle x = tri;
    for (Vertex& v : x)
      if (v == e.a || v == e.b) v = name;
    tris.push_back(make_triangle(x[0], x[1], x[2]));
  }
  auto labels = t.labels();
  labels.erase(e.a);
  labels.erase(e.b);
  labels[name] = std::move(merged);
  return Triangulation::validate(std::move(tris), std::move(labels), t.next_fresh());
}

int link_position(const Triangulation& t, Vertex v, Vertex x) {
  const auto& lk = t.link(v);
  auto it = std::find(lk.begin(), lk.end(), x);
  return it == lk.end() ? -1 : static_cast<int>(it - lk.begin());
}

std::vector<Vertex> link_interval(const Triangulation& t, Vertex v, Vertex from, Vertex to) {
  const auto& lk = t.link(v);
  const int d = static_cast<int>(lk.size());
  int i = link_position(t, v, from), j = link_position(t, v, to);
  if (i < 0 || j < 0) fail(ErrorCode::BadInterval, "interval endpoint not on link");
  std::vector<Vertex> out{lk[i]};
  while (i != j) {
    i = (i + 1) % d;
    out.push_back(lk[i]);
  }
  return out;
}

SplitResult split(const Triangulation& t, Vertex v, Vertex x1, Vertex xk, const std::optional<Label>& carve) {
  if (!t.has_vertex(v)) fail(ErrorCode::UnknownVertex, "split vertex " + std::to_string(v));
  if (x1 == xk) fail(ErrorCode::BadInterval, "x1 equals xk");
  if (link_position(t, v, x1) < 0 || link_position(t, v, xk) < 0)
    fail(ErrorCode::BadInterval, "interval endpoint not on the link of " + std::to_string(v));

  auto labels = t.labels();
  Label new_label;
  Vertex next_fresh = t.next_fresh();
  if (carve) {
    new_label = *carve;
    std::sort(new_label.begin(), new_label.end());
    if (new_label.empty()) fail(ErrorCode::LabelMismatch, "empty carve label");
    const Label& own = t.label(v);
    Label rest;
    std::set_difference(own.begin(), own.end(), new_label.begin(), new_label.end(), std::back_inserter(rest));
    Label outside;
    std::set_difference(new_label.begin(), new_label.end(), own.begin(), own.end(), std::back_inserter(outside));
    if (rest.empty() || rest.front() != v) fail(ErrorCode::LabelMismatch, "carve would rename the split vertex");
    for (int i : outside)
      if (t.vertex_containing(i)) fail(ErrorCode::LabelMismatch, "carve overlaps another vertex label");
    labels[v] = rest;
    next_fresh = std::max(next_fresh, new_label.back() + 1);
  } else {
    new_label = Label{next_fresh};
    ++next_fresh;
  }
  const Vertex nv = new_label.front();
  labels[nv] = new_label;

  const auto keep = link_interval(t, v, x1, xk);
  const auto give = link_interval(t, v, xk, x1);
  std::vector<Triangle> tris;
  for (const auto& tri : t.triangles())
    if (!contains(tri, v)) tris.push_back(tri);
  for (std::size_t i = 0; i + 1 < keep.size(); ++i) tris.push_back(make_triangle(v, keep[i], keep[i + 1]));
  for (std::size_t i = 0; i + 1 < give.size(); ++i) tris.push_back(make_triangle(nv, give[i], give[i + 1]));
  tris.push_back(make_triangle(v, nv, x1));
  tris.push_back(make_triangle(v, nv, xk));
  return {Triangulation::validate(std::move(tris), std::move(labels), next_fresh), nv};
}

Triangulation relabel(const Triangulation& t, const std::map<Vertex, Vertex>& rename) {
  auto name = [&](Vertex v) {
    auto it = rename.find(v);
    return it == rename.end() ? v : it->second;
  };
  std::vector<Triangle> tris;
  for (const auto& tri : t.triangles()) tris.push_back(make_triangle(name(tri[0]), name(tri[1]), name(tri[2])));
  std::map<Vertex, Label> labels;
  for (const auto& [v, l] : t.labels()) labels[name(v)] = Label{name(v)};
  Vertex next = 0;
  for (const auto& [v, l] : labels) next = std::max(next, v + 1);
  return Triangulation::validate(std::move(tris), std::move(labels), next);
}

namespace {

struct Compact {
  std::vector<Vertex> names;
  std::vector<std::array<int, 3>> tris;
};

Compact compact(const Triangulation& t) {
  Compact c;
  c.names = t.vertices();
  std::map<Vertex, int> idx;
  for (std::size_t i = 0; i < c.names.size(); ++i) idx[c.names[i]] = static_cast<int>(i);
  for (const auto& tri : t.triangles()) c.tris.push_back({idx[tri[0]], idx[tri[1]], idx[tri[2]]});
  return c;
}

}  // namespace

std::vector<std::uint8_t> canonical_code(const Triangulation& t) {
  Compact c = compact(t);
  return canonical_form(c.tris, static_cast<int>(c.names.size())).code;
}

std::optional<std::map<Vertex, Vertex>> find_isomorphism(const Triangulation& from, const Triangulation& to) {
  if (from.num_vertices() != to.num_vertices() || from.triangles().size() != to.triangles().size())
    return std::nullopt;
  Compact a = compact(from), b = compact(to);
  auto fa = canonical_form(a.tris, static_cast<int>(a.names.size()));
  auto fb = canonical_form(b.tris, static_cast<int>(b.names.size()));
  if (fa.code != fb.code) return std::nullopt;
  std::vector<Vertex> by_canon(b.names.size());
  for (std::size_t i = 0; i < b.names.size(); ++i) by_canon[fb.labeling[i]] = b.names[i];
  std::map<Vertex, Vertex> iso;
  for (std::size_t i = 0; i < a.names.size(); ++i) iso[a.names[i]] = by_canon[fa.labeling[i]];
  return iso;
}

std::vector<std::map<Vertex, Vertex>> all_isomorphisms(const Triangulation& from, const Triangulation& to) {
  std::vector<std::map<Vertex, Vertex>> out;
  if (from.num_vertices() != to.num_vertices() || from.triangles().size() != to.triangles().size()) return out;
  Compact a = compact(from), b = compact(to);
  auto fa = canonical_form(a.tris, static_cast<int>(a.names.size()));
  auto fb = canonical_form(b.tris, static_cast<int>(b.names.size()));
  if (fa.code != fb.code) return out;
  for (const auto& lb : fb.optimal_labelings) {
    std::vector<Vertex> by_canon(b.names.size());
    for (std::size_t i = 0; i < b.names.size(); ++i) by_canon[lb[i]] = b.names[i];
    std::map<Vertex, Vertex> iso;
    for (std::size_t i = 0; i < a.names.size(); ++i) iso[a.names[i]] = by_canon[fa.labeling[i]];
    if (std::find(out.begin(), out.end(), iso) == out.end()) out.push_back(std::move(iso));
  }
  return out;
}

bool isomorphic(const Triangulation& x, const Triangulation& y) { return find_isomorphism(x, y).has_value(); }

}  // namespace lamanspan
