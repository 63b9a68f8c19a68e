#include "lamanspan/spanning.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "lamanspan/error.hpp"
#include "lamanspan/surgery.hpp"

namespace lamanspan {

std::string span_class_name(SpanClass c) {
  switch (c) {
    case SpanClass::Disc: return "Disc";
    case SpanClass::Cylinder: return "Cylinder";
    case SpanClass::PinchedDisc: return "PinchedDisc";
    case SpanClass::DiscSum: return "DiscSum";
  }
  return "Disc";
}

SpanClass parse_span_class(const std::string& name) {
  if (name == "Disc") return SpanClass::Disc;
  if (name == "Cylinder") return SpanClass::Cylinder;
  if (name == "PinchedDisc") return SpanClass::PinchedDisc;
  if (name == "DiscSum" || name == "DiscSumAlongTriangle") return SpanClass::DiscSum;
  fail(ErrorCode::ParseError, "unknown span class '" + name + "'");
}

SpanningComplex make_span(std::vector<Triangle> triangles, SpanClass c) {
  SpanningComplex s;
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
  s.triangles = std::move(triangles);
  s.topology_class = c;
  return s;
}

std::vector<Edge> span_edges(const SpanningComplex& s) {
  std::vector<Edge> out(s.extra_edges);
  for (const auto& t : s.triangles) {
    out.push_back({t[0], t[1]});
    out.push_back({t[0], t[2]});
    out.push_back({t[1], t[2]});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> span_vertices(const SpanningComplex& s) {
  std::vector<Vertex> out;
  for (const auto& t : s.triangles) out.insert(out.end(), t.begin(), t.end());
  for (const auto& e : s.extra_edges) {
    out.push_back(e.a);
    out.push_back(e.b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_vertex_spanning(const Triangulation& host, const SpanningComplex& s) {
  return span_vertices(s) == host.vertices();
}

bool is_subcomplex(const Triangulation& host, const SpanningComplex& s) {
  for (const auto& t : s.triangles)
    if (!host.has_triangle(t)) return false;
  for (const auto& e : s.extra_edges)
    if (!host.has_edge(e)) return false;
  return true;
}

SurfaceShape analyse_shape(std::vector<Triangle> triangles) {
  SurfaceShape sh;
  std::sort(triangles.begin(), triangles.end());
  std::map<Edge, std::vector<std::size_t>> uses;
  std::map<Vertex, std::vector<std::pair<Vertex, Vertex>>> link_edges;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const auto& t = triangles[i];
    for (int k = 0; k < 3; ++k) {
      Vertex v = t[k], a = t[(k + 1) % 3], b = t[(k + 2) % 3];
      uses[make_edge(a, b)].push_back(i);
      link_edges[v].emplace_back(a, b);
    }
  }
  sh.vertices = static_cast<int>(link_edges.size());
  sh.edges = static_cast<int>(uses.size());
  sh.faces = static_cast<int>(triangles.size());
  sh.euler_characteristic = sh.vertices - sh.edges + sh.faces;

  for (const auto& [v, le] : link_edges) {
    std::map<Vertex, std::vector<Vertex>> g;
    for (auto [a, b] : le) {
      g[a].push_back(b);
      g[b].push_back(a);
    }
    bool bad_degree = false;
    for (const auto& [x, nb] : g)
      if (nb.size() > 2) bad_degree = true;
    // components, each classified as path or cycle
    std::set<Vertex> seen;
    int paths = 0, cycles = 0;
    for (const auto& [x, nb] : g) {
      if (seen.count(x)) continue;
      std::vector<Vertex> stack{x};
      seen.insert(x);
      int ends = 0;
      while (!stack.empty()) {
        Vertex y = stack.back();
        stack.pop_back();
        if (g[y].size() == 1) ++ends;
        for (Vertex z : g[y])
          if (seen.insert(z).second) stack.push_back(z);
      }
      if (ends == 0) ++cycles;
      else ++paths;
    }
    bool regular = !bad_degree && paths + cycles == 1;
    if (!regular) {
      sh.singular_vertices.push_back(v);
      if (!bad_degree && cycles == 0 && paths == 2) sh.pinched_vertices.push_back(v);
    }
  }

  // boundary components: connected components of the boundary-edge graph
  std::map<Vertex, std::vector<Vertex>> boundary;
  for (const auto& [e, u] : uses) {
    if (u.size() == 1) {
      boundary[e.a].push_back(e.b);
      boundary[e.b].push_back(e.a);
    }
  }
  std::set<Vertex> seen;
  for (const auto& [x, nb] : boundary) {
    if (seen.count(x)) continue;
    ++sh.boundary_components;
    std::vector<Vertex> stack{x};
    seen.insert(x);
    while (!stack.empty()) {
      Vertex y = stack.back();
      stack.pop_back();
      for (Vertex z : boundary[y])
        if (seen.insert(z).second) stack.push_back(z);
    }
  }

  // dual connectivity and orientation propagation through interior edges
  if (!triangles.empty()) {
    std::vector<std::array<Vertex, 3>> orient(triangles.size());
    std::vector<char> done(triangles.size(), 0);
    std::queue<std::size_t> q;
    orient[0] = triangles[0];
    done[0] = 1;
    q.push(0);
    std::size_t reached = 1;
    bool orientable = true;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      const auto o = orient[i];
      for (int k = 0; k < 3; ++k) {
        Vertex p = o[k], r = o[(k + 1) % 3];
        for (std::size_t j : uses[make_edge(p, r)]) {
          if (j == i) continue;
          std::array<Vertex, 3> want{r, p, opposite(triangles[j], make_edge(p, r))};
          if (!done[j]) {
            orient[j] = want;
            done[j] = 1;
            ++reached;
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
    sh.edge_connected = reached == triangles.size();
    sh.orientable = orientable;
  }
  return sh;
}

bool is_disc(const std::vector<Triangle>& triangles) {
  auto sh = analyse_shape(triangles);
  return !triangles.empty() && sh.singular_vertices.empty() && sh.edge_connected && sh.euler_characteristic == 1 &&
         sh.boundary_components == 1;
}

bool is_cylinder(const std::vector<Triangle>& triangles) {
  auto sh = analyse_shape(triangles);
  return !triangles.empty() && sh.singular_vertices.empty() && sh.edge_connected && sh.euler_characteristic == 0 &&
         sh.boundary_components == 2 && sh.orientable;
}

namespace {

// Splits the pinch vertex into one copy per link component.
std::vector<Triangle> unpinch(const std::vector<Triangle>& triangles, Vertex v) {
  std::map<Vertex, std::vector<Vertex>> g;
  Vertex fresh = v;
  for (const auto& t : triangles) {
    for (Vertex x : t) fresh = std::max(fresh, x);
    if (!contains(t, v)) continue;
    Vertex a = -1, b = -1;
    for (Vertex x : t) {
      if (x == v) continue;
      (a < 0 ? a : b) = x;
    }
    g[a].push_back(b);
    g[b].push_back(a);
  }
  ++fresh;
  std::set<Vertex> first;
  std::vector<Vertex> stack{g.begin()->first};
  first.insert(stack.back());
  while (!stack.empty()) {
    Vertex y = stack.back();
    stack.pop_back();
    for (Vertex z : g[y])
      if (first.insert(z).second) stack.push_back(z);
  }
  std::vector<Triangle> out;
  for (auto t : triangles) {
    if (contains(t, v)) {
      bool in_first = false;
      for (Vertex x : t)
        if (x != v && first.count(x)) in_first = true;
      if (!in_first) {
        for (Vertex& x : t)
          if (x == v) x = fresh;
        t = make_triangle(t[0], t[1], t[2]);
      }
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace

std::string shape_violation(const Triangulation& host, const SpanningComplex& s) {
  if (!is_subcomplex(host, s)) return "not a subcomplex of the host";
  switch (s.topology_class) {
    case SpanClass::Disc:
      if (!s.extra_edges.empty()) return "disc with extra edges";
      if (!is_disc(s.triangles)) return "triangles do not form a disc";
      return {};
    case SpanClass::Cylinder:
      if (!s.extra_edges.empty()) return "cylinder with extra edges";
      if (!is_cylinder(s.triangles)) return "triangles do not form a cylinder";
      return {};
    case SpanClass::PinchedDisc: {
      if (!s.extra_edges.empty()) return "pinched disc with extra edges";
      if (!s.singular) return "pinched disc without a singular vertex";
      auto sh = analyse_shape(s.triangles);
      if (sh.singular_vertices != std::vector<Vertex>{*s.singular} || sh.pinched_vertices != sh.singular_vertices)
        return "singular vertex set is not exactly the declared pinch";
      if (!is_disc(unpinch(s.triangles, *s.singular))) return "unpinching does not give a disc";
      return {};
    }
    case SpanClass::DiscSum: {
      if (!s.cap) return "disc sum without a cap triangle";
      const Triangle cap = *s.cap;
      auto sides = triangle_sides(host, cap);
      if (!sides) return "cap does not separate the host";
      const std::vector<Edge> cap_edges{{cap[0], cap[1]}, {cap[0], cap[2]}, {cap[1], cap[2]}};
      for (const auto* side : {&sides->first, &sides->second}) {
        std::vector<Triangle> disc{cap};
        for (const auto& t : s.triangles)
          if (std::binary_search(side->begin(), side->end(), t)) disc.push_back(t);
        if (!is_disc(disc)) return "a side of the cap is not a disc";
      }
      std::vector<Edge> uncovered;
      for (const auto& e : cap_edges) {
        bool covered = false;
        for (const auto& t : s.triangles)
          if (contains(t, e)) covered = true;
        if (!covered) uncovered.push_back(e);
      }
      if (uncovered != s.extra_edges) return "extra edges are not exactly the uncovered cap edges";
      if (s.extra_edges.size() > 2) return "more than two triangle-free edges";
      return {};
    }
  }
  return "unknown class";
}

std::optional<Triangle> first_missed_triangle(const Triangulation& host, const SpanningComplex& s) {
  auto edges = span_edges(s);
  for (const auto& t : host.triangles()) {
    bool hit = false;
    for (const Edge& e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}})
      if (std::binary_search(edges.begin(), edges.end(), e)) hit = true;
    if (!hit) return t;
  }
  return std::nullopt;
}

ExtendibilityCertificate check_extendible(const Triangulation& host, const SpanningComplex& s) {
  if (!is_subcomplex(host, s)) fail(ErrorCode::BadStructure, "spanning complex is not a subcomplex of the host");
  auto edges = span_edges(s);
  ExtendibilityCertificate cert;
  for (const auto& t : host.triangles()) {
    std::optional<Edge> hit;
    for (const Edge& e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}})
      if (!hit && std::binary_search(edges.begin(), edges.end(), e)) hit = e;
    if (!hit)
      fail(ErrorCode::MissedTriangle,
           "triangle " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]));
    cert.hit_map.emplace_back(t, *hit);
  }
  return cert;
}

std::string verify_span(const Triangulation& host, const SpanningComplex& s) {
  if (auto why = shape_violation(host, s); !why.empty()) return why;
  if (!is_vertex_spanning(host, s)) return "not vertex spanning";
  if (auto t = first_missed_triangle(host, s))
    return "host triangle " + std::to_string((*t)[0]) + " " + std::to_string((*t)[1]) + " " +
           std::to_string((*t)[2]) + " has no edge in the complex";
  return {};
}

SpanningComplex rename_span(const SpanningComplex& s, const std::map<Vertex, Vertex>& rename) {
  auto name = [&](Vertex v) {
    auto it = rename.find(v);
    return it == rename.end() ? v : it->second;
  };
  SpanningComplex out;
  for (const auto& t : s.triangles) out.triangles.push_back(make_triangle(name(t[0]), name(t[1]), name(t[2])));
  std::sort(out.triangles.begin(), out.triangles.end());
  for (const auto& e : s.extra_edges) out.extra_edges.push_back(make_edge(name(e.a), name(e.b)));
  std::sort(out.extra_edges.begin(), out.extra_edges.end());
  out.topology_class = s.topology_class;
  if (s.singular) out.singular = name(*s.singular);
  if (s.cap) out.cap = make_triangle(name((*s.cap)[0]), name((*s.cap)[1]), name((*s.cap)[2]));
  return out;
}

}  // namespace lamanspan
