#include "lamanspan/surgery.hpp"

#include <algorithm>
#include <map>

#include "lamanspan/error.hpp"

namespace lamanspan {

std::optional<std::pair<std::vector<Triangle>, std::vector<Triangle>>> triangle_sides(const Triangulation& host,
                                                                                      const Triangle& cap) {
  const Edge ab{cap[0], cap[1]}, ac{cap[0], cap[2]}, bc{cap[1], cap[2]};
  if (!host.has_edge(ab) || !host.has_edge(ac) || !host.has_edge(bc) || host.has_triangle(cap)) return std::nullopt;
  const auto& tris = host.triangles();
  std::map<Edge, std::vector<std::size_t>> by_edge;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& t = tris[i];
    for (const Edge& e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) by_edge[e].push_back(i);
  }
  std::vector<int> side(tris.size(), -1);
  int components = 0;
  for (std::size_t s = 0; s < tris.size(); ++s) {
    if (side[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    side[s] = components;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      const auto& t = tris[i];
      for (const Edge& e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) {
        if (e == ab || e == ac || e == bc) continue;
        for (std::size_t j : by_edge[e]) {
          if (side[j] < 0) {
            side[j] = components;
            stack.push_back(j);
          }
        }
      }
    }
    ++components;
  }
  if (components != 2) return std::nullopt;
  std::pair<std::vector<Triangle>, std::vector<Triangle>> out;
  for (std::size_t i = 0; i < tris.size(); ++i) (side[i] == 0 ? out.first : out.second).push_back(tris[i]);
  return out;
}

CutHalves cut_along_triangle(const Triangulation& t, const Triangle& raw_cap) {
  const Triangle cap = make_triangle(raw_cap[0], raw_cap[1], raw_cap[2]);
  for (const Edge& e : {Edge{cap[0], cap[1]}, Edge{cap[0], cap[2]}, Edge{cap[1], cap[2]}})
    if (!t.has_edge(e)) fail(ErrorCode::NotEmptyTriangle, "cap edge missing from complex");
  if (t.has_triangle(cap)) fail(ErrorCode::NotEmptyTriangle, "cap is a face of the complex");
  auto sides = triangle_sides(t, cap);
  if (!sides) fail(ErrorCode::NotSeparating, "cap cycle does not separate the surface into two sides");
  auto make_half = [&](std::vector<Triangle> tris) {
    tris.push_back(cap);
    std::map<Vertex, Label> labels;
    for (const auto& tri : tris)
      for (Vertex v : tri) labels[v] = t.label(v);
    return Triangulation::validate(std::move(tris), std::move(labels), t.next_fresh());
  };
  return {make_half(sides->first), make_half(sides->second)};
}

Triangulation glue_along_triangle(const Triangulation& left, const Triangulation& right, const Triangle& raw_cap) {
  const Triangle cap = make_triangle(raw_cap[0], raw_cap[1], raw_cap[2]);
  std::vector<Triangle> tris;
  for (const auto* half : {&left, &right})
    for (const auto& tri : half->triangles())
      if (tri != cap) tris.push_back(tri);
  std::map<Vertex, Label> labels(left.labels());
  for (const auto& [v, l] : right.labels()) labels[v] = l;
  return Triangulation::validate(std::move(tris), std::move(labels), std::max(left.next_fresh(), right.next_fresh()));
}

}  // namespace lamanspan
