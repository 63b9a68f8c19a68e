#include "lamanspan/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace lamanspan {

namespace {

struct Adjacency {
  // neighbor[t][i]: triangle across the edge opposite corner i of t;
  // apex[t][i]: the vertex of that neighbor not on the shared edge.
  std::vector<std::array<int, 3>> neighbor;
  std::vector<std::array<int, 3>> apex;
};

Adjacency build_adjacency(std::span<const std::array<int, 3>> tris, int n) {
  std::unordered_map<long, std::vector<std::pair<int, int>>> by_edge;
  by_edge.reserve(tris.size() * 3);
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
    for (int i = 0; i < 3; ++i) {
      int a = tris[t][(i + 1) % 3], b = tris[t][(i + 2) % 3];
      if (a > b) std::swap(a, b);
      by_edge[static_cast<long>(a) * n + b].emplace_back(t, i);
    }
  }
  Adjacency adj;
  adj.neighbor.assign(tris.size(), {-1, -1, -1});
  adj.apex.assign(tris.size(), {-1, -1, -1});
  for (auto& [key, uses] : by_edge) {
    if (uses.size() != 2) throw std::invalid_argument("canonical_form: edge not in exactly two triangles");
    auto [t0, i0] = uses[0];
    auto [t1, i1] = uses[1];
    adj.neighbor[t0][i0] = t1;
    adj.apex[t0][i0] = tris[t1][i1];
    adj.neighbor[t1][i1] = t0;
    adj.apex[t1][i1] = tris[t0][i0];
  }
  return adj;
}

int corner_of(const std::array<int, 3>& tri, int v) {
  for (int i = 0; i < 3; ++i)
    if (tri[i] == v) return i;
  return -1;
}

}  // namespace

CanonicalForm canonical_form(std::span<const std::array<int, 3>> tris, int n) {
  if (n > 255) throw std::invalid_argument("canonical_form: more than 255 vertices");
  const int f = static_cast<int>(tris.size());
  Adjacency adj = build_adjacency(tris, n);

  std::vector<int> degree(n, 0);
  for (const auto& t : tris)
    for (int v : t) ++degree[v];

  std::vector<std::tuple<int, int, int, int>> flags;  // triangle, a, b, c
  std::tuple<int, int, int> best_key{n + 1, n + 1, n + 1};
  for (int t = 0; t < f; ++t) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
      int a = tris[t][p[0]], b = tris[t][p[1]], c = tris[t][p[2]];
      std::tuple<int, int, int> key{degree[a], degree[b], degree[c]};
      if (key < best_key) {
        best_key = key;
        flags.clear();
      }
      if (key == best_key) flags.emplace_back(t, a, b, c);
    }
  }

  CanonicalForm best;
  std::vector<int> label(n);
  std::vector<char> visited(f);
  std::vector<std::array<int, 4>> queue;
  queue.reserve(f);
  std::vector<std::array<std::uint8_t, 3>> relabeled(f);
  std::vector<std::uint8_t> code(3 * f);

  for (const auto& [t0, a0, b0, c0] : flags) {
    std::fill(label.begin(), label.end(), -1);
    std::fill(visited.begin(), visited.end(), 0);
    queue.clear();
    label[a0] = 0;
    label[b0] = 1;
    label[c0] = 2;
    int next = 3;
    visited[t0] = 1;
    queue.push_back({t0, a0, b0, c0});
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [t, a, b, c] = queue[head];
      const int edges[3][2] = {{a, b}, {b, c}, {c, a}};
      const int opposite[3] = {c, a, b};
      for (int k = 0; k < 3; ++k) {
        int i = corner_of(tris[t], opposite[k]);
        int u = adj.neighbor[t][i];
        int r = adj.apex[t][i];
        if (label[r] < 0) label[r] = next++;
        if (!visited[u]) {
          visited[u] = 1;
          queue.push_back({u, edges[k][1], edges[k][0], r});
        }
      }
    }
    if (next != n || static_cast<int>(queue.size()) != f)
      throw std::invalid_argument("canonical_form: surface is not connected");
    for (int t = 0; t < f; ++t) {
      std::array<std::uint8_t, 3> x{static_cast<std::uint8_t>(label[tris[t][0]]),
                                    static_cast<std::uint8_t>(label[tris[t][1]]),
                                    static_cast<std::uint8_t>(label[tris[t][2]])};
      std::sort(x.begin(), x.end());
      relabeled[t] = x;
    }
    std::sort(relabeled.begin(), relabeled.end());
    for (int t = 0; t < f; ++t)
      for (int k = 0; k < 3; ++k) code[3 * t + k] = relabeled[t][k];
    if (best.code.empty() || code < best.code) {
      best.code = code;
      best.labeling = label;
      best.optimal_labelings.clear();
    }
    if (code == best.code) best.optimal_labelings.push_back(label);
  }
  return best;
}

}  // namespace lamanspan
