// Independent reference implementations used by the tests. Nothing here calls
// into the library's algorithms; inputs are plain triangle and edge lists.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Tri = std::array<int, 3>;
using EdgeList = std::vector<std::pair<int, int>>;

inline std::vector<Tri> tetrahedron() { return {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}; }

// {i, i+1, i+3} and {i, i+2, i+3} mod 7
inline std::vector<Tri> torus7() {
  std::vector<Tri> out;
  for (int i = 0; i < 7; ++i) {
    Tri a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

// Iterated stellar subdivision of the face {1, 2, t+3} by t+4, for t = 1..steps.
inline std::vector<Tri> stacked_sphere(int steps) {
  std::vector<Tri> tris = tetrahedron();
  for (int t = 1; t <= steps; ++t) {
    const int c = t + 3, w = t + 4;
    tris.erase(std::find(tris.begin(), tris.end(), Tri{1, 2, c}));
    tris.push_back({1, 2, w});
    tris.push_back({1, c, w});
    tris.push_back({2, c, w});
  }
  return tris;
}

struct Topology {
  int chi = 0;
  bool orientable = false;
};

// Euler characteristic by counting; orientability by propagating a cyclic
// orientation across shared edges.
inline Topology topology(const std::vector<Tri>& tris) {
  std::set<int> verts;
  std::set<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    const auto& t = tris[i];
    for (int k = 0; k < 3; ++k) {
      verts.insert(t[k]);
      int a = t[k], b = t[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      edges.insert({a, b});
      by_edge[{a, b}].push_back(i);
    }
  }
  Topology out;
  out.chi = static_cast<int>(verts.size()) - static_cast<int>(edges.size()) + static_cast<int>(tris.size());

  // orient[i] is a cyclic order of tris[i]; neighbors must traverse a shared
  // edge in opposite directions
  std::vector<std::array<int, 3>> orient(tris.size());
  std::vector<char> done(tris.size(), 0);
  auto traverses = [](const std::array<int, 3>& o, int a, int b) {
    for (int k = 0; k < 3; ++k)
      if (o[k] == a && o[(k + 1) % 3] == b) return true;
    return false;
  };
  out.orientable = true;
  for (std::size_t s = 0; s < tris.size(); ++s) {
    if (done[s]) continue;
    orient[s] = tris[s];
    done[s] = 1;
    std::vector<int> stack{static_cast<int>(s)};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        int a = orient[i][k], b = orient[i][(k + 1) % 3];
        auto key = std::minmax(a, b);
        for (int j : by_edge[{key.first, key.second}]) {
          if (j == i) continue;
          if (!done[j]) {
            const int c = tris[j][0] + tris[j][1] + tris[j][2] - a - b;
            orient[j] = {b, a, c};
            done[j] = 1;
            stack.push_back(j);
          } else if (traverses(orient[j], a, b)) {
            out.orientable = false;
          }
        }
      }
    }
  }
  return out;
}

inline std::set<std::pair<int, int>> edge_set(const std::vector<Tri>& tris) {
  std::set<std::pair<int, int>> e;
  for (const auto& t : tris) {
    e.insert({t[0], t[1]});
    e.insert({t[0], t[2]});
    e.insert({t[1], t[2]});
  }
  return e;
}

// All vertex triples spanning three edges but no face.
inline std::vector<Tri> empty_triangles(const std::vector<Tri>& tris) {
  auto e = edge_set(tris);
  std::set<Tri> faces(tris.begin(), tris.end());
  std::set<int> vs;
  for (const auto& t : tris) vs.insert(t.begin(), t.end());
  std::vector<int> v(vs.begin(), vs.end());
  std::vector<Tri> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!e.count({v[i], v[j]})) continue;
      for (std::size_t k = j + 1; k < v.size(); ++k)
        if (e.count({v[i], v[k]}) && e.count({v[j], v[k]}) && !faces.count({v[i], v[j], v[k]}))
          out.push_back({v[i], v[j], v[k]});
    }
  return out;
}

// ---- graphs as bitmask adjacency on vertices 0..n-1 ----

struct SmallGraph {
  int n = 0;
  EdgeList edges;
};

inline bool connected(const SmallGraph& g) {
  if (g.n <= 1) return true;
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : g.edges) parent[find(a)] = find(b);
  for (int v = 1; v < g.n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

// Canonical adjacency bitmask of a graph given as a bitmask over `pairs`:
// the least relabeled mask over all relabelings that order vertices by
// (degree, sorted neighbor degrees).
inline std::uint32_t canonical_mask(int n, const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask) {
  std::vector<int> index(n * n, -1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    index[pairs[k].first * n + pairs[k].second] = static_cast<int>(k);
    index[pairs[k].second * n + pairs[k].first] = static_cast<int>(k);
  }
  std::vector<std::vector<int>> nb(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (mask >> k & 1) {
      nb[pairs[k].first].push_back(pairs[k].second);
      nb[pairs[k].second].push_back(pairs[k].first);
    }
  std::vector<std::vector<int>> inv(n);
  for (int v = 0; v < n; ++v) {
    inv[v].push_back(static_cast<int>(nb[v].size()));
    std::vector<int> d;
    for (int u : nb[v]) d.push_back(static_cast<int>(nb[u].size()));
    std::sort(d.begin(), d.end());
    inv[v].insert(inv[v].end(), d.begin(), d.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return inv[x] < inv[y]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    cells.emplace_back(i, j);
    std::sort(order.begin() + i, order.begin() + j);
    i = j;
  }
  std::uint32_t best = ~std::uint32_t{0};
  std::vector<int> pos(n);
  for (;;) {
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) m |= std::uint32_t{1} << index[pos[pairs[k].first] * n + pos[pairs[k].second]];
    best = std::min(best, m);
    std::size_t c = 0;
    for (; c < cells.size(); ++c)
      if (std::next_permutation(order.begin() + cells[c].first, order.begin() + cells[c].second)) break;
    if (c == cells.size()) break;
  }
  return best;
}

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a) p.emplace_back(a, b);
  return p;
}

// One representative per isomorphism class of graphs on n vertices, built by
// adding a vertex with every neighbor set to each class on n-1 vertices.
inline std::vector<SmallGraph> all_graphs(int n) {
  std::vector<std::uint32_t> classes{0};  // n = 1
  for (int m = 2; m <= n; ++m) {
    auto prev_pairs = all_pairs(m - 1);
    auto pairs = all_pairs(m);
    std::set<std::uint32_t> next;
    for (std::uint32_t c : classes) {
      std::uint32_t lifted = 0;
      for (std::size_t k = 0; k < prev_pairs.size(); ++k)
        if (c >> k & 1) {
          auto it = std::find(pairs.begin(), pairs.end(), prev_pairs[k]);
          lifted |= std::uint32_t{1} << (it - pairs.begin());
        }
      for (std::uint32_t nb = 0; nb < (1u << (m - 1)); ++nb) {
        std::uint32_t g = lifted;
        for (int a = 0; a < m - 1; ++a)
          if (nb >> a & 1) {
            auto it = std::find(pairs.begin(), pairs.end(), std::pair{a, m - 1});
            g |= std::uint32_t{1} << (it - pairs.begin());
          }
        next.insert(canonical_mask(m, pairs, g));
      }
    }
    classes.assign(next.begin(), next.end());
  }
  auto pairs = all_pairs(n);
  std::vector<SmallGraph> out;
  for (std::uint32_t c : classes) {
    SmallGraph g{n, {}};
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (c >> k & 1) g.edges.push_back(pairs[k]);
    out.push_back(std::move(g));
  }
  return out;
}

// Exhaustive search for a spanning Laman subgraph: 2n-3 edges with at most
// 2|X|-3 edges inside every vertex set X of size >= 2.
inline bool has_laman_subgraph(const SmallGraph& g) {
  if (g.n == 1) return true;
  const int need = 2 * g.n - 3;
  if (static_cast<int>(g.edges.size()) < need) return false;
  std::vector<int> inside(1u << g.n, 0);
  std::vector<int> bound(1u << g.n);
  for (std::uint32_t x = 0; x < (1u << g.n); ++x) bound[x] = 2 * __builtin_popcount(x) - 3;
  auto dfs = [&](auto&& self, std::size_t from, int chosen) -> bool {
    if (chosen == need) return true;
    if (static_cast<int>(g.edges.size() - from) < need - chosen) return false;
    for (std::size_t k = from; k < g.edges.size(); ++k) {
      const std::uint32_t uv = (1u << g.edges[k].first) | (1u << g.edges[k].second);
      bool ok = true;
      for (std::uint32_t x = 0; x < (1u << g.n); ++x)
        if ((x & uv) == uv && inside[x] + 1 > bound[x]) ok = false;
      if (!ok) continue;
      for (std::uint32_t x = 0; x < (1u << g.n); ++x)
        if ((x & uv) == uv) ++inside[x];
      const bool found = self(self, k + 1, chosen + 1);
      for (std::uint32_t x = 0; x < (1u << g.n); ++x)
        if ((x & uv) == uv) --inside[x];
      if (found) return true;
    }
    return false;
  };
  return dfs(dfs, 0, 0);
}

// Largest (2,3)-sparse edge count by exhaustive subsets (tiny graphs only).
inline bool is_sparse_2_3(int n, const EdgeList& edges) {
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    int k = __builtin_popcount(x);
    if (k < 2) continue;
    int m = 0;
    for (auto [a, b] : edges)
      if ((x >> a & 1) && (x >> b & 1)) ++m;
    if (m > 2 * k - 3) return false;
  }
  return true;
}

// Rank of the rigidity matrix at a random placement modulo the prime 2^31-1,
// by plain Gaussian elimination.
inline int rigidity_rank(int n, const EdgeList& edges, std::uint64_t seed) {
  constexpr std::int64_t p = 2147483647;
  std::mt19937_64 rng(seed);
  std::vector<std::array<std::int64_t, 2>> pos(n);
  for (auto& q : pos) q = {static_cast<std::int64_t>(rng() % p), static_cast<std::int64_t>(rng() % p)};
  std::vector<std::vector<std::int64_t>> m;
  for (auto [a, b] : edges) {
    std::vector<std::int64_t> row(2 * n, 0);
    for (int c = 0; c < 2; ++c) {
      std::int64_t d = ((pos[a][c] - pos[b][c]) % p + p) % p;
      row[2 * a + c] = d;
      row[2 * b + c] = (p - d) % p;
    }
    m.push_back(row);
  }
  auto power = [&](std::int64_t x, std::int64_t e) {
    std::int64_t r = 1;
    for (x %= p; e; e >>= 1, x = x * x % p)
      if (e & 1) r = r * x % p;
    return r;
  };
  int rank = 0;
  for (int col = 0; col < 2 * n && rank < static_cast<int>(m.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t inv = power(m[rank][col], p - 2);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || !m[r][col]) continue;
      const std::int64_t f = m[r][col] * inv % p;
      for (int c = col; c < 2 * n; ++c) m[r][c] = ((m[r][c] - f * m[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
