// Regenerates the catalog of irreducible triangulations by exhaustive
// enumeration: starting from one triangulation of the surface, close the set
// of isomorphism classes with at most --max-vertices vertices under diagonal
// flips, vertex splits and edge contractions, then keep the irreducible ones.
//
// Flip connectivity of equal-size triangulations of the sphere, projective
// plane, torus and Klein bottle makes each layer complete; the loader
// re-verifies every written entry independently of this tool.

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "lamanspan/canonical.hpp"
#include "lamanspan/catalog.hpp"
#include "lamanspan/complex.hpp"
#include "lamanspan/io.hpp"

namespace {

using Tri = std::array<int, 3>;
using Code = std::string;

struct Surface {
  int n = 0;
  std::vector<Tri> tris;
};

Code encode(const std::vector<Tri>& tris, int n) {
  auto cf = lamanspan::canonical_form(tris, n);
  return Code(cf.code.begin(), cf.code.end());
}

Surface decode(const Code& code) {
  Surface s;
  for (std::size_t i = 0; i < code.size(); i += 3) {
    Tri t{static_cast<unsigned char>(code[i]), static_cast<unsigned char>(code[i + 1]),
          static_cast<unsigned char>(code[i + 2])};
    s.tris.push_back(t);
    s.n = std::max({s.n, t[0] + 1, t[1] + 1, t[2] + 1});
  }
  return s;
}

struct Local {
  int n;
  std::vector<std::vector<char>> adj;
  std::vector<std::vector<int>> links;
  std::map<std::pair<int, int>, std::vector<int>> apexes;
};

Local analyse(const Surface& s) {
  Local l;
  l.n = s.n;
  l.adj.assign(s.n, std::vector<char>(s.n, 0));
  std::vector<std::vector<std::pair<int, int>>> link_edges(s.n);
  for (const auto& t : s.tris) {
    for (int i = 0; i < 3; ++i) {
      int a = t[i], b = t[(i + 1) % 3], c = t[(i + 2) % 3];
      l.adj[a][b] = l.adj[b][a] = 1;
      l.apexes[{std::min(a, b), std::max(a, b)}].push_back(c);
      link_edges[a].emplace_back(b, c);
    }
  }
  l.links.resize(s.n);
  for (int v = 0; v < s.n; ++v) {
    std::map<int, std::vector<int>> nb;
    for (auto [b, c] : link_edges[v]) {
      nb[b].push_back(c);
      nb[c].push_back(b);
    }
    int start = nb.begin()->first;
    std::vector<int> cyc{start};
    int prev = start, cur = nb[start][0];
    while (cur != start) {
      cyc.push_back(cur);
      const auto& two = nb[cur];
      int nxt = two[0] == prev ? two[1] : two[0];
      prev = cur;
      cur = nxt;
    }
    l.links[v] = cyc;
  }
  return l;
}

bool contractible(const Local& l, int a, int b) {
  if (l.n <= 4) return false;
  int common = 0;
  for (int w = 0; w < l.n; ++w)
    if (w != a && w != b && l.adj[a][w] && l.adj[b][w]) ++common;
  return common == 2;
}

bool irreducible(const Surface& s) {
  Local l = analyse(s);
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b)
      if (l.adj[a][b] && contractible(l, a, b)) return false;
  return true;
}

template <typename Emit>
void for_each_move(const Surface& s, int max_vertices, Emit&& emit) {
  Local l = analyse(s);
  // flips
  for (const auto& [e, ap] : l.apexes) {
    auto [a, b] = e;
    int c = ap[0], d = ap[1];
    if (l.adj[c][d]) continue;
    if (l.links[a].size() <= 3 || l.links[b].size() <= 3) continue;
    std::vector<Tri> out;
    for (const auto& t : s.tris) {
      bool has_a = t[0] == a || t[1] == a || t[2] == a;
      bool has_b = t[0] == b || t[1] == b || t[2] == b;
      if (has_a && has_b) continue;
      out.push_back(t);
    }
    out.push_back({a, c, d});
    out.push_back({b, c, d});
    emit(out, s.n);
  }
  // splits (unordered endpoint pairs; swapping endpoints gives an isomorphic result)
  if (s.n + 1 <= max_vertices) {
    for (int v = 0; v < s.n; ++v) {
      const auto& cyc = l.links[v];
      const int d = static_cast<int>(cyc.size());
      for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
          const int nv = s.n;
          std::vector<Tri> out;
          for (const auto& t : s.tris)
            if (t[0] != v && t[1] != v && t[2] != v) out.push_back(t);
          for (int k = i; k < j; ++k) out.push_back({v, cyc[k], cyc[k + 1]});
          for (int k = j; k != i; k = (k + 1) % d) out.push_back({nv, cyc[k], cyc[(k + 1) % d]});
          out.push_back({v, nv, cyc[i]});
          out.push_back({v, nv, cyc[j]});
          emit(out, s.n + 1);
        }
      }
    }
  }
  // contractions
  for (int a = 0; a < s.n; ++a) {
    for (int b = a + 1; b < s.n; ++b) {
      if (!l.adj[a][b] || !contractible(l, a, b)) continue;
      const int last = s.n - 1;
      std::vector<Tri> out;
      for (auto t : s.tris) {
        bool has_a = t[0] == a || t[1] == a || t[2] == a;
        bool has_b = t[0] == b || t[1] == b || t[2] == b;
        if (has_a && has_b) continue;
        for (int& x : t) {
          if (x == b) x = a;
        }
        for (int& x : t) {
          if (x == last) x = b;
        }
        out.push_back(t);
      }
      emit(out, s.n - 1);
    }
  }
}

std::vector<Tri> tris_of(const lamanspan::Triangulation& t) {
  // compact relabeling 0..n-1 in name order
  std::map<int, int> index;
  for (int v : t.vertices()) index.emplace(v, static_cast<int>(index.size()));
  std::vector<Tri> out;
  for (const auto& tri : t.triangles()) out.push_back({index[tri[0]], index[tri[1]], index[tri[2]]});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate irreducible triangulations and write catalog entries"};
  std::string surface;
  int max_vertices = 0;
  std::string out_dir;
  app.add_option("surface", surface, "sphere | rp2 | torus | klein")->required();
  app.add_option("--max-vertices", max_vertices, "largest vertex count to enumerate")->required();
  app.add_option("--out", out_dir, "catalog root directory (entries go to <out>/<surface>/)");
  CLI11_PARSE(app, argc, argv);

  lamanspan::Triangulation start = lamanspan::catalog_seed_triangulation(lamanspan::parse_surface_name(surface));
  auto t0 = std::chrono::steady_clock::now();

  std::map<int, std::unordered_set<Code>> layers;
  std::vector<std::pair<int, Code>> work;
  auto insert = [&](const std::vector<Tri>& tris, int n) {
    if (n > max_vertices) return;
    Code c = encode(tris, n);
    if (layers[n].insert(c).second) work.emplace_back(n, std::move(c));
  };
  {
    auto tris = tris_of(start);
    insert(tris, static_cast<int>(start.vertices().size()));
  }
  while (!work.empty()) {
    auto [n, code] = std::move(work.back());
    work.pop_back();
    for_each_move(decode(code), max_vertices, insert);
  }

  std::vector<Code> irreducibles;
  for (const auto& [n, layer] : layers) {
    std::vector<Code> here;
    for (const auto& c : layer)
      if (irreducible(decode(c))) here.push_back(c);
    std::sort(here.begin(), here.end());
    std::cerr << surface << " n=" << n << ": " << layer.size() << " triangulations, " << here.size()
              << " irreducible\n";
    irreducibles.insert(irreducibles.end(), here.begin(), here.end());
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "total irreducible: " << irreducibles.size() << " (" << secs << " s)\n";

  if (!out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(out_dir) / surface;
    fs::create_directories(dir);
    std::map<int, int> per_size;
    for (const auto& c : irreducibles) {
      Surface s = decode(c);
      std::vector<lamanspan::Triangle> tris;
      for (const auto& t : s.tris) tris.push_back(lamanspan::make_triangle(t[0], t[1], t[2]));
      auto tri = lamanspan::Triangulation::validate(tris);
      int idx = per_size[s.n]++;
      std::string name = surface + "_" + std::to_string(s.n) + "_" + std::to_string(idx);
      lamanspan::CatalogEntry entry = lamanspan::make_entry(name, tri);
      lamanspan::write_entry_file(dir / (name + ".tri"), entry);
    }
  }
  return 0;
}
