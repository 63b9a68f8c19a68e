#include "lamanspan/generate.hpp"

namespace lamanspan {

SplitRecord random_split(const Triangulation& t, std::mt19937_64& rng) {
  const auto vs = t.vertices();
  const Vertex v = vs[rng() % vs.size()];
  const auto& lk = t.link(v);
  const std::size_t d = lk.size();
  const std::size_t pick = rng() % (d * (d - 1));
  const std::size_t i = pick / (d - 1);
  std::size_t j = pick % (d - 1);
  if (j >= i) ++j;
  return {v, lk[i], lk[j], Label{t.next_fresh()}};
}

GeneratedInstance generate_instance(const Catalog& catalog, SurfaceClass surface, std::size_t n_splits,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& entries = catalog.entries(surface);
  const CatalogEntry& entry = entries[rng() % entries.size()];
  GeneratedInstance g{&entry, {entry.complex, {}}, entry.complex};
  for (std::size_t s = 0; s < n_splits; ++s) {
    SplitRecord r = random_split(g.complex, rng);
    g.complex = apply_split(g.complex, r);
    g.trace.splits.push_back(std::move(r));
  }
  g.complex = Triangulation::validate(g.complex.triangles());
  return g;
}

}  // namespace lamanspan
