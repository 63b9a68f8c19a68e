#pragma once

#include <cstdint>
#include <random>

#include "lamanspan/catalog.hpp"
#include "lamanspan/reduction.hpp"

namespace lamanspan {

// Uniform vertex, then uniform ordered pair of distinct link positions.
SplitRecord random_split(const Triangulation& t, std::mt19937_64& rng);

struct GeneratedInstance {
  const CatalogEntry* entry = nullptr;
  ReductionTrace trace;  // the entry plus the random splits applied to it
  Triangulation complex;
};

// A uniformly chosen catalog entry of the surface followed by n_splits
// random splits; all vertices of the result carry singleton labels.
GeneratedInstance generate_instance(const Catalog& catalog, SurfaceClass surface, std::size_t n_splits,
                                    std::uint64_t seed);

}  // namespace lamanspan
