#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lamanspan/complex.hpp"

namespace lamanspan {

// Host triangles on either side of the 3-cycle `cap`, found by walking the
// dual graph without crossing cap edges. nullopt unless exactly two sides.
// The first side holds the lexicographically least host triangle.
std::optional<std::pair<std::vector<Triangle>, std::vector<Triangle>>> triangle_sides(const Triangulation& host,
                                                                                      const Triangle& cap);

struct CutHalves {
  Triangulation left;
  Triangulation right;
};

// Cuts along the empty triangle `cap` and caps both halves with it.
// Errors: NotEmptyTriangle, NotSeparating.
CutHalves cut_along_triangle(const Triangulation& t, const Triangle& cap);

// Inverse of the cut: union of both halves with the shared cap removed.
Triangulation glue_along_triangle(const Triangulation& left, const Triangulation& right, const Triangle& cap);

}  // namespace lamanspan
