#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace lamanspan {

// Canonical labeling of a closed simplicial surface given on vertices 0..n-1.
//
// Every flag (triangle plus an ordering of its corners) determines a labeling
// by breadth-first propagation across edges; the canonical code is the
// lexicographically least relabeled triangle list over all flags whose corner
// degrees are minimal. Two surfaces are isomorphic iff their codes agree.
struct CanonicalForm {
  std::vector<std::uint8_t> code;
  std::vector<int> labeling;  // compact vertex -> canonical index
  // Every labeling that produces code; they differ by automorphisms.
  std::vector<std::vector<int>> optimal_labelings;
};

CanonicalForm canonical_form(std::span<const std::array<int, 3>> triangles, int vertex_count);

}  // namespace lamanspan
