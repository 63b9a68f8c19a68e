#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lamanspan/complex.hpp"
#include "lamanspan/spanning.hpp"

namespace lamanspan {

// Contents of a ".tri" file.
struct TriFile {
  std::optional<std::string> surface;
  std::vector<Triangle> triangles;
  std::optional<std::array<Vertex, 3>> abc;
};

TriFile parse_tri(std::istream& in);
TriFile read_tri_file(const std::filesystem::path& path);
Triangulation read_triangulation(const std::filesystem::path& path);

// Triangles are written lexicographically sorted.
void write_tri(std::ostream& out, const Triangulation& t, const std::optional<std::string>& surface = std::nullopt,
               const std::optional<std::array<Vertex, 3>>& abc = std::nullopt);
void write_tri_file(const std::filesystem::path& path, const Triangulation& t,
                    const std::optional<std::string>& surface = std::nullopt);

void write_span(std::ostream& out, const SpanningComplex& s);
SpanningComplex parse_span(std::istream& in);

}  // namespace lamanspan
