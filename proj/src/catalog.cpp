#include "lamanspan/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

#include "lamanspan/error.hpp"
#include "lamanspan/io.hpp"
#include "lamanspan/surgery.hpp"

#ifndef LAMANSPAN_CATALOG_DIR
#define LAMANSPAN_CATALOG_DIR "catalog"
#endif

namespace lamanspan {

namespace {

const std::vector<Triangle> rp2_six = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                       {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};

std::string dir_name(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Sphere: return "sphere";
    case SurfaceClass::ProjectivePlane: return "rp2";
    case SurfaceClass::Torus: return "torus";
    case SurfaceClass::KleinBottle: return "klein";
    default: fail(ErrorCode::UnsupportedSurface, "no catalog for surface " + surface_name(c));
  }
}

}  // namespace

Triangulation catalog_seed_triangulation(SurfaceClass c) {
  std::vector<Triangle> tris;
  switch (c) {
    case SurfaceClass::Sphere:
      tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
      break;
    case SurfaceClass::ProjectivePlane:
      tris = rp2_six;
      break;
    case SurfaceClass::Torus:
      for (int i = 0; i < 7; ++i) {
        tris.push_back(make_triangle(i, (i + 1) % 7, (i + 3) % 7));
        tris.push_back(make_triangle(i, (i + 2) % 7, (i + 3) % 7));
      }
      break;
    case SurfaceClass::KleinBottle:
      // two six-vertex projective planes glued along 012
      for (const auto& t : rp2_six) {
        if (t == Triangle{0, 1, 2}) continue;
        tris.push_back(t);
        Triangle u = t;
        for (int& x : u)
          if (x >= 3) x += 3;
        tris.push_back(make_triangle(u[0], u[1], u[2]));
      }
      break;
    default:
      fail(ErrorCode::UnsupportedSurface, "no starting triangulation for " + surface_name(c));
  }
  return Triangulation::validate(tris);
}

std::vector<Triangle> crosscap_triangles(const Triangulation& t) {
  std::vector<Triangle> out;
  if (t.topology().surface_class != SurfaceClass::KleinBottle) return out;
  for (const auto& cap : empty_triangles(t)) {
    if (!triangle_sides(t, cap)) continue;
    auto halves = cut_along_triangle(t, cap);
    if (halves.left.topology().surface_class == SurfaceClass::ProjectivePlane &&
        halves.right.topology().surface_class == SurfaceClass::ProjectivePlane)
      out.push_back(cap);
  }
  return out;
}

CatalogEntry make_entry(std::string name, const Triangulation& complex,
                        const std::optional<std::array<Vertex, 3>>& abc) {
  CatalogEntry e{std::move(name), complex.topology().surface_class, complex, false, std::nullopt};
  if (abc) {
    e.crosscap = true;
    e.abc = abc;
  } else if (auto caps = crosscap_triangles(complex); !caps.empty()) {
    e.crosscap = true;
    e.abc = caps.front();
  }
  return e;
}

void write_entry_file(const std::filesystem::path& path, const CatalogEntry& entry) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  out << "# " << entry.name << ": irreducible, " << entry.complex.num_vertices() << " vertices\n";
  write_tri(out, entry.complex, dir_name(entry.surface_class), entry.abc);
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("LAMANSPAN_CATALOG"); env && *env) return env;
  return LAMANSPAN_CATALOG_DIR;
}

std::size_t expected_entry_count(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Sphere: return 1;
    case SurfaceClass::ProjectivePlane: return 2;
    case SurfaceClass::Torus: return 21;
    case SurfaceClass::KleinBottle: return 29;
    default: return 0;
  }
}

std::size_t expected_crosscap_count(SurfaceClass c) { return c == SurfaceClass::KleinBottle ? 4 : 0; }

std::vector<CatalogEntry> load_catalog(SurfaceClass c, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  const fs::path sub = dir / dir_name(c);
  if (!fs::is_directory(sub)) fail(ErrorCode::CorruptEntry, "missing catalog directory " + sub.string());
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(sub))
    if (de.is_regular_file() && de.path().extension() == ".tri") files.push_back(de.path());
  std::sort(files.begin(), files.end());

  std::vector<CatalogEntry> entries;
  std::set<std::vector<std::uint8_t>> seen;
  std::size_t crosscaps = 0;
  for (const auto& path : files) {
    const std::string name = path.stem().string();
    auto corrupt = [&](const std::string& why) { fail(ErrorCode::CorruptEntry, name + ": " + why); };
    TriFile f;
    std::optional<Triangulation> t;
    try {
      f = read_tri_file(path);
      t = Triangulation::validate(f.triangles);
    } catch (const Error& err) {
      corrupt(err.what());
    }
    if (f.surface && parse_surface_name(*f.surface) != c) corrupt("surface header says " + *f.surface);
    if (t->topology().surface_class != c) corrupt("triangulates " + surface_name(t->topology().surface_class));
    if (!is_irreducible(*t)) corrupt("has a contractible edge");
    if (!seen.insert(canonical_code(*t)).second) corrupt("isomorphic to an earlier entry");
    auto caps = crosscap_triangles(*t);
    if (f.abc) {
      Triangle cap = make_triangle((*f.abc)[0], (*f.abc)[1], (*f.abc)[2]);
      if (std::find(caps.begin(), caps.end(), cap) == caps.end())
        corrupt("abc is not a separating triangle with projective-plane halves");
    }
    entries.push_back(make_entry(name, *t, f.abc));
    if (entries.back().crosscap) ++crosscaps;
  }
  if (entries.size() != expected_entry_count(c))
    fail(ErrorCode::WrongCount, surface_name(c) + ": expected " + std::to_string(expected_entry_count(c)) +
                                    " entries, found " + std::to_string(entries.size()));
  if (crosscaps != expected_crosscap_count(c))
    fail(ErrorCode::WrongCount, surface_name(c) + ": expected " + std::to_string(expected_crosscap_count(c)) +
                                    " cross-cap entries, found " + std::to_string(crosscaps));
  return entries;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  Catalog cat;
  for (auto c : {SurfaceClass::Sphere, SurfaceClass::ProjectivePlane, SurfaceClass::Torus, SurfaceClass::KleinBottle}) {
    cat.entries_[c] = load_catalog(c, dir);
    const auto& list = cat.entries_[c];
    for (std::size_t i = 0; i < list.size(); ++i) cat.by_code_[canonical_code(list[i].complex)] = {c, i};
  }
  return cat;
}

const std::vector<CatalogEntry>& Catalog::entries(SurfaceClass c) const {
  auto it = entries_.find(c);
  if (it == entries_.end()) fail(ErrorCode::UnsupportedSurface, "no catalog for surface " + surface_name(c));
  return it->second;
}

Classification Catalog::classify(const Triangulation& t) const {
  const SurfaceClass c = t.topology().surface_class;
  if (c == SurfaceClass::Other) fail(ErrorCode::UnsupportedSurface, "surface is not sphere, rp2, torus or klein");
  if (!is_irreducible(t)) fail(ErrorCode::NotInCatalog, "input is reducible");
  auto it = by_code_.find(canonical_code(t));
  if (it == by_code_.end()) fail(ErrorCode::NotInCatalog, "irreducible " + surface_name(c) + " not in catalog");
  const CatalogEntry& entry = entries_.at(it->second.first)[it->second.second];
  auto iso = find_isomorphism(entry.complex, t);
  if (!iso) fail(ErrorCode::NotInCatalog, "canonical code matched but no isomorphism was found");
  return {&entry, std::move(*iso)};
}

std::vector<Classification> Catalog::classify_all(const Triangulation& t) const {
  const Classification first = classify(t);
  std::vector<Classification> out;
  for (auto& iso : all_isomorphisms(first.entry->complex, t)) out.push_back({first.entry, std::move(iso)});
  return out;
}

}  // namespace lamanspan
