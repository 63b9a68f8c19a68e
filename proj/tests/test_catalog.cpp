#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "lamanspan/error.hpp"
#include "lamanspan/generate.hpp"
#include "lamanspan/io.hpp"
#include "lamanspan/surgery.hpp"
#include "support.hpp"

using namespace lamanspan;
namespace fs = std::filesystem;

TEST_CASE("catalog counts") {
  const Catalog& c = support::catalog();
  CHECK(c.entries(SurfaceClass::Sphere).size() == 1);
  CHECK(c.entries(SurfaceClass::ProjectivePlane).size() == 2);
  CHECK(c.entries(SurfaceClass::Torus).size() == 21);
  CHECK(c.entries(SurfaceClass::KleinBottle).size() == 29);
  std::size_t crosscap = 0;
  for (const auto& e : c.entries(SurfaceClass::KleinBottle)) crosscap += e.crosscap;
  CHECK(crosscap == 4);
  CHECK(c.entries(SurfaceClass::Sphere).front().complex.num_vertices() == 4);
}

TEST_CASE("every catalog edge lies in an empty triangle") {
  for (SurfaceClass sc : support::surfaces())
    for (const auto& e : support::catalog().entries(sc)) {
      const auto empties = oracle::empty_triangles(support::raw(e.complex));
      for (const Edge& edge : e.complex.edges()) {
        CHECK_FALSE(is_contractible_edge(e.complex, edge));
        if (e.complex.num_vertices() > 4)
          CHECK(std::any_of(empties.begin(), empties.end(), [&](const oracle::Tri& x) {
            return contains(x, edge.a) && contains(x, edge.b);
          }));
      }
    }
}

TEST_CASE("catalog entries are pairwise non-isomorphic") {
  for (SurfaceClass sc : support::surfaces()) {
    const auto& es = support::catalog().entries(sc);
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) CHECK_FALSE(isomorphic(es[i].complex, es[j].complex));
  }
}

TEST_CASE("cross-cap triangles cut into two projective planes") {
  for (const auto& e : support::catalog().entries(SurfaceClass::KleinBottle)) {
    if (!e.crosscap) {
      CHECK_FALSE(e.abc);
      continue;
    }
    REQUIRE(e.abc);
    const Triangle cap = make_triangle((*e.abc)[0], (*e.abc)[1], (*e.abc)[2]);
    const auto empties = oracle::empty_triangles(support::raw(e.complex));
    CHECK(std::find(empties.begin(), empties.end(), cap) != empties.end());
    CutHalves h = cut_along_triangle(e.complex, cap);
    for (const auto* half : {&h.left, &h.right}) {
      oracle::Topology o = oracle::topology(support::raw(*half));
      CHECK(o.chi == 1);
      CHECK_FALSE(o.orientable);
      CHECK(half->has_triangle(cap));
    }
    Triangulation glued = glue_along_triangle(h.left, h.right, cap);
    CHECK(glued.triangles() == e.complex.triangles());
  }
}

TEST_CASE("classify inverts random relabelings") {
  std::mt19937_64 rng(21);
  for (SurfaceClass sc : support::surfaces())
    for (const auto& e : support::catalog().entries(sc)) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vertex> vs = e.complex.vertices(), img = vs;
        for (auto& x : img) x = x * 3 + 50;
        std::shuffle(img.begin(), img.end(), rng);
        std::map<Vertex, Vertex> perm;
        for (std::size_t i = 0; i < vs.size(); ++i) perm[vs[i]] = img[i];
        Triangulation u = relabel(e.complex, perm);
        Classification c = support::catalog().classify(u);
        CHECK(c.entry->name == e.name);
        for (const auto& tri : e.complex.triangles())
          CHECK(u.has_triangle(make_triangle(c.entry_to_input.at(tri[0]), c.entry_to_input.at(tri[1]),
                                             c.entry_to_input.at(tri[2]))));
      }
    }
}

TEST_CASE("classify rejects reducible and unsupported inputs") {
  GeneratedInstance g = generate_instance(support::catalog(), SurfaceClass::Torus, 3, 5);
  try {
    support::catalog().classify(g.complex);
    FAIL("reducible input was classified");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInCatalog);
  }
}

TEST_CASE("seeds are certified") {
  SeedBank bank;
  for (SurfaceClass sc : support::surfaces())
    for (const auto& e : support::catalog().entries(sc)) {
      if (e.crosscap) {
        for (Vertex pivot : *e.abc) {
          SpanningComplex s = bank.pinched_seed(e, pivot);
          CHECK(s.topology_class == SpanClass::PinchedDisc);
          REQUIRE(s.singular);
          CHECK(*s.singular == pivot);
          CHECK(verify_span(e.complex, s).empty());
          CHECK_NOTHROW(check_extendible(e.complex, s));
          // the two cycle edges at the pivot stay outside the seed
          for (Vertex other : *e.abc) {
            if (other == pivot) continue;
            const Edge cyc = make_edge(pivot, other);
            for (const auto& tri : s.triangles) CHECK_FALSE((contains(tri, cyc.a) && contains(tri, cyc.b)));
          }
        }
        try {
          find_seed(e);
          FAIL("cross-cap entry produced a plain seed");
        } catch (const Error& err) {
          CHECK(err.code() == ErrorCode::BadStructure);
        }
        continue;
      }
      SpanningComplex s = bank.seed(e);
      const SpanClass want =
          (sc == SurfaceClass::Sphere || sc == SurfaceClass::ProjectivePlane) ? SpanClass::Disc : SpanClass::Cylinder;
      CHECK(s.topology_class == want);
      CHECK(is_vertex_spanning(e.complex, s));
      CHECK(verify_span(e.complex, s).empty());
      ExtendibilityCertificate cert = check_extendible(e.complex, s);
      CHECK(cert.hit_map.size() == e.complex.triangles().size());
      for (const auto& [tri, edge] : cert.hit_map) {
        CHECK((contains(tri, edge.a) && contains(tri, edge.b)));
        const auto es = span_edges(s);
        CHECK(std::binary_search(es.begin(), es.end(), edge));
      }
    }
}

TEST_CASE("check_extendible names a missed triangle") {
  Triangulation t = support::make(oracle::torus7());
  SpanningComplex all = make_span(t.triangles(), SpanClass::Cylinder);
  CHECK_NOTHROW(check_extendible(t, all));
  // drop every triangle touching an edge of 0 1 3
  std::vector<Triangle> keep;
  for (const auto& tri : t.triangles()) {
    int shared = contains(tri, 0) + contains(tri, 1) + contains(tri, 3);
    if (shared < 2) keep.push_back(tri);
  }
  SpanningComplex s = make_span(keep, SpanClass::Cylinder);
  REQUIRE(first_missed_triangle(t, s));
  CHECK(*first_missed_triangle(t, s) == Triangle{0, 1, 3});
  try {
    check_extendible(t, s);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissedTriangle);
  }
}

TEST_CASE("corrupt catalog files are rejected") {
  const fs::path dir = fs::temp_directory_path() / "lamanspan_corrupt_catalog";
  fs::remove_all(dir);
  fs::copy(default_catalog_dir(), dir, fs::copy_options::recursive);
  // a reducible sphere in place of the tetrahedron
  {
    std::ofstream out(dir / "sphere" / "sphere_4_0.tri");
    out << "surface sphere\n";
    Triangulation t = split(support::make(oracle::tetrahedron()), 1, 2, 3).complex;
    write_tri(out, t);
  }
  try {
    load_catalog(SurfaceClass::Sphere, dir);
    FAIL("corrupt entry accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CorruptEntry);
  }
  fs::remove(dir / "torus" / "torus_7_0.tri");
  try {
    load_catalog(SurfaceClass::Torus, dir);
    FAIL("short catalog accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongCount);
  }
  fs::remove_all(dir);
}
