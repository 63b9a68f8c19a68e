#pragma once

#include <vector>

#include "lamanspan/catalog.hpp"
#include "lamanspan/complex.hpp"
#include "oracles.hpp"

namespace support {

inline const lamanspan::Catalog& catalog() {
  static const lamanspan::Catalog c = lamanspan::Catalog::load();
  return c;
}

inline std::vector<oracle::Tri> raw(const lamanspan::Triangulation& t) {
  return {t.triangles().begin(), t.triangles().end()};
}

inline lamanspan::Triangulation make(const std::vector<oracle::Tri>& tris) {
  return lamanspan::Triangulation::validate(std::vector<lamanspan::Triangle>(tris.begin(), tris.end()));
}

inline const std::vector<lamanspan::SurfaceClass>& surfaces() {
  static const std::vector<lamanspan::SurfaceClass> s{lamanspan::SurfaceClass::Sphere,
                                                      lamanspan::SurfaceClass::ProjectivePlane,
                                                      lamanspan::SurfaceClass::Torus,
                                                      lamanspan::SurfaceClass::KleinBottle};
  return s;
}

}  // namespace support
