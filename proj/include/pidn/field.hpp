#pragma once

#include <string>
#include <vector>

#include "pidn/mesh.hpp"

namespace pidn {

/// Vertex-based data on a TriMesh, `components` values per vertex,
/// interleaved. The units tag is carried through exports.
struct NodalField {
  int components = 1;
  std::string units;
  std::vector<double> values;

  static NodalField zeros(const TriMesh& mesh, int components,
                          std::string units) {
    NodalField f;
    f.components = components;
    f.units = std::move(units);
    f.values.assign(
        static_cast<std::size_t>(mesh.n_vertices()) * components, 0.0);
    return f;
  }

  double& at(int vertex, int comp = 0) {
    return values[static_cast<std::size_t>(vertex) * components + comp];
  }
  double at(int vertex, int comp = 0) const {
    return values[static_cast<std::size_t>(vertex) * components + comp];
  }
};

/// Barycentric interpolation of one component at a located point.
inline double interpolate(const TriMesh& mesh, const NodalField& f,
                          const LocateResult& loc, int comp = 0) {
  const auto& tri = mesh.triangles[static_cast<std::size_t>(loc.tri)];
  double s = 0.0;
  for (int k = 0; k < 3; ++k)
    s += loc.bary[static_cast<std::size_t>(k)] *
         f.at(tri[static_cast<std::size_t>(k)], comp);
  return s;
}

}  // namespace pidn
