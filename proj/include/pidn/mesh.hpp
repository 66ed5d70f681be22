#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pidn/geometry.hpp"
#include "pidn/physics.hpp"

namespace pidn {

/// Controls the tanh-blended mesh size field. Near each source component
/// the size drops to h_min = (min component sigma) / h_min_divisor; far
/// away it saturates at h_max = h_max_factor * max(Lx, Ly). Component
/// influence radii r_i = max(k_i * sigma_i, floor_radius_factor * min(Lx,
/// Ly)) with k_i = k0 + k1 * (sigma_ref - sigma_i) / sigma_ref; for the
/// default constants and sigma well above sigma_ref the k_i term is
/// negative, so the floor radius is what acts.
struct SizeFieldParams {
  double k0 = 10.0;
  double k1 = 10.0;
  double sigma_ref = 1e-3;
  double h_max_factor = 0.04;
  double h_min_divisor = 6.0;
  double floor_radius_factor = 0.1;
  /// Overrides the whole field with a constant; used for uniform meshes in
  /// convergence studies.
  std::optional<double> uniform_h;
};

double size_field(const std::vector<GaussianComponent>& components,
                  const SizeFieldParams& sfp, const PhysParams& params,
                  Vec2 p);

struct BoundaryEdge {
  int a = -1;  // endpoints in CCW order of the owning triangle
  int b = -1;
  Vec2 normal;  // unit outward
};

/// Conforming triangle mesh of the rectangular domain. Triangles are CCW.
/// neighbors[t][k] is the triangle across the edge opposite local vertex k,
/// or -1 on the boundary.
struct TriMesh {
  double Lx = 0.0;
  double Ly = 0.0;
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 3>> neighbors;
  std::vector<BoundaryEdge> boundary_edges;
  /// CSR adjacency vertex -> incident triangles, triangle indices ascending.
  std::vector<int> v2t_offset;
  std::vector<int> v2t_list;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_triangles() const { return static_cast<int>(triangles.size()); }
  double tri_area(int t) const {
    const auto& tri = triangles[static_cast<std::size_t>(t)];
    return 0.5 * signed_area2(vertices[static_cast<std::size_t>(tri[0])],
                              vertices[static_cast<std::size_t>(tri[1])],
                              vertices[static_cast<std::size_t>(tri[2])]);
  }
  Vec2 centroid(int t) const {
    const auto& tri = triangles[static_cast<std::size_t>(t)];
    const Vec2 a = vertices[static_cast<std::size_t>(tri[0])];
    const Vec2 b = vertices[static_cast<std::size_t>(tri[1])];
    const Vec2 c = vertices[static_cast<std::size_t>(tri[2])];
    return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
  }
  double total_area() const;
};

/// Builds the guided mesh: a quadtree over the domain is refined until each
/// leaf diagonal is at most the size field at the leaf center, 2:1
/// balanced, then triangulated (plain leaves split along a diagonal,
/// leaves with hanging midpoints fanned around their center vertex).
/// Throws if the refinement would exceed max_leaves.
TriMesh generate_mesh(const std::vector<GaussianComponent>& components,
                      const SizeFieldParams& sfp, const PhysParams& params,
                      std::size_t max_leaves = 2'000'000);

struct LocateResult {
  int tri = -1;
  std::array<double, 3> bary{0.0, 0.0, 0.0};
};

/// Finds the triangle containing p (clamped to the domain first) by walking
/// from `hint` (or triangle 0), falling back to a full scan if the walk
/// stalls. Stateless and safe to call concurrently.
LocateResult locate(const TriMesh& mesh, Vec2 p, int hint = -1);

/// Legacy ASCII VTK export with optional named point data. Each field is
/// (name, components, values) with values.size() == components * n_vertices
/// and components 1 (scalar) or 2 (vector, padded with zero z).
struct VtkPointField {
  std::string name;
  int components = 1;
  std::vector<double> values;
};

void write_vtk(const TriMesh& mesh, const std::string& path,
               const std::vector<VtkPointField>& fields = {},
               const std::string& title = "pidn mesh");

}  // namespace pidn
