#pragma once

#include "pidn/field.hpp"
#include "pidn/mesh.hpp"
#include "pidn/physics.hpp"
#include "pidn/sparse.hpp"

namespace pidn {

struct TransportConfig {
  double dt = 5.0;
  double T = 500.0;
  /// Snapshot times; must land on the step grid. Empty means 10 uniform
  /// times k*T/10, k = 1..10.
  std::vector<double> save_times;
};

/// dt convention used across experiments: 1 s for short horizons (T <= 50),
/// 5 s otherwise.
TransportConfig default_transport(double T);

struct ConcentrationSeries {
  std::vector<double> times;
  std::vector<NodalField> fields;
};

/// Backward-Euler system for one advection step, built once per run (the
/// velocity field is steady). G is the implicit operator, Meff the
/// consistent mass plus the SUPG time coupling, rhs0 the constant source
/// part of the right-hand side so each step costs one SpMV and one solve.
struct TransportOperators {
  CsrMatrix G;
  CsrMatrix Meff;
  std::vector<double> rhs0;
};

/// Streamline-diffusion discretization: P1 Galerkin terms plus per-element
/// tau_e = h_e / (2 |v|_e) stabilization (h_e longest edge, |v|_e mean
/// vertex speed, tau_e = 0 for still elements). The strong residual drops
/// the diffusion term, which vanishes elementwise for P1.
TransportOperators assemble_transport(const TriMesh& mesh,
                                      const NodalField& velocity,
                                      const SourceMixture& source,
                                      const PhysParams& params, double dt);

/// Marches c from zero initial data to T, zero-diffusive-flux walls,
/// saving the configured snapshots. Throws if a step solve fails.
ConcentrationSeries run_transport(const TriMesh& mesh,
                                  const NodalField& velocity,
                                  const SourceMixture& source,
                                  const PhysParams& params,
                                  const TransportConfig& cfg,
                                  SolveStats* last_stats = nullptr);

/// Discrete total mass 1^T M c with the consistent P1 mass matrix.
double field_mass(const TriMesh& mesh, const std::vector<double>& c);

/// Samples one component onto the vertex-aligned k x k grid (x fastest,
/// index iy * k + ix), endpoints on the domain boundary.
std::vector<double> sample_grid(const TriMesh& mesh, const NodalField& f,
                                int k, int comp = 0);

}  // namespace pidn
