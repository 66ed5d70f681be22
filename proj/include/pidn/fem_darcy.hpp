#pragma once

#include "pidn/field.hpp"
#include "pidn/mesh.hpp"
#include "pidn/physics.hpp"
#include "pidn/sparse.hpp"

#include <functional>

namespace pidn {

/// Solves the screened pressure equation -(K/mu) lap(p) + alpha p = beta1 f
/// with the natural zero-flux wall condition, P1 elements, consistent mass,
/// and a CG/Jacobi solve. The flux form of the flow problem reduces to this
/// primal form because alpha > 0 makes it uniquely solvable.
struct DarcySolution {
  NodalField p;  // pressure, Pa
  NodalField v;  // Darcy velocity, mm/s, 2 components
  SolveStats stats;
};

/// System matrix (K/mu) S + alpha M. Assembly walks rows (vertices) so the
/// accumulation order per entry is fixed no matter how many threads run.
CsrMatrix assemble_darcy_matrix(const TriMesh& mesh, const PhysParams& params);

/// Load vector beta1 * \int f phi_i with the 3-point edge-midpoint rule,
/// taking any pointwise source (not just Gaussian mixtures).
std::vector<double> assemble_source_load(
    const TriMesh& mesh, const std::function<double(Vec2)>& f, double scale);

/// Full pressure + velocity solve. Throws on solver failure.
DarcySolution solve_darcy(const TriMesh& mesh, const SourceMixture& source,
                          const PhysParams& params, double tol = 1e-10);

/// Lowest-order velocity recovery: per-triangle P1 pressure gradients,
/// area-weighted onto vertices, scaled by -K/mu.
NodalField recover_velocity(const TriMesh& mesh, const NodalField& pressure,
                            const PhysParams& params);

/// Divergence of the Darcy velocity through the mass balance identity
/// div v = -alpha p + beta1 f, exact for the continuous problem and the
/// only form that is well defined pointwise for P1 data.
double divergence_v_at(const TriMesh& mesh, const NodalField& pressure,
                       const SourceMixture& source, const PhysParams& params,
                       Vec2 pt, int hint = -1);

}  // namespace pidn
