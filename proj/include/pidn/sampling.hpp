#pragma once

#include <vector>

#include "pidn/field.hpp"
#include "pidn/mesh.hpp"
#include "pidn/physics.hpp"
#include "pidn/rng.hpp"

namespace pidn {

/// One training collocation point. Residual points carry the interpolated
/// Darcy velocity, its divergence (through the mass-balance identity), and
/// the analytic source value; boundary points carry the outward wall
/// normal; initial points sit at t = 0.
struct CollocationPoint {
  Vec2 pos;
  double t = 0.0;
  Vec2 normal;
  Vec2 v;
  double div_v = 0.0;
  double f_val = 0.0;
};

struct CollocationSet {
  std::vector<CollocationPoint> residual;
  std::vector<CollocationPoint> boundary;
  std::vector<CollocationPoint> initial;
};

struct SamplingConfig {
  int n_r = 30;      // polar rings per component
  int n_theta = 30;  // angles per ring
  int n_rand = 300;  // extra uniform residual points
  int p_bcs = 100;
  int p_ics = 5;
  int m_sensors = 30;
  /// true: polar rings around each component plus n_rand uniform points.
  /// false: the same total residual count, all uniform (ablation arm).
  bool structured = true;
};

/// Assembles the collocation set for one source instance. Draw order is
/// fixed: per component ring-by-ring time draws (structured mode), then the
/// uniform residual triples, then boundary points (perimeter position
/// redrawn on exact corner hits, then time), then initial positions.
CollocationSet build_collocation(Rng& rng, const SourceMixture& source,
                                 const TriMesh& mesh,
                                 const NodalField& pressure,
                                 const NodalField& velocity,
                                 const PhysParams& params,
                                 const SamplingConfig& cfg);

/// Source values on the vertex-aligned m x m sensor grid (x fastest, index
/// iy * m + ix), the branch network input.
std::vector<double> branch_sensors(const SourceMixture& source, int m,
                                   const PhysParams& params);

}  // namespace pidn
