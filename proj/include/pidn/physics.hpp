#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pidn/geometry.hpp"
#include "pidn/rng.hpp"

namespace pidn {

/// Domain and medium constants. Lengths in mm, time in s, pressure in Pa.
struct PhysParams {
  double Lx = 10.0;
  double Ly = 10.0;
  double K = 1e-9;         // permeability, mm^2
  double mu = 9e-4;        // dynamic viscosity, Pa*s
  double alpha = 1e-2;     // pressure relaxation rate, 1/s
  double D = 4e-6;         // solute diffusivity, mm^2/s
  double beta1 = 5.0 / 60.0;   // source-to-flow coupling
  double beta2 = 5.0 / 240.0;  // source-to-solute coupling
  double T = 500.0;        // horizon, s

  double mobility() const { return K / mu; }

  /// Throws std::invalid_argument listing every violated constraint.
  void validate() const;
};

struct GaussianComponent {
  Vec2 center;
  double sigma = 0.0;
};

/// Sum of isotropic Gaussians normalized to unit integral over the domain.
/// The normalization constant is one shared integral of the whole sum, not
/// per-component.
class SourceMixture {
 public:
  /// Normalizes with midpoint quadrature on an n x n grid over the domain.
  /// Throws if any sigma <= 1e-6 or the integral underflows.
  static SourceMixture normalized(std::vector<GaussianComponent> components,
                                  const PhysParams& params, int quad_n = 512);

  double eval(Vec2 p) const;
  double norm_const() const { return norm_const_; }
  const std::vector<GaussianComponent>& components() const {
    return components_;
  }

 private:
  std::vector<GaussianComponent> components_;
  double norm_const_ = 1.0;
};

/// Unnormalized sum of component Gaussians at p.
double unnormalized_sum(const std::vector<GaussianComponent>& components,
                        Vec2 p);

/// Midpoint-rule integral of the unnormalized sum over the domain.
double mixture_integral(const std::vector<GaussianComponent>& components,
                        const PhysParams& params, int quad_n);

/// How source instances are drawn for datasets and experiments.
struct SourceSamplerConfig {
  Rect region{3.0, 3.0, 7.0, 7.0};  // admissible centers
  double sigma_min = 0.25;
  double sigma_max = 0.60;
  /// Candidate component counts; one is chosen uniformly per draw. A single
  /// entry fixes the count.
  std::vector<int> counts{1};
  /// When set, centers are fixed (count must match) and only sigmas are drawn.
  std::optional<std::vector<Vec2>> fixed_centers;
  /// When set, sigma is fixed too and the draw is fully deterministic.
  std::optional<double> fixed_sigma;
  /// When set, sampling is bypassed: every draw yields exactly this mixture
  /// and consumes no randomness. Overrides all the fields above.
  std::optional<std::vector<GaussianComponent>> components;
};

/// Draw order: component count (if not fixed), then per component center x,
/// center y (skipped when centers are fixed), then sigma (skipped when
/// fixed). Normalization never consumes randomness.
SourceMixture sample_mixture(Rng& rng, const SourceSamplerConfig& cfg,
                             const PhysParams& params);

/// Monte Carlo estimate of the expected fraction of the domain lying within
/// radius_factor * sigma of a sampled component center. Each trial draws a
/// mixture and one uniform domain point and counts coverage by any
/// component disk.
double support_fraction_mc(Rng& rng, const SourceSamplerConfig& cfg,
                           const PhysParams& params, long n_trials,
                           double radius_factor);

}  // namespace pidn
