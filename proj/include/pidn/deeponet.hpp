#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pidn/jet.hpp"
#include "pidn/physics.hpp"
#include "pidn/sampling.hpp"

namespace pidn {

/// Operator-network shape. The branch net ingests the m*m source sensors,
/// the trunk net the normalized space-time coordinate; both end in a
/// q-dimensional feature whose scaled dot product gives the concentration.
struct Arch {
  int m = 30;
  int branch_width = 128;
  int branch_depth = 4;
  int trunk_width = 128;
  int trunk_depth = 4;
  int q = 128;

  void validate() const;
};

/// Dimensions of one gated MLP (branch or trunk).
struct MlpDims {
  int in = 0;
  int width = 0;
  int depth = 0;  // number of hidden states H_1..H_depth
  int out = 0;

  std::int64_t param_count() const;
};

MlpDims branch_dims(const Arch& a);
MlpDims trunk_dims(const Arch& a);

/// Location of one tensor inside the flat parameter vector. Matrices are
/// stored column-major; biases have cols == 1.
struct TensorRef {
  std::int64_t offset = 0;
  int rows = 0;
  int cols = 0;

  std::int64_t size() const { return std::int64_t(rows) * cols; }
};

/// Offsets for one gated MLP. Order inside the flat vector (and on disk):
/// gate encoder U (W, b), gate encoder V (W, b), hidden layers 1..depth
/// (W, b each), output head (W, b). hid_W[0] maps the network input, the
/// remaining hidden layers map width -> width.
struct MlpOffsets {
  TensorRef enc_u_W, enc_u_b;
  TensorRef enc_v_W, enc_v_b;
  std::vector<TensorRef> hid_W, hid_b;
  TensorRef head_W, head_b;
  std::int64_t end = 0;
};

MlpOffsets mlp_offsets(const MlpDims& d, std::int64_t base);

/// Flat layout of the whole model: branch MLP, trunk MLP, output bias b0.
struct NetLayout {
  MlpOffsets branch;
  MlpOffsets trunk;
  std::int64_t b0 = 0;
  std::int64_t total = 0;
};

NetLayout net_layout(const Arch& a);
std::int64_t param_count(const Arch& a);

struct DeepOnet {
  Arch arch;
  Eigen::VectorXd theta;
};

/// Glorot-normal weights (fan-in/fan-out of each matrix), zero biases and
/// output bias. Weight entries are drawn in flat-layout order.
DeepOnet init_network(const Arch& a, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Serial reference evaluation, one point at a time. Kept as the ground truth
// the batched kernels are tested against.

/// branch_in must hold arch.m * arch.m sensor values.
double forward_point_ref(const DeepOnet& net, std::span<const double> branch_in,
                         Vec2 pos, double t, const PhysParams& phys);

/// Same evaluation with the full jet (c, c_x, c_y, c_t, c_xx, c_yy)
/// propagated through the trunk.
Jet2 forward_jet_ref(const DeepOnet& net, std::span<const double> branch_in,
                     Vec2 pos, double t, const PhysParams& phys);

// ---------------------------------------------------------------------------
// Batched production path.

struct LossWeights {
  double residual = 10.0;
  double boundary = 1e-3;
  double initial = 1.0;
};

struct LossBreakdown {
  double total = 0.0;
  double residual = 0.0;  // mean squared PDE residual
  double boundary = 0.0;  // mean squared wall-normal concentration gradient
  double initial = 0.0;   // mean squared concentration at t = 0
  std::int64_t n_residual = 0;
  std::int64_t n_boundary = 0;
  std::int64_t n_initial = 0;
};

/// One training example as the loss consumes it: sensor readings plus the
/// collocation points carrying the frozen flow data.
struct InstanceRef {
  const std::vector<double>* branch = nullptr;
  const CollocationSet* points = nullptr;
};

/// Physics-informed loss over a batch of instances, each term a pooled mean
/// over every point of its kind in the batch. When grad is non-null it
/// receives d(total)/d(theta), resized to the parameter count. Instances are
/// processed in parallel; accumulation order is fixed so results do not
/// depend on the thread count.
LossBreakdown loss_and_grad(const DeepOnet& net, std::span<const InstanceRef> batch,
                            const LossWeights& w, const PhysParams& phys,
                            Eigen::VectorXd* grad);

/// Value-only batched inference for one source (one branch evaluation,
/// many space-time points).
void predict_batch(const DeepOnet& net, std::span<const double> branch_in,
                   std::span<const Vec2> pos, std::span<const double> t,
                   const PhysParams& phys, std::vector<double>& out);

/// Batched jet evaluation through the same tile kernels the loss uses;
/// exists so tests can pit the kernels against the serial reference.
void forward_jet_batch(const DeepOnet& net, std::span<const double> branch_in,
                       std::span<const Vec2> pos, std::span<const double> t,
                       const PhysParams& phys, std::vector<Jet2>& out);

// ---------------------------------------------------------------------------
// Optimizer.

struct AdamConfig {
  double lr0 = 1e-3;
  double lr_decay = 0.95;
  std::int64_t lr_decay_every = 5000;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  Eigen::VectorXd m;
  Eigen::VectorXd v;
  std::int64_t step = 0;  // completed steps
};

AdamState init_adam(std::int64_t n_params);

/// Staircase schedule: lr0 * decay^floor(step / every).
double lr_at(const AdamConfig& cfg, std::int64_t step);

/// One bias-corrected Adam update; increments state.step.
void adam_step(DeepOnet& net, AdamState& st, const AdamConfig& cfg,
               const Eigen::VectorXd& grad);

// ---------------------------------------------------------------------------
// Checkpoints: architecture header, parameters, optimizer moments, step.

void save_checkpoint(const std::string& path, const DeepOnet& net,
                     const AdamState& adam);

struct Checkpoint {
  DeepOnet net;
  AdamState adam;
};

Checkpoint load_checkpoint(const std::string& path);

}  // namespace pidn
