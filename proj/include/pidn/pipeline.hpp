#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pidn/config.hpp"
#include "pidn/dataset.hpp"
#include "pidn/deeponet.hpp"

namespace pidn {

// ---------------------------------------------------------------------------
// Training.

struct TrainOptions {
  std::int64_t iterations = -1;  // -1: take the config value
  std::string out_dir;           // receives history.csv and checkpoints
  std::string resume;            // checkpoint to continue from, optional
  std::int64_t log_every = 100;
  std::int64_t checkpoint_every = 10000;
  bool quiet = false;
};

struct TrainResult {
  DeepOnet net;
  AdamState adam;
  LossBreakdown last;
  std::string checkpoint_path;
};

/// Mini-batch Adam over the physics-informed loss. Batches are drawn with
/// replacement; initialization and batch order derive from cfg.seed through
/// fixed stream indices, so a rerun reproduces the files byte for byte.
/// Aborts if the loss stops being finite.
TrainResult train_loop(const Dataset& ds, const ExperimentConfig& cfg,
                       const TrainOptions& opt);

// ---------------------------------------------------------------------------
// Evaluation against fresh FEM references.

/// Stream index reserved for deriving the evaluation seed from cfg.seed, so
/// test sources never collide with training instances or batch draws.
inline constexpr std::uint64_t kEvalStreamIndex = 0x1003;

struct EvalCase {
  std::uint64_t seed = 0;
  std::vector<GaussianComponent> components;
  std::vector<double> times;
  std::vector<double> rel_err;  // relative L2 per snapshot time
  double e_full = 0.0;          // pooled over all snapshots
  double e_t = 0.0;             // at the final time
  double fem_seconds = 0.0;     // transport solve only
  double model_seconds = 0.0;   // branch + grid inference
};

struct EvalReport {
  int grid_k = 0;
  int n_t = 0;
  std::vector<EvalCase> cases;
  double e_full = 0.0;  // means over cases
  double e_t = 0.0;
  double fem_seconds = 0.0;
  double model_seconds = 0.0;
  double speedup = 0.0;
};

/// Relative L2 distance ||a - b|| / ||b||, pooling every entry of the
/// snapshot list; single-snapshot lists give the per-time error.
double rel_l2(const std::vector<std::vector<double>>& a,
              const std::vector<std::vector<double>>& b);

/// Error block of one test case from already-gridded fields (one k*k array
/// per snapshot time); exposed separately so the metric can be tested
/// against mock predictions.
void score_case(const std::vector<std::vector<double>>& pred,
                const std::vector<std::vector<double>>& ref,
                const std::vector<double>& times, EvalCase& out);

/// Runs N_test fresh sources: FEM reference on each source's adaptive mesh,
/// model prediction on the same k x k grid and snapshot times, metrics per
/// case and averaged.
EvalReport evaluate(const DeepOnet& net, const ExperimentConfig& cfg,
                    std::uint64_t seed, bool quiet = false);

/// report.csv (case, time, rel_err) + summary.json (metrics; identical
/// across reruns) + timings.json (wall-clock numbers, which are not).
void write_eval_report(const std::string& dir, const EvalReport& report);

// ---------------------------------------------------------------------------
// Sampling ablation: structured polar + random vs all-random at the same
// residual budget.

struct AblationArm {
  std::uint64_t seed = 0;
  bool structured = false;
  double e_full = 0.0;
  double e_t = 0.0;
};

struct AblationReport {
  std::vector<AblationArm> arms;  // seed-major, structured arm first
  bool ordering_holds = false;    // structured e_t < random e_t per seed
};

/// Trains and evaluates both arms for n_seeds seeds (cfg.seed + s). Each
/// arm writes a full train/eval directory under out_dir; arms whose eval
/// summary already exists are skipped so interrupted runs resume.
AblationReport ablate_sampling(const ExperimentConfig& cfg, int n_seeds,
                               const std::string& out_dir, bool quiet = false);

void write_ablation_report(const std::string& path,
                           const AblationReport& report);

// ---------------------------------------------------------------------------
// Runtime comparison.

struct BenchCase {
  std::uint64_t seed = 0;
  double fem_seconds = 0.0;    // median over repetitions
  double model_seconds = 0.0;  // median over repetitions
};

struct BenchResult {
  int repetitions = 0;
  std::vector<BenchCase> cases;
  double fem_seconds = 0.0;  // means over cases
  double model_seconds = 0.0;
  double speedup = 0.0;
};

/// Times the FEM transport solve against model inference on the evaluation
/// grid for n_cases fresh sources, no file I/O inside the timed regions.
BenchResult bench(const DeepOnet& net, const ExperimentConfig& cfg,
                  std::uint64_t seed, int n_cases, int repetitions);

void write_bench_report(const std::string& path, const BenchResult& result);

}  // namespace pidn
