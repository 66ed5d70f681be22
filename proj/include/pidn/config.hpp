#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "pidn/deeponet.hpp"
#include "pidn/fem_transport.hpp"
#include "pidn/mesh.hpp"
#include "pidn/physics.hpp"
#include "pidn/sampling.hpp"

namespace pidn {

struct OptimizerConfig {
  double lr = 1e-3;
  double decay_rate = 0.95;
  std::int64_t decay_every = 5000;
  std::int64_t iterations = 300000;
  int batch = 200;

  AdamConfig adam() const {
    AdamConfig a;
    a.lr0 = lr;
    a.lr_decay = decay_rate;
    a.lr_decay_every = decay_every;
    return a;
  }
};

struct MeshConfig {
  SizeFieldParams sfp;
  std::size_t max_leaves = 2'000'000;
};

struct EvalConfig {
  int grid_k = 80;
  int n_t = 10;
  int n_test = 30;
};

/// Everything one experiment needs, parsed from a single JSON document.
/// Defaults reproduce the reference setup; partial documents override only
/// the keys they mention and unknown keys are rejected.
struct ExperimentConfig {
  std::uint64_t seed = 1;
  PhysParams physics;
  SourceSamplerConfig source;
  MeshConfig mesh;
  SamplingConfig sampling;
  Arch arch;  // arch.m always mirrors sampling.m_sensors
  OptimizerConfig optimizer;
  std::optional<double> dt;  // transport step; unset means the T-based rule
  EvalConfig evaluation;
  int n_train = 2000;

  double resolved_dt() const {
    return dt ? *dt : default_transport(physics.T).dt;
  }

  /// Transport setup with n_t uniform snapshot times in (0, T].
  TransportConfig transport() const;
};

/// Carries every validation problem found, one per line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and fully validates a JSON document. All problems (unknown keys,
/// type mismatches, range violations) are collected and reported together.
ExperimentConfig parse_config(const std::string& json_text);

/// Reads the file and parses it; "" or "-" is treated as the empty document
/// (all defaults).
ExperimentConfig load_config_file(const std::string& path);

/// Serializes the fully resolved config, keys sorted. parse_config of the
/// output reproduces the config exactly.
std::string dump_config(const ExperimentConfig& cfg);

/// FNV-1a over the resolved dump; stamped into dataset files so a mismatch
/// between data and config is detectable.
std::uint64_t config_hash(const ExperimentConfig& cfg);

}  // namespace pidn
