#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pidn/config.hpp"
#include "pidn/physics.hpp"
#include "pidn/sampling.hpp"

namespace pidn {

/// One preprocessed training example: the branch input plus the collocation
/// points already carrying the frozen Darcy data, with enough provenance to
/// audit where it came from.
struct TrainingInstance {
  std::uint64_t seed = 0;  // stream seed the instance was built from
  std::vector<GaussianComponent> components;
  double norm_const = 1.0;
  int mesh_vertices = 0;
  int mesh_triangles = 0;
  std::vector<double> branch;  // m_sensors^2 values
  CollocationSet points;
};

struct Dataset {
  int m_sensors = 0;
  std::uint64_t config_hash = 0;
  std::vector<TrainingInstance> instances;
};

/// Builds instance `index` of the configured dataset: mixture -> adaptive
/// mesh -> Darcy solve -> collocation with attached flow data -> branch
/// sensors. The instance seed is stream_seed(master, index), so any subset
/// can be rebuilt independently.
TrainingInstance build_instance(const ExperimentConfig& cfg,
                                std::uint64_t master_seed, int index);

/// Generates n instances in parallel. Individual failures are reported on
/// stderr and skipped; more than 1% failures aborts with the collected
/// messages.
Dataset generate_dataset(const ExperimentConfig& cfg, std::uint64_t master_seed,
                         int n);

/// Binary dataset file, magic "PIDS1", little-endian. Header: sensor grid
/// size, instance count, config hash. Instances follow in index order with
/// explicit per-instance counts.
void write_dataset(const std::string& path, const Dataset& ds);

/// Throws std::runtime_error on bad magic, truncation, or trailing bytes.
Dataset read_dataset(const std::string& path);

}  // namespace pidn
