#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qdf/model.hpp"
#include "qdf/nn.hpp"

namespace qdf {

struct CheckpointExtra {
  int epoch = 0;
  std::string config_hash;
  std::string target_kind;
  double sphere_radius = 0.0;
  double grid_interval = 0.0;
  std::vector<std::string> train_ids;
};

/// Versioned binary container: JSON header (hyperparameters, tensor
/// directory, optimizer step counts) followed by row-major little-endian
/// 64-bit float payloads. Write-then-load reproduces every value bit-for-bit.
void save_checkpoint(const std::filesystem::path& path, const ModelState& state,
                     const AdamOptimizer& opt_energy, const AdamOptimizer& opt_potential,
                     const CheckpointExtra& extra);

struct LoadedCheckpoint {
  ModelState state;
  CheckpointExtra extra;
  std::int64_t adam_energy_steps = 0;
  std::int64_t adam_potential_steps = 0;
  // Moments keyed by parameter name, in the optimizers' parameter order.
  std::map<std::string, Eigen::VectorXd> adam_energy_m, adam_energy_v;
  std::map<std::string, Eigen::VectorXd> adam_potential_m, adam_potential_v;

  /// Push the stored moments into freshly constructed optimizers.
  void restore_optimizers(AdamOptimizer& opt_energy, AdamOptimizer& opt_potential) const;
};

/// Throws DataError on version/magic mismatch, truncation, or tensor shapes
/// inconsistent with the stored hyperparameters.
LoadedCheckpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace qdf
