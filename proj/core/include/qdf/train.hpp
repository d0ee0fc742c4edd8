#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qdf/model.hpp"
#include "qdf/nn.hpp"

namespace qdf {

struct TrainConfig {
  int batch_size = 16;
  double base_lr = 5e-4;
  double lr_decay = 0.5;
  int decay_step_epochs = 200;
  int epochs = 2000;

  enum class Order { EnergyFirst, PotentialFirst };
  enum class Alternation { PerBatch, PerEpoch };
  Order order = Order::EnergyFirst;
  Alternation alternation = Alternation::PerBatch;

  std::uint64_t seed = 0;
  bool deterministic = true;
};

/// Deterministic per-epoch shuffle from (seed, epoch); batches of batch_size
/// molecules, last batch possibly smaller.
std::vector<std::vector<const MoleculeGeometry*>> make_batches(
    std::span<const MoleculeGeometry> records, int batch_size, std::uint64_t seed, int epoch);

struct EpochMetrics {
  int epoch = 0;
  double lr = 0.0;
  double mean_loss_e = 0.0;
  double mean_loss_v = 0.0;
  double dev_mae = 0.0;
  double seconds = 0.0;
};

struct StepEvent {
  int epoch;
  std::int64_t step;  // global sub-step counter
  char objective;     // 'E' or 'V'
  double loss;
  std::span<const MoleculeGeometry* const> batch;
};

/// Alternating optimization of Theta_E and Theta_V with shared (zeta, C).
class Trainer {
 public:
  Trainer(ModelState& state, TrainConfig config);

  ModelState& state() { return state_; }
  const TrainConfig& config() const { return config_; }
  AdamOptimizer& energy_optimizer() { return opt_energy_; }
  AdamOptimizer& potential_optimizer() { return opt_potential_; }
  int epoch() const { return epoch_; }
  void set_epoch(int epoch) { epoch_ = epoch; }  // checkpoint resume

  /// Both sub-steps on one batch (per-batch alternation). Returns the
  /// pre-update forward losses (L_E, L_V). Throws NumericError (naming the
  /// molecules) on a non-finite loss.
  std::pair<double, double> train_step(std::span<const MoleculeGeometry* const> batch,
                                       double lr);

  /// Epoch loop from the current epoch up to config.epochs. Dev MAE per
  /// epoch; asserts train/dev id disjointness.
  void fit(std::span<const MoleculeGeometry> train_split,
           std::span<const MoleculeGeometry> dev_split,
           const std::function<void(const EpochMetrics&)>& on_epoch = {},
           const std::function<void(const StepEvent&)>& on_step = {});

  /// Mean |E - E'| in kcal/mol, evaluation only (no parameter mutation).
  static double evaluate_mae(const ModelState& state,
                             std::span<const MoleculeGeometry> records,
                             int eval_batch_size = 64);

 private:
  double sub_step(char objective, std::span<const MoleculeGeometry* const> batch, double lr);

  ModelState& state_;
  TrainConfig config_;
  AdamOptimizer opt_energy_;
  AdamOptimizer opt_potential_;
  int epoch_ = 0;
  std::int64_t step_counter_ = 0;
  std::function<void(const StepEvent&)> on_step_;
};

struct ExtrapolationBucket {
  int atom_count = 0;
  int count = 0;
  double mae = 0.0;
};

struct ExtrapolationReport {
  double interpolation_mae = 0.0;
  std::vector<ExtrapolationBucket> interpolation_buckets;
  double extrapolation_mae = 0.0;
  std::vector<ExtrapolationBucket> extrapolation_buckets;
};

/// Per-size-bucket MAE on an in-distribution set and a larger-molecule set.
/// Throws DataError if any training id appears in either evaluation set.
ExtrapolationReport run_extrapolation(const ModelState& state,
                                      std::span<const std::string> train_ids,
                                      std::span<const MoleculeGeometry> small_eval,
                                      std::span<const MoleculeGeometry> large_eval);

}  // namespace qdf
