#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdf/rng.hpp"
#include "qdf/tensor.hpp"

namespace qdf {

/// Uniform in +-sqrt(6 / (fan_in + fan_out)).
void fill_glorot_uniform(Tensor& t, Index fan_in, Index fan_out, Rng& rng);
void fill_normal(Tensor& t, Rng& rng);
void fill_uniform(Tensor& t, double lo, double hi, Rng& rng);

/// Stepwise decay: base_lr * decay^floor(epoch / step_size).
double lr_schedule(int epoch, double base_lr, double decay, int step_size);

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Adam with bias correction over a fixed named parameter list. Two
/// optimizers may share parameter tensors; each keeps its own moments.
class AdamOptimizer {
 public:
  AdamOptimizer(std::vector<std::pair<std::string, Tensor>> params, AdamConfig config = {});

  /// One update from the gradients currently accumulated on the parameters.
  void step(double lr);
  void zero_grad();

  std::int64_t step_count() const { return step_count_; }
  std::span<const std::pair<std::string, Tensor>> params() const { return params_; }

  // Checkpoint plumbing.
  const Eigen::VectorXd& first_moment(std::size_t i) const { return m_[i]; }
  const Eigen::VectorXd& second_moment(std::size_t i) const { return v_[i]; }
  void restore(std::int64_t step_count, std::span<const Eigen::VectorXd> m,
               std::span<const Eigen::VectorXd> v);

 private:
  std::vector<std::pair<std::string, Tensor>> params_;
  std::vector<Eigen::VectorXd> m_;
  std::vector<Eigen::VectorXd> v_;
  std::int64_t step_count_ = 0;
  AdamConfig config_;
};

struct GradCheckGroup {
  std::string name;
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
  Index checked = 0;
  bool pass = true;
};

struct GradCheckReport {
  std::vector<GradCheckGroup> groups;
  double tolerance = 0.0;

  bool all_pass() const;
  double worst_rel_error() const;
};

/// Compare reverse-mode gradients of `loss_builder()` against central finite
/// differences for every listed parameter. The builder must be deterministic
/// in the parameter values. Entries where both gradients are below 1e-9 in
/// magnitude pass on the absolute difference.
GradCheckReport check_gradients(const std::function<Tensor()>& loss_builder,
                                std::span<const std::pair<std::string, Tensor>> params,
                                double tolerance, double fd_step = 1e-5);

}  // namespace qdf
