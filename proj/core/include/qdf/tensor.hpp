#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace qdf {

using Index = Eigen::Index;
using RowMatrixXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

namespace detail {
struct TensorNode;
}

/// Dense double tensor (rank 0, 1 or 2) with reverse-mode differentiation.
/// Value-semantic handle; copies share the underlying node. Operations on
/// tensors with requires_grad record backward rules on an implicit tape;
/// backward() walks the tape in reverse creation order.
class Tensor {
 public:
  Tensor() = default;

  static Tensor scalar(double value, bool requires_grad = false);
  static Tensor zeros(std::span<const Index> shape, bool requires_grad = false);
  static Tensor zeros(std::initializer_list<Index> shape, bool requires_grad = false);
  static Tensor from_vector(std::vector<double> values, bool requires_grad = false);
  static Tensor from_matrix(const RowMatrixXd& values, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  int rank() const;
  Index rows() const;
  Index cols() const;
  Index size() const;
  std::vector<Index> shape() const;

  bool requires_grad() const;
  /// Detached copy of the current values (constant leaf).
  Tensor detach() const;

  double value() const;  // scalar tensors only
  std::span<const double> data() const;
  std::span<double> mutable_data();  // leaf tensors only (parameters)

  bool grad_defined() const;
  std::span<const double> grad() const;
  void zero_grad();

  /// Eigen views over the flat row-major storage.
  Eigen::Map<const RowMatrixXd> matrix() const;
  Eigen::Map<const Eigen::VectorXd> vector() const;
  Eigen::Map<const RowMatrixXd> grad_matrix() const;
  Eigen::Map<const Eigen::VectorXd> grad_vector() const;

  /// Stable identity of the underlying node (for optimizer bookkeeping).
  const void* id() const { return node_.get(); }

 private:
  friend struct detail::TensorNode;
  friend class TensorOps;
  explicit Tensor(std::shared_ptr<detail::TensorNode> node) : node_(std::move(node)) {}
  std::shared_ptr<detail::TensorNode> node_;
};

/// Whether new operations record backward rules (thread-local).
bool grad_enabled();

/// RAII scope that disables tape recording (pure inference).
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

/// Reverse-mode sweep from a scalar loss; accumulates into .grad() of every
/// requires_grad tensor reachable on the tape. Repeated calls accumulate.
void backward(const Tensor& loss);

// ---- Operations ------------------------------------------------------------

Tensor matmul(const Tensor& a, const Tensor& b);                  // [m,k]x[k,n]
Tensor matvec(const Tensor& m, const Tensor& v);                  // [r,c]x[c] -> [r]
Tensor add(const Tensor& a, const Tensor& b);                     // same shape
Tensor add_rowvec(const Tensor& m, const Tensor& v);              // [r,c]+[c]
Tensor add_scalar(const Tensor& x, const Tensor& s);              // x + broadcast scalar
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);                     // elementwise
Tensor scale(const Tensor& x, double factor);
Tensor relu(const Tensor& x);                                     // subgradient 0 at 0
Tensor square(const Tensor& x);
Tensor exp_elem(const Tensor& x);
Tensor sum(const Tensor& x);                                      // -> scalar
Tensor row_sums(const Tensor& m);                                 // [r,c] -> [r]
Tensor reshape(const Tensor& x, std::initializer_list<Index> shape);

/// Pools rows into one row per segment; ids must be nondecreasing in [0, n).
Tensor segment_sum(const Tensor& m, std::span<const int> segment_ids, int segment_count);

Tensor concat_rows(std::span<const Tensor> parts);

/// rows(table)[indices[i]] stacked; gradient scatters (accumulates) back.
Tensor gather_rows(const Tensor& table, std::span<const int> indices);
Tensor gather(const Tensor& values, std::span<const int> indices);  // rank-1

/// Rescale every column to Euclidean norm `target_norm`, inside the graph.
/// Throws NumericError on an exact zero column.
Tensor normalize_columns(const Tensor& m, double target_norm);

/// Projection variant: the per-column scale factors are treated as constants
/// (no gradient through the norms).
Tensor normalize_columns_detached(const Tensor& m, double target_norm);

/// GTO matrix with analytic zeta sensitivity: entry (i,b) =
/// gto_radial(q[b], zeta[b], distances(i,b)). distances and q are constants.
Tensor gto_matrix_op(const Tensor& zeta_per_entry, const Eigen::MatrixXd& distances,
                     std::span<const int> principal_q);

}  // namespace qdf
