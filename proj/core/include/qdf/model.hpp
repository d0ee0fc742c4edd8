#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdf/basis.hpp"
#include "qdf/chem.hpp"
#include "qdf/grid.hpp"
#include "qdf/nn.hpp"
#include "qdf/tensor.hpp"

namespace qdf {

enum class PsiNormMode { InGraph, Projection };

struct ModelHyper {
  int n_orbitals = 200;   // N: molecular-orbital count = coefficient dimension
  int hk_hidden = 200;    // N': hidden width of the Hohenberg-Kohn map
  int energy_layers = 3;  // L
  int hk_layers = 3;      // L'
  PsiNormMode psi_norm = PsiNormMode::InGraph;

  bool operator==(const ModelHyper&) const = default;
};

/// All learnable parameters. The exponents (as log-values) and the global
/// coefficient matrix are shared between the energy and potential objectives.
struct ModelState {
  BasisDictionary basis;
  ModelHyper hyper;

  Tensor theta_zeta;    // [S]; zeta = exp(theta) keeps exponents positive
  Tensor coefficients;  // [S, N]; row s = coefficient vector of spec s

  std::vector<Tensor> energy_w;  // L x [N, N]
  std::vector<Tensor> energy_b;  // L x [N]
  Tensor energy_head_w;          // [N]
  Tensor energy_head_b;          // [1]

  Tensor rho_w;              // [N']: lift of the scalar density
  Tensor rho_b;              // [N']
  std::vector<Tensor> hk_w;  // L' x [N', N']
  std::vector<Tensor> hk_b;  // L' x [N']
  Tensor hk_head_w;          // [N']
  Tensor hk_head_b;          // [1]

  static ModelState initialize(BasisDictionary basis, ModelHyper hyper, std::uint64_t seed);

  std::vector<std::pair<std::string, Tensor>> named_parameters() const;
  /// Theta_E: shared (theta_zeta, coefficients) + energy head parameters.
  std::vector<std::pair<std::string, Tensor>> energy_parameters() const;
  /// Theta_V: shared (theta_zeta, coefficients) + density/HK parameters.
  std::vector<std::pair<std::string, Tensor>> potential_parameters() const;

  std::int64_t parameter_count() const;

  Eigen::VectorXd zeta_values() const;

  /// Unit-normalize the N columns of the coefficient matrix in place
  /// (projection, outside the tape). Applied after every optimizer step.
  void project_coefficients();
};

/// Electron count of a neutral molecule: sum of nuclear charges.
int count_electrons(const Molecule& molecule);

/// Gaussian expansion of the nuclear charges: V(r_i) = -sum_m Z_m
/// exp(-||r_i - R_m||^2). Training target; never differentiated through.
Eigen::VectorXd external_potential(const Molecule& molecule, const GridField& grid);

/// Parameter-independent per-molecule data, cached at preprocess time.
struct MoleculeGeometry {
  std::string id;
  int atom_count = 0;
  int electron_count = 0;
  Eigen::Matrix<double, Eigen::Dynamic, 3> grid_points;  // G x 3
  Eigen::MatrixXd distances;                             // G x B
  std::vector<int> spec_indices;                         // B
  std::vector<int> principal_q;                          // B
  Eigen::VectorXd potential_target;                      // G
  double energy_target = std::numeric_limits<double>::quiet_NaN();  // kcal/mol

  Index grid_count() const { return distances.rows(); }
  int basis_count() const { return static_cast<int>(spec_indices.size()); }
};

MoleculeGeometry build_geometry(
    const Molecule& molecule, const BasisDictionary& basis, double sphere_radius,
    double grid_interval,
    double energy_target = std::numeric_limits<double>::quiet_NaN());

/// Normalized orbital matrix of one molecule: columns of gto * C rescaled to
/// norm sqrt(N_elec / N). Differentiable in theta_zeta and coefficients.
Tensor molecule_orbitals(const ModelState& state, const MoleculeGeometry& geometry);

/// Per-grid-point electron density: row sums of psi squared.
Tensor electron_density(const Tensor& psi);

struct BatchForward {
  Tensor psi;                // [G_total, N], normalized per molecule
  std::vector<int> segments;  // per-row molecule index, nondecreasing
  int molecule_count = 0;
};

BatchForward batch_orbitals(const ModelState& state,
                            std::span<const MoleculeGeometry* const> batch);

/// Energy head: L ReLU affine layers per row, segment-sum pooling, linear
/// readout. One E' (kcal/mol) per molecule.
Tensor batch_energy(const ModelState& state, const BatchForward& forward);

/// Hohenberg-Kohn head: pointwise map density -> predicted potential.
Tensor batch_potential(const ModelState& state, const BatchForward& forward);

/// Mean over molecules of ||E - E'||^2.
Tensor energy_loss(const ModelState& state, std::span<const MoleculeGeometry* const> batch,
                   const BatchForward& forward);

/// Mean over molecules of sum_i ||V(r_i) - V'(r_i)||^2.
Tensor potential_loss(const ModelState& state, std::span<const MoleculeGeometry* const> batch,
                      const BatchForward& forward);

}  // namespace qdf
