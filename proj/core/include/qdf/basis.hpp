#pragma once

#include <Eigen/Core>
#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qdf/chem.hpp"
#include "qdf/grid.hpp"

namespace qdf {

/// One global basis function slot: element, human label, principal quantum
/// number q >= 1. The learnable exponent and coefficient vector attached to a
/// spec live in the model state, indexed by the spec's global position.
struct OrbitalSpec {
  Element element;
  std::string label;
  int principal_q = 1;

  bool operator==(const OrbitalSpec&) const = default;
};

/// Ordered per-element orbital dictionary shared by all molecules.
class BasisDictionary {
 public:
  /// 6-31G-inspired scheme: H gets 4 x 1s; each of C, N, O, F gets
  /// 6 x 1s + 4 x 2s + 4 x 2p (the 2p is a single radial function).
  static BasisDictionary default_scheme();

  /// Text format, one orbital family per line: "symbol label q multiplicity".
  static BasisDictionary from_stream(std::istream& in, const std::string& source);

  void add(Element element, const std::string& label, int principal_q, int multiplicity);

  int size() const { return static_cast<int>(specs_.size()); }
  const OrbitalSpec& spec(int index) const { return specs_[static_cast<std::size_t>(index)]; }
  std::span<const OrbitalSpec> specs() const { return specs_; }
  std::span<const int> specs_for(Element element) const;

  bool operator==(const BasisDictionary& other) const { return specs_ == other.specs_; }

 private:
  std::vector<OrbitalSpec> specs_;
  std::array<std::vector<int>, kNumElements> by_element_;
};

/// Per-molecule instantiation: one entry per (atom, spec) pair, ordered by
/// (atom index, spec order). Entries of equal element share global parameters.
struct BasisInstance {
  struct Entry {
    int atom_index;
    int spec_index;  // into BasisDictionary / model parameter tables
    Eigen::Vector3d center;
  };
  std::vector<Entry> entries;

  int count() const { return static_cast<int>(entries.size()); }
};

BasisInstance instantiate(const Molecule& molecule, const BasisDictionary& basis);

/// Closed-form GTO normalization Z(q, zeta); (-1)!! := 1. Recomputed whenever
/// zeta changes.
double gto_normalization(int principal_q, double zeta);

/// Radial GTO value D^(q-1) * exp(-zeta D^2) / Z(q, zeta), with 0^0 := 1.
double gto_radial(int principal_q, double zeta, double distance);

/// d(gto_radial)/d(zeta) at fixed distance; flows through both the
/// exponential and the normalization.
double gto_radial_dzeta(int principal_q, double zeta, double distance);

/// Distances ||r_i - R_n||, shape G x B. Parameter-independent geometry.
Eigen::MatrixXd distance_matrix(const GridField& grid, const BasisInstance& instance);

/// Plain (non-differentiated) GTO matrix: entry (i, n) = gto_radial evaluated
/// at D(i, n) with entry n's spec and exponent. zeta_per_spec is indexed by
/// global spec index.
Eigen::MatrixXd gto_matrix(const GridField& grid, const BasisInstance& instance,
                           const BasisDictionary& basis, std::span<const double> zeta_per_spec);

}  // namespace qdf
