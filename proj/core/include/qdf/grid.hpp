#pragma once

#include <Eigen/Core>
#include <iosfwd>

#include "qdf/chem.hpp"

namespace qdf {

/// Discrete field of a molecule: the union of per-atom spheres of radius s,
/// each sampled on an axis-aligned lattice of spacing g anchored at its atom.
struct GridField {
  Eigen::Matrix<double, Eigen::Dynamic, 3> points;  // Ångström

  Eigen::Index count() const { return points.rows(); }
};

/// Build the grid field. Points are ordered by (atom index, lattice offset
/// lexicographic); a point already produced by an earlier atom's lattice is
/// dropped (membership tested to 1e-9 of a lattice step).
GridField build_grid(const Molecule& molecule, double sphere_radius, double grid_interval);

/// Debug dump, one "x<TAB>y<TAB>z" line per point.
void dump_grid(const GridField& grid, std::ostream& out);

}  // namespace qdf
