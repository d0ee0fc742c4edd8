#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qdf/config.hpp"
#include "qdf/model.hpp"

namespace qdf {

/// Identity of a preprocessed dataset; checked when a model or a second
/// dataset must agree with it.
struct DatasetMeta {
  std::string target_kind;
  double sphere_radius = 0.0;
  double grid_interval = 0.0;
  std::vector<OrbitalSpec> basis_specs;
  std::string config_hash;
};

/// Binary geometry cache (grids, distance matrices, potential targets).
void write_geometry_file(const std::filesystem::path& path,
                         const std::vector<MoleculeGeometry>& records, const DatasetMeta& meta);
std::vector<MoleculeGeometry> read_geometry_file(const std::filesystem::path& path,
                                                 DatasetMeta* meta_out = nullptr);

struct PreprocessedDataset {
  DatasetMeta meta;
  std::vector<MoleculeGeometry> train;
  std::vector<MoleculeGeometry> dev;
  std::vector<MoleculeGeometry> test;
};

struct PreprocessSummary {
  std::size_t parsed = 0;
  std::size_t kept = 0;  // after the size filter
  std::size_t train = 0, dev = 0, test = 0;
};

/// Full ingestion pipeline: parse, validate, filter by size, compute targets,
/// split, build geometry caches, write manifest + splits. The output
/// directory is removed again if any stage fails.
PreprocessSummary preprocess_dataset(const std::vector<std::filesystem::path>& inputs,
                                     const RunConfig& config,
                                     const std::filesystem::path& out_dir);

PreprocessedDataset load_dataset(const std::filesystem::path& dir);

/// In-memory variant of the pipeline (parse -> geometries), shared by
/// preprocess_dataset and the tests.
std::vector<MoleculeGeometry> build_geometries(const std::vector<PropertyRecord>& records,
                                               const RunConfig& config,
                                               const BasisDictionary& basis);

}  // namespace qdf
