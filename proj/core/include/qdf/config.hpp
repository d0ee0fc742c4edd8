#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdf/basis.hpp"
#include "qdf/chem.hpp"
#include "qdf/model.hpp"
#include "qdf/train.hpp"

namespace qdf {

/// Environment variable naming the default config file. Precedence:
/// env < --config file < command-line flags.
inline constexpr const char* kConfigEnvVar = "QDF_CONFIG";

/// Fully resolved run configuration (flat key=value file + flag overrides).
/// Unknown keys are rejected.
struct RunConfig {
  // dataset
  XyzSchema schema = XyzSchema::parse("- id A B C mu alpha homo lumo gap r2 zpve U0 U H G Cv");
  TargetKind target = TargetKind::AtomizationEnergy0K;
  std::map<TargetKind, std::string> target_properties = {
      {TargetKind::AtomizationEnergy0K, "U0"},
      {TargetKind::Zpve, "zpve"},
      {TargetKind::Enthalpy298K, "H"},
  };
  AtomReferenceTable atom_refs;  // Hartree; required for the atomization target
  SplitRatio split_ratio;
  int min_atoms = 1;
  int max_atoms = 14;

  // field
  double sphere_radius = 0.75;  // Å
  double grid_interval = 0.3;   // Å

  // basis: empty = built-in default scheme
  std::string basis_file;

  // model + training
  ModelHyper hyper;
  TrainConfig train;

  std::uint64_t seed = 0;
  bool deterministic = true;
  int threads = 0;  // preprocess parallelism; 0 = hardware
  bool strict = false;
  std::string output_dir = "out";

  /// Merge `key = value` lines from a file. Throws ConfigError on unknown
  /// keys or unparsable values.
  void apply_file(const std::string& path);
  void apply(const std::string& key, const std::string& value);

  /// Canonical sorted "key = value" text of every setting.
  std::string resolved_text() const;
  /// FNV-1a hash of resolved_text(), 16 hex digits; stamped on output files.
  std::string config_hash() const;

  BasisDictionary load_basis() const;
};

}  // namespace qdf
