#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdf/errors.hpp"

namespace qdf {

enum class Element : std::uint8_t { H = 0, C, N, O, F };

inline constexpr int kNumElements = 5;

/// Nuclear charge Z (H=1, C=6, N=7, O=8, F=9).
int nuclear_charge(Element element);
const char* element_symbol(Element element);
std::optional<Element> element_from_symbol(std::string_view symbol);

struct Atom {
  Element element;
  Eigen::Vector3d position;  // Ångström

  int charge() const { return nuclear_charge(element); }
};

struct Molecule {
  std::string id;
  std::vector<Atom> atoms;

  int atom_count() const { return static_cast<int>(atoms.size()); }
  /// Sum of nuclear charges; equals the electron count for the neutral
  /// closed-shell species accepted at ingestion.
  int electron_count() const;
};

struct PropertyRecord {
  Molecule molecule;
  std::map<std::string, double> properties;  // named scalars, dataset units
};

enum class TargetKind { AtomizationEnergy0K, Zpve, Enthalpy298K };

const char* to_string(TargetKind kind);
std::optional<TargetKind> target_kind_from_string(std::string_view name);

/// Column layout of the record's property line. Column names are positional;
/// "-" skips a column, "id" contributes the record identifier, anything else
/// is parsed as a scalar property of that name.
struct XyzSchema {
  std::vector<std::string> columns;

  static XyzSchema parse(std::string_view spec);
  std::string to_spec() const;
};

/// Parse one extended-XYZ record: count line, property line, one line per
/// atom ("symbol x y z", extra columns ignored). Throws ParseError with the
/// 1-based line number (offset by `first_line` for multi-record streams).
PropertyRecord parse_xyz_record(const std::string& text, const XyzSchema& schema,
                                std::size_t first_line = 1);

/// Parse every record in a stream; `source` names the file in errors.
std::vector<PropertyRecord> parse_xyz_stream(std::istream& in, const XyzSchema& schema,
                                             const std::string& source = "<stream>");

/// Molecule-only lenient pass for prediction inputs: records that fail to
/// parse are reported through `on_error` and skipped (targets optional).
std::vector<Molecule> parse_molecules_lenient(
    std::istream& in, const XyzSchema& schema, const std::string& source,
    const std::function<void(const ParseError&, std::size_t record_index)>& on_error);

/// Inverse of parse_xyz_record under the same schema (skipped columns are
/// written as 0). Round-trips to an identical structure.
std::string write_xyz_record(const PropertyRecord& record, const XyzSchema& schema);

/// Per-element reference energies (Hartree) for the atomization target.
using AtomReferenceTable = std::map<Element, double>;

/// Learning target in kcal/mol. Atomization: (U0 - sum of per-element
/// references) * 627.509474; zpve/enthalpy: raw property * 627.509474.
double compute_target(const PropertyRecord& record, TargetKind kind,
                      const AtomReferenceTable& atom_refs,
                      const std::map<TargetKind, std::string>& property_names);

std::vector<PropertyRecord> filter_by_size(std::vector<PropertyRecord> records,
                                           int min_atoms, int max_atoms);

struct SplitRatio {
  int train = 8;
  int dev = 1;
  int test = 1;
};

struct DatasetSplit {
  std::vector<PropertyRecord> train;
  std::vector<PropertyRecord> dev;
  std::vector<PropertyRecord> test;
  std::uint64_t seed = 0;
};

/// Deterministic shuffle + largest-remainder partition. Same (records, ratio,
/// seed) reproduces identical member lists.
DatasetSplit split_dataset(std::vector<PropertyRecord> records, SplitRatio ratio,
                           std::uint64_t seed);

}  // namespace qdf
