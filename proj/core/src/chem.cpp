#include "qdf/chem.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <sstream>

#include "qdf/rng.hpp"
#include "qdf/version.hpp"

namespace qdf {

namespace {

constexpr const char* kSymbols[kNumElements] = {"H", "C", "N", "O", "F"};
constexpr int kCharges[kNumElements] = {1, 6, 7, 8, 9};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') {
    token.remove_prefix(1);
    if (token.empty() || token.front() == '+' || token.front() == '-') return false;
  }
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_count(std::string_view token, long& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

bool looks_like_atom_line(const std::vector<std::string_view>& tokens) {
  if (tokens.size() < 4) return false;
  if (!element_from_symbol(tokens[0])) return false;
  double x;
  return parse_double(tokens[1], x) && parse_double(tokens[2], x) && parse_double(tokens[3], x);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Record parser over a window of pre-split lines. `base` is the 1-based
/// stream line number of lines[0].
PropertyRecord parse_record_lines(const std::vector<std::string>& lines, std::size_t begin,
                                  std::size_t end, std::size_t base, const XyzSchema& schema) {
  auto line_no = [&](std::size_t idx) { return base + (idx - begin); };
  if (begin >= end) {
    throw ParseError(ParseError::Kind::MalformedRecord, base, "empty record");
  }

  const auto count_tokens = split_ws(lines[begin]);
  long declared = 0;
  if (count_tokens.size() != 1 || !parse_count(count_tokens[0], declared) || declared <= 0) {
    throw ParseError(ParseError::Kind::MalformedRecord, line_no(begin),
                     "expected a positive atom count, got \"" + lines[begin] + "\"");
  }
  if (begin + 1 >= end) {
    throw ParseError(ParseError::Kind::MalformedRecord, line_no(begin) + 1,
                     "record ends before the property line");
  }

  PropertyRecord record;
  const auto prop_tokens = split_ws(lines[begin + 1]);
  for (std::size_t col = 0; col < schema.columns.size(); ++col) {
    const std::string& name = schema.columns[col];
    if (name == "-") continue;
    if (col >= prop_tokens.size()) {
      throw ParseError(ParseError::Kind::MissingPropertyColumn, line_no(begin + 1),
                       "property column " + std::to_string(col + 1) + " (\"" + name +
                           "\") missing: line has " + std::to_string(prop_tokens.size()) +
                           " columns");
    }
    if (name == "id") {
      record.molecule.id = std::string(prop_tokens[col]);
      continue;
    }
    double value = 0.0;
    if (!parse_double(prop_tokens[col], value)) {
      throw ParseError(ParseError::Kind::MalformedRecord, line_no(begin + 1),
                       "property \"" + name + "\" is not numeric: \"" +
                           std::string(prop_tokens[col]) + "\"");
    }
    record.properties[name] = value;
  }

  const std::size_t atoms_begin = begin + 2;
  for (long a = 0; a < declared; ++a) {
    const std::size_t idx = atoms_begin + static_cast<std::size_t>(a);
    if (idx >= end) {
      throw ParseError(ParseError::Kind::CountMismatch, base + (end - begin) - 1,
                       "record declares " + std::to_string(declared) + " atoms but only " +
                           std::to_string(a) + " atom lines follow");
    }
    const auto tokens = split_ws(lines[idx]);
    if (tokens.size() < 4) {
      throw ParseError(ParseError::Kind::MalformedRecord, line_no(idx),
                       "atom line needs \"symbol x y z\", got \"" + lines[idx] + "\"");
    }
    const auto element = element_from_symbol(tokens[0]);
    if (!element) {
      throw ParseError(ParseError::Kind::UnknownElement, line_no(idx),
                       "unknown element symbol \"" + std::string(tokens[0]) + "\"");
    }
    Eigen::Vector3d pos;
    for (int k = 0; k < 3; ++k) {
      double v = 0.0;
      if (!parse_double(tokens[static_cast<std::size_t>(k) + 1], v) || !std::isfinite(v)) {
        throw ParseError(ParseError::Kind::NonNumericCoordinate, line_no(idx),
                         "coordinate " + std::to_string(k + 1) + " of atom " +
                             std::to_string(a + 1) + " is not a finite number: \"" +
                             std::string(tokens[static_cast<std::size_t>(k) + 1]) + "\"");
      }
      pos[k] = v;
    }
    record.molecule.atoms.push_back(Atom{*element, pos});
  }

  const std::size_t tail = atoms_begin + static_cast<std::size_t>(declared);
  if (tail < end) {
    const auto tokens = split_ws(lines[tail]);
    if (looks_like_atom_line(tokens)) {
      throw ParseError(ParseError::Kind::CountMismatch, line_no(tail),
                       "record declares " + std::to_string(declared) +
                           " atoms but more atom lines follow");
    }
    throw ParseError(ParseError::Kind::MalformedRecord, line_no(tail),
                     "unexpected trailing content: \"" + lines[tail] + "\"");
  }

  // Ingestion invariants: distinct positions, neutral closed-shell species.
  const auto& atoms = record.molecule.atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[i].position == atoms[j].position) {
        throw ParseError(ParseError::Kind::DuplicateAtomPosition, line_no(begin),
                         "atoms " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                             " share the exact same position");
      }
    }
  }
  if (record.molecule.electron_count() % 2 != 0) {
    throw ParseError(ParseError::Kind::OddElectronCount, line_no(begin),
                     "odd electron count (" + std::to_string(record.molecule.electron_count()) +
                         "): charged or radical species are rejected");
  }
  return record;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

int nuclear_charge(Element element) { return kCharges[static_cast<int>(element)]; }

const char* element_symbol(Element element) { return kSymbols[static_cast<int>(element)]; }

std::optional<Element> element_from_symbol(std::string_view symbol) {
  for (int i = 0; i < kNumElements; ++i) {
    if (symbol == kSymbols[i]) return static_cast<Element>(i);
  }
  return std::nullopt;
}

int Molecule::electron_count() const {
  return std::accumulate(atoms.begin(), atoms.end(), 0,
                         [](int acc, const Atom& a) { return acc + a.charge(); });
}

const char* to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::AtomizationEnergy0K: return "atomization";
    case TargetKind::Zpve: return "zpve";
    case TargetKind::Enthalpy298K: return "enthalpy";
  }
  return "?";
}

std::optional<TargetKind> target_kind_from_string(std::string_view name) {
  if (name == "atomization") return TargetKind::AtomizationEnergy0K;
  if (name == "zpve") return TargetKind::Zpve;
  if (name == "enthalpy") return TargetKind::Enthalpy298K;
  return std::nullopt;
}

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::CountMismatch: return "count-mismatch";
    case ParseError::Kind::UnknownElement: return "unknown-element";
    case ParseError::Kind::NonNumericCoordinate: return "non-numeric-coordinate";
    case ParseError::Kind::MissingPropertyColumn: return "missing-property-column";
    case ParseError::Kind::MalformedRecord: return "malformed-record";
    case ParseError::Kind::DuplicateAtomPosition: return "duplicate-atom-position";
    case ParseError::Kind::OddElectronCount: return "odd-electron-count";
  }
  return "?";
}

XyzSchema XyzSchema::parse(std::string_view spec) {
  XyzSchema schema;
  for (auto token : split_ws(spec)) schema.columns.emplace_back(token);
  if (schema.columns.empty()) throw ConfigError("property schema must name at least one column");
  return schema;
}

std::string XyzSchema::to_spec() const {
  std::string out;
  for (const auto& c : columns) {
    if (!out.empty()) out += ' ';
    out += c;
  }
  return out;
}

PropertyRecord parse_xyz_record(const std::string& text, const XyzSchema& schema,
                                std::size_t first_line) {
  std::istringstream in(text);
  auto lines = read_lines(in);
  while (!lines.empty() && is_blank(lines.back())) lines.pop_back();
  return parse_record_lines(lines, 0, lines.size(), first_line, schema);
}

std::vector<PropertyRecord> parse_xyz_stream(std::istream& in, const XyzSchema& schema,
                                             const std::string& source) {
  const auto lines = read_lines(in);
  std::vector<PropertyRecord> records;
  std::size_t i = 0;
  while (i < lines.size()) {
    if (is_blank(lines[i])) {
      ++i;
      continue;
    }
    const auto head = split_ws(lines[i]);
    long declared = 0;
    if (head.size() != 1 || !parse_count(head[0], declared) || declared <= 0) {
      const auto kind = looks_like_atom_line(head) ? ParseError::Kind::CountMismatch
                                                   : ParseError::Kind::MalformedRecord;
      throw ParseError(kind, i + 1,
                       source + ":" + std::to_string(i + 1) +
                           ": expected an atom count line, got \"" + lines[i] + "\"");
    }
    const std::size_t span = 2 + static_cast<std::size_t>(declared);
    const std::size_t end = std::min(lines.size(), i + span);
    try {
      records.push_back(parse_record_lines(lines, i, end, i + 1, schema));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), e.line(),
                       source + ":" + std::to_string(e.line()) + ": " + e.what());
    }
    if (records.back().molecule.id.empty()) {
      records.back().molecule.id = source + "#" + std::to_string(records.size());
    }
    i += span;
  }
  return records;
}

std::vector<Molecule> parse_molecules_lenient(
    std::istream& in, const XyzSchema& schema, const std::string& source,
    const std::function<void(const ParseError&, std::size_t record_index)>& on_error) {
  const auto lines = read_lines(in);
  std::vector<Molecule> molecules;
  std::size_t i = 0;
  std::size_t record_index = 0;
  while (i < lines.size()) {
    if (is_blank(lines[i])) {
      ++i;
      continue;
    }
    const auto head = split_ws(lines[i]);
    long declared = 0;
    if (head.size() != 1 || !parse_count(head[0], declared) || declared <= 0) {
      if (on_error) {
        on_error(ParseError(ParseError::Kind::MalformedRecord, i + 1,
                            source + ":" + std::to_string(i + 1) + ": not an atom count line"),
                 record_index);
      }
      ++i;  // resynchronize on the next plausible count line
      continue;
    }
    const std::size_t span = 2 + static_cast<std::size_t>(declared);
    const std::size_t end = std::min(lines.size(), i + span);
    ++record_index;
    try {
      auto record = parse_record_lines(lines, i, end, i + 1, schema);
      if (record.molecule.id.empty()) {
        record.molecule.id = source + "#" + std::to_string(record_index);
      }
      molecules.push_back(std::move(record.molecule));
    } catch (const ParseError& e) {
      if (on_error) on_error(e, record_index);
    }
    i += span;
  }
  return molecules;
}

std::string write_xyz_record(const PropertyRecord& record, const XyzSchema& schema) {
  std::string out = std::to_string(record.molecule.atoms.size());
  out += '\n';
  std::string props;
  for (const auto& name : schema.columns) {
    if (!props.empty()) props += ' ';
    if (name == "-") {
      props += '0';
    } else if (name == "id") {
      props += record.molecule.id.empty() ? "unnamed" : record.molecule.id;
    } else {
      auto it = record.properties.find(name);
      props += fmt_double(it == record.properties.end() ? 0.0 : it->second);
    }
  }
  out += props;
  out += '\n';
  for (const auto& atom : record.molecule.atoms) {
    out += element_symbol(atom.element);
    for (int k = 0; k < 3; ++k) {
      out += ' ';
      out += fmt_double(atom.position[k]);
    }
    out += '\n';
  }
  return out;
}

double compute_target(const PropertyRecord& record, TargetKind kind,
                      const AtomReferenceTable& atom_refs,
                      const std::map<TargetKind, std::string>& property_names) {
  const auto name_it = property_names.find(kind);
  if (name_it == property_names.end()) {
    throw ConfigError(std::string("no property configured for target \"") + to_string(kind) +
                      "\"");
  }
  const auto prop_it = record.properties.find(name_it->second);
  if (prop_it == record.properties.end()) {
    throw DataError("record \"" + record.molecule.id + "\": raw property \"" + name_it->second +
                    "\" missing");
  }
  double hartree = prop_it->second;
  if (kind == TargetKind::AtomizationEnergy0K) {
    for (const auto& atom : record.molecule.atoms) {
      const auto ref = atom_refs.find(atom.element);
      if (ref == atom_refs.end()) {
        throw DataError(std::string("missing reference energy for element ") +
                        element_symbol(atom.element));
      }
      hartree -= ref->second;
    }
  }
  return hartree * kKcalPerHartree;
}

std::vector<PropertyRecord> filter_by_size(std::vector<PropertyRecord> records, int min_atoms,
                                           int max_atoms) {
  if (min_atoms > max_atoms) {
    throw ConfigError("filter_by_size: min_atoms (" + std::to_string(min_atoms) +
                      ") exceeds max_atoms (" + std::to_string(max_atoms) + ")");
  }
  std::erase_if(records, [&](const PropertyRecord& r) {
    const int m = r.molecule.atom_count();
    return m < min_atoms || m > max_atoms;
  });
  return records;
}

DatasetSplit split_dataset(std::vector<PropertyRecord> records, SplitRatio ratio,
                           std::uint64_t seed) {
  if (ratio.train <= 0 || ratio.dev <= 0 || ratio.test <= 0) {
    throw ConfigError("split ratio components must be positive");
  }
  const std::size_t n = records.size();
  if (n < 3) {
    throw DataError("split_dataset: need at least 3 records, got " + std::to_string(n));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(derive_seed(seed, "dataset-split"));
  rng.shuffle(order);

  const double total = ratio.train + ratio.dev + ratio.test;
  const int parts[3] = {ratio.train, ratio.dev, ratio.test};
  std::size_t sizes[3];
  double fractions[3];
  std::size_t assigned = 0;
  for (int p = 0; p < 3; ++p) {
    const double quota = static_cast<double>(n) * parts[p] / total;
    sizes[p] = static_cast<std::size_t>(quota);
    fractions[p] = quota - static_cast<double>(sizes[p]);
    assigned += sizes[p];
  }
  // Largest remainder; ties resolved by part order (train, dev, test).
  while (assigned < n) {
    int best = 0;
    for (int p = 1; p < 3; ++p) {
      if (fractions[p] > fractions[best]) best = p;
    }
    ++sizes[best];
    fractions[best] = -1.0;
    ++assigned;
  }

  DatasetSplit split;
  split.seed = seed;
  std::size_t cursor = 0;
  auto take = [&](std::size_t count, std::vector<PropertyRecord>& out) {
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      out.push_back(std::move(records[order[cursor++]]));
    }
  };
  take(sizes[0], split.train);
  take(sizes[1], split.dev);
  take(sizes[2], split.test);
  return split;
}

}  // namespace qdf
