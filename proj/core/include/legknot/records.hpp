#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legknot/diagram.hpp"
#include "legknot/grid.hpp"
#include "legknot/skein.hpp"

namespace legknot {

struct RecordedValue {
  int value = 0;
  std::string citation;
  friend bool operator==(const RecordedValue&, const RecordedValue&) = default;
};

/// Externally computed upper bound for tb or sl of the framed double D_n.
struct RecordedCableBound {
  int framing = 0;
  int upper = 0;
  std::string citation;
  friend bool operator==(const RecordedCableBound&, const RecordedCableBound&) = default;
};

/// One line of a record file. Fields suffixed _mirror refer to the mirror knot.
struct KnotRecord {
  std::string name;
  std::string chirality;
  std::optional<int> crossings;
  std::optional<bool> alternating;
  std::optional<GridDiagram> grid;
  std::optional<std::string> pd;
  std::optional<std::string> braid;

  std::optional<RecordedValue> alpha;
  std::optional<RecordedValue> tb;
  std::optional<RecordedValue> tb_mirror;
  std::optional<RecordedValue> sl;
  std::optional<RecordedValue> sl_mirror;
  std::optional<RecordedValue> braid_index;
  std::optional<RecordedCableBound> cable_tb;
  std::optional<RecordedCableBound> cable_tb_mirror;
  std::optional<RecordedCableBound> cable_sl;
  std::optional<RecordedCableBound> cable_sl_mirror;

  /// PD if present, else the braid closure, else the grid's diagram.
  LinkDiagram diagram() const;
  std::optional<BraidWord> braid_word() const;
};

/// Parses one JSON object. Throws SyntaxError on malformed input, on a record
/// with no grid, PD or braid, and on a recorded value without a citation.
KnotRecord parse_record(std::string_view json_line);
std::vector<KnotRecord> parse_records(std::istream& in);
std::vector<KnotRecord> load_records(const std::filesystem::path& path);

/// Checks that every representation in the record has the same Kauffman
/// polynomial; throws FingerprintMismatch naming the disagreeing pair.
void check_fingerprint(const KnotRecord& r, const SkeinOptions& opts = {});

/// Looks a knot up by name ("11n19" and "11n_19" are the same). Throws
/// UnknownKnot.
const KnotRecord& find_record(const std::vector<KnotRecord>& records, std::string_view name);

}  // namespace legknot
