#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "legknot/grid.hpp"
#include "legknot/khovanov.hpp"
#include "legknot/laurent.hpp"
#include "legknot/records.hpp"
#include "legknot/skein.hpp"

namespace legknot {

/// -max_deg_a(F) - 1. Throws DegreeOfZero.
int kauffman_tb_bound(const LaurentPoly2& F);

struct ImprovedBound {
  int value = 0;
  bool applied = false;
  friend bool operator==(const ImprovedBound&, const ImprovedBound&) = default;
};

/// One better than kauffman_tb_bound when the leading a-coefficient of the
/// Dubrovnik form has a negative coefficient. Propagates NonRealResult.
ImprovedBound improved_kauffman_tb_bound(const LaurentPoly2& F);

/// -max_deg_a(P) - 1.
int homfly_sl_bound(const LaurentPoly2& P);

/// ceil((breadth_a(P) + 2) / 2).
int mfw_braid_lower(const LaurentPoly2& P);

struct ArcBounds {
  int lower_kauffman = 0;
  int lower_khovanov = 0;
  std::optional<int> upper_grid;
  friend bool operator==(const ArcBounds&, const ArcBounds&) = default;
};

ArcBounds arc_bounds(const LaurentPoly2& F, const KhTable& T, const std::optional<GridDiagram>& G);

enum class Provenance { BoundSharpness, RecordedException };

std::string_view provenance_name(Provenance p) noexcept;

struct Certified {
  int value = 0;
  Provenance provenance = Provenance::BoundSharpness;
  friend bool operator==(const Certified&, const Certified&) = default;
};

/// Upper and lower bounds for one chirality.
struct SideBounds {
  int tb_upper_kauffman = 0;
  /// Absent when the Dubrovnik substitution is not real.
  std::optional<ImprovedBound> tb_upper_kauffman_improved;
  int tb_upper_khovanov = 0;
  int sl_upper_homfly = 0;
  /// From recorded bounds on the framed double.
  std::optional<int> tb_upper_cable;
  std::optional<int> sl_upper_cable;
  /// Realized by the record's grid (or its rotation, for the mirror).
  std::optional<int> tb_lower_grid;
  std::optional<int> sl_lower_grid;
  /// w - m of the record's braid (or of its mirror word).
  std::optional<int> sl_lower_braid;

  friend bool operator==(const SideBounds&, const SideBounds&) = default;
};

struct BoundsReport {
  std::string knot;
  SideBounds bounds;  // the knot as recorded
  SideBounds mirror;  // its mirror image
  int braid_index_lower_mfw = 0;
  int arc_lower_kauffman = 0;
  int arc_lower_khovanov = 0;
  std::optional<int> arc_upper_grid;

  bool certification_run = false;
  std::optional<Certified> alpha;
  std::optional<Certified> tb_knot;
  std::optional<Certified> tb_mirror;
  std::optional<Certified> sl_knot;
  std::optional<Certified> sl_mirror;

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

struct EngineOptions {
  SkeinOptions skein;
  KhOptions khovanov;
};

/// All bound fields, no certification. Throws NotAKnot for links.
BoundsReport compute_bounds(const KnotRecord& r, const EngineOptions& opts = {});

/// Bounds plus certification. Bounds alone decide alpha (and with it both tb
/// values) when the grid size meets the best lower bound; recorded values in
/// the record may complete what bounds leave open. Throws InconsistentRecord
/// when recorded values contradict the computed bounds or the grid.
BoundsReport certify(const KnotRecord& r, const EngineOptions& opts = {});

std::string report_to_json(const BoundsReport& r);
/// Inverse of report_to_json. Throws SyntaxError.
BoundsReport report_from_json(std::string_view text);
std::string report_to_text(const BoundsReport& r);

}  // namespace legknot
