#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace legknot {

/// One crossing in planar-diagram (PD) form. The four arc labels are listed
/// counterclockwise starting from the incoming under-arc, so arcs[0] -> arcs[2]
/// is the under-strand. The sign is derived from the traversal orientation:
/// +1 when the over-strand enters at arcs[3], -1 when it enters at arcs[1].
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 0;

  /// Slot through which the over-strand enters.
  int over_in_slot() const noexcept { return sign > 0 ? 3 : 1; }
  int over_out_slot() const noexcept { return sign > 0 ? 1 : 3; }
  /// True when the arc at `slot` leaves the crossing.
  bool outgoing(int slot) const noexcept { return slot == 2 || slot == over_out_slot(); }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented link diagram: PD crossings plus crossing-free closed components.
/// Immutable after construction; all orientation data is validated.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  /// Validates a PD crossing list. Throws ArcMultiplicity when a label does not
  /// occur exactly twice and OrientationConflict when the incoming/outgoing
  /// pattern cannot be realized by an orientation.
  static LinkDiagram from_pd(const std::vector<std::array<int, 4>>& crossings, int free_loops = 0);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int free_loops() const noexcept { return free_loops_; }
  /// Number of closed components, free loops included.
  int components() const noexcept { return components_; }
  int writhe() const noexcept;
  int positive_crossings() const noexcept;
  int negative_crossings() const noexcept { return crossing_count() - positive_crossings(); }
  bool is_knot() const noexcept { return components_ == 1; }

  /// Serializes as "PD[X[a,b,c,d],...,O[k]]"; parse_pd inverts it exactly.
  std::string to_pd_string() const;

  /// Raw crossing tuples (without signs).
  std::vector<std::array<int, 4>> raw() const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  int components_ = 0;
};

/// Accepts "PD[X[1,4,2,5],...]" with optional "O[k]" free-loop tokens, and the
/// bare list form "[[1,4,2,5],...]". `extra_free_loops` adds crossing-free
/// unknotted components (so "PD[]" with one extra loop is the unknot).
LinkDiagram parse_pd(std::string_view text, int extra_free_loops = 0);

/// Swaps over and under at every crossing.
LinkDiagram mirror_diagram(const LinkDiagram& d);

/// Braid word on `strands` strands; letter k > 0 is sigma_k, k < 0 is sigma_|k|^-1.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  int writhe() const noexcept;
  /// Cycle count of the underlying permutation.
  int permutation_cycles() const;
  /// "m=<strands>: l1 l2 ..."
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Validates strand count and letter range (LetterOutOfRange).
BraidWord make_braid(int strands, std::vector<int> letters);
/// Parses "m=<int>: l1 l2 ..." (commas are accepted as separators).
BraidWord parse_braid(std::string_view text);

/// Closure of the braid, strands running upward; sigma_k is a positive crossing.
LinkDiagram braid_closure(const BraidWord& b);

}  // namespace legknot
