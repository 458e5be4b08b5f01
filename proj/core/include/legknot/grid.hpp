#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "legknot/diagram.hpp"

namespace legknot {

/// Grid diagram of size n. Column i (1-based) holds its X marker in row x[i-1]
/// and its O marker in row o[i-1]; row 1 is the bottom row. Vertical segments
/// run from X to O, horizontal segments from O to X, and vertical segments
/// always pass over.
class GridDiagram {
 public:
  int size() const noexcept { return static_cast<int>(x_.size()); }
  const std::vector<int>& x() const noexcept { return x_; }
  const std::vector<int>& o() const noexcept { return o_; }
  int components() const noexcept { return components_; }

  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

 private:
  friend GridDiagram make_grid(std::vector<int> x, std::vector<int> o);
  std::vector<int> x_;
  std::vector<int> o_;
  int components_ = 0;
};

struct GridInvariants {
  int w = 0;
  int c = 0;
  int c_down = 0;
  int tb = 0;
  int sl = 0;
  int r = 0;

  friend bool operator==(const GridInvariants&, const GridInvariants&) = default;
};

/// Throws TooSmall, NotAPermutation or MarkerCollision.
GridDiagram make_grid(std::vector<int> x, std::vector<int> o);

int grid_components(const GridDiagram& g);

GridInvariants grid_invariants(const GridDiagram& g);

/// Quarter turn that also switches every crossing, so the result represents the
/// mirror; tb(g) + tb(rotate_mirror(g)) = -n.
GridDiagram rotate_mirror(const GridDiagram& g);

/// Half turn. Keeps w, c and tb; negates r.
GridDiagram rotate_half(const GridDiagram& g);

/// Swaps the X and O markers, reversing the orientation. Keeps w, c and tb;
/// negates r.
GridDiagram reverse_orientation(const GridDiagram& g);

LinkDiagram grid_to_link_diagram(const GridDiagram& g);

/// Uniform over valid grids of size n; same seed, same grid.
GridDiagram random_grid(int n, std::uint64_t seed);

/// Accepts {"x":[...],"o":[...]} (extra keys ignored) or "x:2,1 o:1,2".
GridDiagram parse_grid(std::string_view text);

/// "x:2,1 o:1,2"
std::string grid_to_string(const GridDiagram& g);

}  // namespace legknot
