#include "legknot/cables.hpp"

#include <map>
#include <numeric>
#include <vector>

#include "legknot/error.hpp"

namespace legknot {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int braid_sl(const BraidWord& b) { return b.writhe() - b.strands; }

int double_tb_floor(int tb, int n) { return n > tb ? 2 * tb + 2 * n : 4 * n; }

BraidWord braid_double(const BraidWord& b, int n) {
  std::vector<int> letters;
  letters.reserve(4 * b.letters.size());
  for (int l : b.letters) {
    const int i = std::abs(l);
    if (l > 0) {
      letters.insert(letters.end(), {2 * i, 2 * i - 1, 2 * i + 1, 2 * i});
    } else {
      letters.insert(letters.end(), {-2 * i, -(2 * i + 1), -(2 * i - 1), -2 * i});
    }
  }
  const int twist = 2 * n - 2 * b.writhe();
  for (int k = 0; k < std::abs(twist); ++k) letters.push_back(twist > 0 ? 1 : -1);
  return make_braid(2 * b.strands, std::move(letters));
}

namespace {

// Edge pieces are glued by union-find and become PD labels at the end.
class PieceSet {
 public:
  int make() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(parent_.size()) - 1;
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void join(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Outward direction of each slot side: slot 0 south, 1 east, 2 north, 3 west.
constexpr int kOut[4][2] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};

}  // namespace

LinkDiagram diagram_double(const LinkDiagram& d, int n, int crossing_limit) {
  if (d.components() != 1) throw Error(Errc::NotAKnot, "only knot diagrams can be doubled");
  const int w = d.writhe();
  const int twists = n - w;
  const int total = 4 * d.crossing_count() + 2 * std::abs(twists);
  if (total > crossing_limit)
    throw Error(Errc::CrossingLimitExceeded,
                "double has " + std::to_string(total) + " crossings, limit " + std::to_string(crossing_limit));
  if (d.crossing_count() == 0) {
    std::vector<int> letters(2 * std::abs(twists), twists > 0 ? 1 : -1);
    return braid_closure(make_braid(2, std::move(letters)));
  }

  const auto& xs = d.crossings();
  const int c = d.crossing_count();
  PieceSet pieces;
  // Per crossing, local square with vertical under-lines at x = -1, +1 (index
  // 0, 1) and horizontal over-lines at y = -1, +1. seg[line][k] runs from the
  // boundary (k = 0) through the middle (k = 1) to the far side (k = 2).
  struct Square {
    int vert[2][3];
    int horiz[2][3];
  };
  std::vector<Square> sq(c);
  std::vector<std::array<int, 4>> out;
  out.reserve(total);
  for (int i = 0; i < c; ++i) {
    for (int a = 0; a < 2; ++a)
      for (int k = 0; k < 3; ++k) {
        sq[i].vert[a][k] = pieces.make();
        sq[i].horiz[a][k] = pieces.make();
      }
    for (int xi = 0; xi < 2; ++xi)
      for (int yi = 0; yi < 2; ++yi) {
        const auto& s = sq[i];
        out.push_back({s.vert[xi][yi], s.horiz[yi][xi + 1], s.vert[xi][yi + 1], s.horiz[yi][xi]});
      }
  }
  // Port on side `slot` lying toward the left of the outward direction.
  auto port = [&](int i, int slot, bool left) {
    const int lx = -kOut[slot][1];
    const int ly = kOut[slot][0];
    const auto& s = sq[i];
    switch (slot) {
      case 0: return s.vert[(lx > 0) == left ? 1 : 0][0];
      case 2: return s.vert[(lx > 0) == left ? 1 : 0][2];
      case 1: return s.horiz[(ly > 0) == left ? 1 : 0][2];
      default: return s.horiz[(ly > 0) == left ? 1 : 0][0];
    }
  };

  std::map<int, std::vector<std::pair<int, int>>> where;
  int top_label = 0;
  for (int i = 0; i < c; ++i)
    for (int s = 0; s < 4; ++s) {
      where[xs[i].arcs[s]].push_back({i, s});
      top_label = std::max(top_label, xs[i].arcs[s]);
    }
  for (const auto& [label, occ] : where) {
    // tail: the occurrence where the arc leaves its crossing
    auto tail = occ[0];
    auto head = occ[1];
    if (!xs[tail.first].outgoing(tail.second)) std::swap(tail, head);
    int left = port(tail.first, tail.second, true);
    int right = port(tail.first, tail.second, false);
    if (label == top_label) {
      for (int k = 0; k < 2 * std::abs(twists); ++k) {
        const int nl = pieces.make();
        const int nr = pieces.make();
        if (twists > 0) {
          out.push_back({right, nr, nl, left});
        } else {
          out.push_back({left, right, nr, nl});
        }
        left = nl;
        right = nr;
      }
    }
    // Arriving at the head, the left copy meets the port on the outward right.
    pieces.join(left, port(head.first, head.second, false));
    pieces.join(right, port(head.first, head.second, true));
  }

  std::map<int, int> compact;
  for (auto& x : out)
    for (int& a : x) {
      auto [it, inserted] = compact.try_emplace(pieces.find(a), static_cast<int>(compact.size()) + 1);
      a = it->second;
    }
  return LinkDiagram::from_pd(out);
}

std::optional<int> refine_tb_from_cable(int u, int n) {
  const int m0 = floor_div(u - 2 * n, 2) + 1;
  if (m0 <= n) return m0 - 1;
  return std::nullopt;
}

int refine_sl_from_cable(int u, int n) {
  const int f = floor_div(u - 2 * n, 2);
  return (f % 2 != 0) ? f : f - 1;
}

}  // namespace legknot
