#include "oracles.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

using legknot::LaurentPoly2;
using legknot::LinkDiagram;
using legknot::UniPoly;

namespace oracle {
namespace {

// A crossing as four labels plus which strand is currently under: slots
// {u, u+2} with u in {0, 1}. Switching a crossing flips u.
struct X {
  std::array<int, 4> l;
  int u = 0;
  int odd_in = 0;  // slot where the strand through slots 1 and 3 enters
};

struct Diagram {
  std::vector<X> xs;
  int loops = 0;
};

LaurentPoly2 mono(std::int64_t c, int a, int z) { return LaurentPoly2::monomial(c, a, z); }

LaurentPoly2 power(const LaurentPoly2& p, int k) {
  LaurentPoly2 r = LaurentPoly2::constant(1);
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

// Removes crossing c and joins the label pairs; counts any loop that closes.
Diagram smooth(const Diagram& d, std::size_t c, std::pair<int, int> p1, std::pair<int, int> p2) {
  const auto& l = d.xs[c].l;
  std::map<int, int> parent;
  auto find = [&](int v) {
    if (!parent.count(v)) parent[v] = v;
    while (parent[v] != v) v = parent[v];
    return v;
  };
  parent[find(l[p1.first])] = find(l[p1.second]);
  parent[find(l[p2.first])] = find(l[p2.second]);
  Diagram out;
  out.loops = d.loops;
  std::set<int> present;
  for (std::size_t i = 0; i < d.xs.size(); ++i) {
    if (i == c) continue;
    X x = d.xs[i];
    for (int& v : x.l) {
      v = find(v);
      present.insert(v);
    }
    out.xs.push_back(x);
  }
  std::set<int> closed;
  for (int v : l)
    if (!present.count(find(v))) closed.insert(find(v));
  out.loops += static_cast<int>(closed.size());
  return out;
}

// Walks every strand. In oriented mode the walk follows the orientation.
struct Walk {
  std::vector<int> comp_of_under, comp_of_over;
  std::vector<int> first_seen_under;  // 1 if the crossing is first met on its under strand
  std::vector<int> under_in, over_in;
  int components = 0;
};

Walk walk(const Diagram& d, bool oriented) {
  const int n = static_cast<int>(d.xs.size());
  std::multimap<int, std::pair<int, int>> where;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) where.emplace(d.xs[c].l[s], std::pair{c, s});
  auto other_end = [&](int c, int s) {
    auto [b, e] = where.equal_range(d.xs[c].l[s]);
    for (auto it = b; it != e; ++it)
      if (it->second != std::pair{c, s}) return it->second;
    throw std::logic_error("label occurs once");
  };
  // Starting slots depend only on the labels and the orientation, never on
  // which strand is currently on top, so a switch changes nothing else.
  auto start_slot = [&](int c, bool first) {
    if (!oriented) return first ? 0 : 1;
    return first ? 0 : d.xs[c].odd_in;
  };

  Walk w;
  w.comp_of_under.assign(n, -1);
  w.comp_of_over.assign(n, -1);
  w.first_seen_under.assign(n, -1);
  w.under_in.assign(n, -1);
  w.over_in.assign(n, -1);
  std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
  for (int c0 = 0; c0 < n; ++c0) {
    for (bool first : {true, false}) {
      const int s0 = start_slot(c0, first);
      if (used[c0][s0]) continue;
      const int comp = w.components++;
      int c = c0, s = s0;
      while (!used[c][s]) {
        used[c][s] = used[c][(s + 2) % 4] = true;
        const X& x = d.xs[c];
        const bool under = (s % 2) == x.u;
        if (w.first_seen_under[c] < 0) w.first_seen_under[c] = under ? 1 : 0;
        (under ? w.comp_of_under : w.comp_of_over)[c] = comp;
        (under ? w.under_in : w.over_in)[c] = s;
        std::tie(c, s) = other_end(c, (s + 2) % 4);
      }
    }
  }
  return w;
}

// First crossing that keeps the diagram from being descending, or -1.
int first_bad(const Walk& w, int n) {
  for (int c = 0; c < n; ++c) {
    const int cu = w.comp_of_under[c], co = w.comp_of_over[c];
    if (cu == co ? w.first_seen_under[c] == 1 : cu < co) return c;
  }
  return -1;
}

int self_writhe(const Walk& w, int n) {
  int s = 0;
  for (int c = 0; c < n; ++c)
    if (w.comp_of_under[c] == w.comp_of_over[c]) s += w.over_in[c] == (w.under_in[c] + 3) % 4 ? 1 : -1;
  return s;
}

LaurentPoly2 kauffman_lambda(const Diagram& d) {
  const LaurentPoly2 delta = mono(1, 1, -1) + mono(1, -1, -1) - LaurentPoly2::constant(1);
  const int n = static_cast<int>(d.xs.size());
  if (n == 0) return power(delta, d.loops - 1);
  const Walk w = walk(d, false);
  const int c = first_bad(w, n);
  if (c < 0) return power(delta, w.components + d.loops - 1).shifted(self_writhe(w, n), 0);
  Diagram sw = d;
  sw.xs[c].u ^= 1;
  LaurentPoly2 r = kauffman_lambda(smooth(d, c, {0, 1}, {2, 3})) + kauffman_lambda(smooth(d, c, {0, 3}, {1, 2}));
  return r * mono(1, 0, 1) - kauffman_lambda(sw);
}

LaurentPoly2 homfly_rec(const Diagram& d) {
  const LaurentPoly2 delta = mono(1, 1, -1) - mono(1, -1, -1);
  const int n = static_cast<int>(d.xs.size());
  if (n == 0) return power(delta, d.loops - 1);
  const Walk w = walk(d, true);
  const int c = first_bad(w, n);
  if (c < 0) return power(delta, w.components + d.loops - 1);
  // Oriented smoothing: each incoming end joins the outgoing end of the other strand.
  const int ui = w.under_in[c], oi = w.over_in[c];
  const Diagram s0 = smooth(d, static_cast<std::size_t>(c), {ui, (oi + 2) % 4}, {oi, (ui + 2) % 4});
  Diagram sw = d;
  sw.xs[c].u ^= 1;
  const int sign = w.over_in[c] == (w.under_in[c] + 3) % 4 ? 1 : -1;
  if (sign > 0) return homfly_rec(sw).shifted(-2, 0) + mono(1, -1, 1) * homfly_rec(s0);
  return homfly_rec(sw).shifted(2, 0) - mono(1, 1, 1) * homfly_rec(s0);
}

Diagram from(const LinkDiagram& d) {
  Diagram out;
  for (const auto& c : d.crossings()) out.xs.push_back({c.arcs, 0, c.over_in_slot()});
  out.loops = d.free_loops();
  return out;
}

}  // namespace

LaurentPoly2 kauffman(const LinkDiagram& d) { return kauffman_lambda(from(d)).shifted(-d.writhe(), 0); }

LaurentPoly2 homfly(const LinkDiagram& d) { return homfly_rec(from(d)); }

UniPoly jones_unnormalized(const LinkDiagram& d) {
  const int n = d.crossing_count();
  std::map<int, std::int64_t> acc;
  int labels = 0;
  for (const auto& c : d.crossings())
    for (int l : c.arcs) labels = std::max(labels, l + 1);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<int> parent(labels);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    std::set<int> used;
    for (int c = 0; c < n; ++c) {
      const auto& a = d.crossings()[c].arcs;
      for (int l : a) used.insert(l);
      if ((s >> c) & 1u) {
        parent[find(a[0])] = find(a[3]);
        parent[find(a[1])] = find(a[2]);
      } else {
        parent[find(a[0])] = find(a[1]);
        parent[find(a[2])] = find(a[3]);
      }
    }
    std::set<int> roots;
    for (int l : used) roots.insert(find(l));
    const int loops = static_cast<int>(roots.size()) + d.free_loops();
    const int h = __builtin_popcount(s);
    // (-q)^h (q + q^-1)^loops
    for (int k = 0; k <= loops; ++k) {
      std::int64_t binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (loops - i) / (i + 1);
      acc[h + loops - 2 * k] += (h % 2 ? -1 : 1) * binom;
    }
  }
  const int np = d.positive_crossings(), nm = d.negative_crossings();
  UniPoly out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.coeffs[e + np - 2 * nm] = (nm % 2 ? -c : c);
  return out;
}

int grid_tb(const legknot::GridDiagram& g) {
  const int n = g.size();
  struct Pt {
    int col, row;
  };
  // Corners in traversal order: X -> O vertically, then O -> X horizontally.
  std::vector<std::vector<Pt>> curves;
  std::vector<bool> done(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (done[start]) continue;
    std::vector<Pt> pts;
    int col = start;
    while (!done[col]) {
      done[col] = true;
      pts.push_back({col, g.x()[col - 1]});
      const int row = g.o()[col - 1];
      pts.push_back({col, row});
      int next = 0;
      for (int k = 1; k <= n; ++k)
        if (g.x()[k - 1] == row) next = k;
      col = next;
    }
    curves.push_back(pts);
  }
  struct Seg {
    Pt a, b;
  };
  std::vector<Seg> vert, horiz;
  int se = 0;
  for (const auto& pts : curves) {
    const int m = static_cast<int>(pts.size());
    for (int i = 0; i < m; ++i) {
      const Pt p = pts[i], q = pts[(i + 1) % m];
      (p.col == q.col ? vert : horiz).push_back({p, q});
      const Pt prev = pts[(i + m - 1) % m];
      // p is a southeast corner when both neighbours lie up or left of it.
      const bool nb_up = prev.row > p.row || q.row > p.row;
      const bool nb_left = prev.col < p.col || q.col < p.col;
      if (nb_up && nb_left) ++se;
    }
  }
  int w = 0;
  for (const auto& v : vert)
    for (const auto& h : horiz) {
      const int c = v.a.col, r = h.a.row;
      if (std::min(h.a.col, h.b.col) < c && c < std::max(h.a.col, h.b.col) && std::min(v.a.row, v.b.row) < r &&
          r < std::max(v.a.row, v.b.row)) {
        const int vd = v.b.row > v.a.row ? 1 : -1;
        const int hd = h.b.col > h.a.col ? 1 : -1;
        w += -vd * hd;
      }
    }
  return w - se;
}

}  // namespace oracle
