// Local Khovanov computation: crossings are tensored in one at a time onto a
// complex over the partial tangle. Objects are crossingless matchings of the
// tangle boundary; morphisms are dotted cobordisms reduced to sums of disk
// configurations. Closed loops are removed by delooping and every +-1 identity
// entry is cancelled by Gaussian elimination before the next crossing.

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "kh_internal.hpp"
#include "legknot/error.hpp"
#include "legknot/laurent.hpp"

namespace legknot::detail {
namespace {

using Mask = std::uint64_t;

// Coefficient rings. Machine integers throw Overflow, in which case the
// computation is repeated with arbitrary precision.
struct SmallInt {
  using T = std::int64_t;
  static T add(T x, T y) { return checked_add(x, y); }
  static T mul(T x, T y) { return checked_mul(x, y); }
};
struct BigInt {
  using T = boost::multiprecision::cpp_int;
  static T add(const T& x, const T& y) { return x + y; }
  static T mul(const T& x, const T& y) { return x * y; }
};
struct Mod2 {
  using T = std::int64_t;
  static T add(T x, T y) { return ((x + y) % 2 + 2) % 2; }
  static T mul(T x, T y) { return ((x * y) % 2 + 2) % 2; }
};

template <class R>
struct Scan {
using C = typename R::T;
// Sorted by mask, no zero coefficients. Bit c of a mask puts a dot on the disk
// bounding cycle c of source-union-target.
using Terms = std::vector<std::pair<Mask, C>>;

static void accumulate(Terms& dst, const Terms& src, const C& factor) {
  Terms out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      {
        C v = R::mul(src[j].second, factor);
        if (v != 0) out.emplace_back(src[j].first, std::move(v));
      }
      ++j;
    } else {
      C v = R::add(dst[i].second, R::mul(src[j].second, factor));
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

struct PairCycles {
  std::vector<int> of;   // label -> cycle, -1 off the boundary
  std::vector<int> rep;  // cycle -> smallest label on it
};

class Matchings {
 public:
  explicit Matchings(int labels) : labels_(labels) {}

  int intern(const std::vector<int>& partner) {
    auto [it, inserted] = ids_.try_emplace(partner, static_cast<int>(table_.size()));
    if (inserted) table_.push_back(partner);
    return it->second;
  }
  const std::vector<int>& operator[](int id) const { return table_[id]; }

  const PairCycles& cycles(int a, int b) {
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const auto& A = table_[a];
    const auto& B = table_[b];
    PairCycles pc;
    pc.of.assign(labels_, -1);
    for (int l = 0; l < labels_; ++l) {
      if (A[l] < 0 || pc.of[l] >= 0) continue;
      const int c = static_cast<int>(pc.rep.size());
      pc.rep.push_back(l);
      int cur = l;
      do {
        pc.of[cur] = c;
        const int nxt = A[cur];
        pc.of[nxt] = c;
        cur = B[nxt];
      } while (cur != l);
    }
    if (pc.rep.size() > 64) throw Error(Errc::BudgetExceeded, "tangle boundary too large for the scan engine");
    return cache_.emplace(key, std::move(pc)).first->second;
  }

 private:
  int labels_;
  std::vector<std::vector<int>> table_;
  std::unordered_map<std::vector<int>, int, boost::hash<std::vector<int>>> ids_;
  std::unordered_map<std::uint64_t, PairCycles> cache_;
};

// A cobordism assembled from disks glued along intervals, with extra disks
// (caps) attached along circles.
class Surface {
 public:
  int add_piece(int dots) {
    parent_.push_back(static_cast<int>(parent_.size()));
    dots_.push_back(dots);
    return static_cast<int>(parent_.size()) - 1;
  }
  void glue(int a, int b) {
    glues_.push_back(a);
    unite(a, b);
  }
  void attach(int cap, int piece) { unite(cap, piece); }

  // Reduces to disks on the boundary cycles, given a piece touching each cycle.
  Terms reduce(const std::vector<int>& cycle_piece, const C& coef) {
    const int n = static_cast<int>(parent_.size());
    std::vector<int> chi(n, 0), dots(n, 0);
    std::vector<Mask> cycles(n, 0);
    for (int p = 0; p < n; ++p) {
      const int r = find(p);
      chi[r] += 1;
      dots[r] += dots_[p];
    }
    for (int g : glues_) chi[find(g)] -= 1;
    for (std::size_t c = 0; c < cycle_piece.size(); ++c) cycles[find(cycle_piece[c])] |= Mask{1} << c;

    Terms acc{{0, coef}};
    for (int r = 0; r < n; ++r) {
      if (find(r) != r) continue;
      const int k = std::popcount(cycles[r]);
      const int twice_genus = 2 - chi[r] - k;
      if (twice_genus < 0 || twice_genus % 2 != 0) throw std::logic_error("scan engine: malformed cobordism");
      const int g = twice_genus / 2;
      const int d = dots[r];
      std::vector<std::pair<Mask, C>> options;
      if (g == 0 && d == 0) {
        for (Mask rest = cycles[r]; rest; rest &= rest - 1) options.emplace_back(cycles[r] & ~(rest & -rest), 1);
      } else if (g == 0 && d == 1) {
        options.emplace_back(cycles[r], 1);
      } else if (g == 1 && d == 0) {
        options.emplace_back(cycles[r], 2);
      }
      if (options.empty()) return {};
      Terms next;
      for (const auto& [m, c] : acc)
        for (const auto& [om, oc] : options) {
          C v = R::mul(c, oc);
          if (v != 0) next.emplace_back(m | om, std::move(v));
        }
      acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return acc;
  }

 private:
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  std::vector<int> parent_;
  std::vector<int> dots_;
  std::vector<int> glues_;
};

struct Obj {
  int match;
  int q;
  int h;
};

struct Complex {
  explicit Complex(int labels) : matchings(labels) {}

  int add(Obj o) {
    objs.push_back(o);
    alive.push_back(1);
    out.emplace_back();
    in.emplace_back();
    return static_cast<int>(objs.size()) - 1;
  }
  void add_entry(int i, int j, const Terms& t, const C& factor) {
    if (t.empty()) return;
    auto [it, inserted] = out[i].try_emplace(j);
    accumulate(it->second, t, factor);
    if (it->second.empty()) {
      out[i].erase(it);
      in[j].erase(i);
    } else {
      in[j].insert(i);
    }
  }
  void kill(int v) {
    for (const auto& [j, t] : out[v]) in[j].erase(v);
    for (int i : in[v]) out[i].erase(v);
    out[v].clear();
    in[v].clear();
    alive[v] = 0;
  }
  std::size_t alive_count() const { return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), 1)); }

  Matchings matchings;
  std::vector<Obj> objs;
  std::vector<char> alive;
  std::vector<std::map<int, Terms>> out;
  std::vector<std::set<int>> in;
};

// gamma o delta for delta: X -> Y0 and gamma: Y0 -> Y.
static Terms compose(Complex& cx, int mx, int my0, int my, const Terms& delta, const Terms& gamma) {
  const PairCycles& a = cx.matchings.cycles(mx, my0);
  const PairCycles& b = cx.matchings.cycles(my0, my);
  const PairCycles& c = cx.matchings.cycles(mx, my);
  const auto& y0 = cx.matchings[my0];
  const int ka = static_cast<int>(a.rep.size());
  const int kb = static_cast<int>(b.rep.size());
  std::vector<int> cycle_piece;
  for (int r : c.rep) cycle_piece.push_back(a.of[r]);
  Terms result;
  for (const auto& [dm, dc] : delta) {
    for (const auto& [gm, gc] : gamma) {
      Surface s;
      for (int i = 0; i < ka; ++i) s.add_piece((dm >> i) & 1u);
      for (int i = 0; i < kb; ++i) s.add_piece((gm >> i) & 1u);
      for (std::size_t l = 0; l < y0.size(); ++l)
        if (y0[l] > static_cast<int>(l)) s.glue(a.of[l], ka + b.of[l]);
      accumulate(result, s.reduce(cycle_piece, R::mul(dc, gc)), C(1));
    }
  }
  return result;
}

static bool is_unit_identity(const Complex& cx, int i, int j, const Terms& t) {
  return cx.objs[i].match == cx.objs[j].match && cx.objs[i].q == cx.objs[j].q && t.size() == 1 && t[0].first == 0 &&
         (t[0].second == 1 || t[0].second == -1 || (std::is_same_v<R, Mod2> && t[0].second != 0));
}

static void cancel(Complex& cx, int x0, int y0, const C& unit) {
  std::vector<std::pair<int, Terms>> ins, outs;
  for (int x : cx.in[y0])
    if (x != x0) ins.emplace_back(x, cx.out[x].at(y0));
  for (const auto& [y, t] : cx.out[x0])
    if (y != y0) outs.emplace_back(y, t);
  cx.kill(x0);
  cx.kill(y0);
  for (const auto& [x, delta] : ins)
    for (const auto& [y, gamma] : outs)
      cx.add_entry(x, y, compose(cx, cx.objs[x].match, cx.objs[y0].match, cx.objs[y].match, delta, gamma), C(-unit));
}

static void eliminate(Complex& cx) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < static_cast<int>(cx.objs.size()); ++i) {
      if (!cx.alive[i]) continue;
      for (const auto& [j, t] : cx.out[i]) {
        if (is_unit_identity(cx, i, j, t)) {
          const C unit = t[0].second;
          cancel(cx, i, j, unit);
          progress = true;
          break;
        }
      }
    }
  }
}

struct ArcRef {
  bool r;  // arc of the new crossing's smoothing, else of the old matching
  int id;  // smoothing arc index, or smallest label of the old arc
};

struct Pre {
  int match = -1;
  std::vector<std::vector<ArcRef>> loops;
};

static constexpr int kSmoothing[2][2][2] = {{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}};

class Stepper {
 public:
  Stepper(const std::array<int, 4>& x, const std::vector<char>& old_boundary, int labels)
      : x_(x), old_(old_boundary), labels_(labels), next_(old_boundary) {
    for (int t = 0; t < 4; ++t) {
      kink_[t] = -1;
      for (int u = 0; u < 4; ++u)
        if (u != t && x[u] == x[t]) kink_[t] = u;
      shared_[t] = kink_[t] < 0 && old_[x[t]];
      if (shared_[t]) {
        next_[x[t]] = 0;
      } else if (kink_[t] < 0) {
        next_[x[t]] = 1;
        slot_of_[x[t]] = t;
      }
    }
    for (int s = 0; s < 2; ++s)
      for (int a = 0; a < 2; ++a)
        for (int e = 0; e < 2; ++e) arc_of_slot_[s][kSmoothing[s][a][e]] = a;
  }

  const std::vector<char>& new_boundary() const { return next_; }

  Pre trace(const std::vector<int>& S, int s, Matchings& table) const {
    struct Arc {
      int end[2];
      ArcRef ref;
    };
    std::vector<Arc> arcs;
    for (int l = 0; l < labels_; ++l)
      if (S[l] > l) arcs.push_back({{l, S[l]}, {false, l}});
    for (int a = 0; a < 2; ++a) arcs.push_back({{x_[kSmoothing[s][a][0]], x_[kSmoothing[s][a][1]]}, {true, a}});

    std::vector<std::array<std::pair<int, int>, 2>> occ(labels_);
    std::vector<int> deg(labels_, 0);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
      for (int e = 0; e < 2; ++e) occ[arcs[i].end[e]][deg[arcs[i].end[e]]++] = {i, e};

    std::vector<char> used(arcs.size(), 0);
    // Enter arc `a` at end `e`; returns the occurrence continuing the path,
    // or {-1, label} at the boundary.
    auto step = [&](int a, int e) -> std::pair<int, int> {
      used[a] = 1;
      const int w = arcs[a].end[1 - e];
      if (next_[w]) return {-1, w};
      const auto& o = occ[w];
      return o[0] == std::pair{a, 1 - e} ? o[1] : o[0];
    };

    std::vector<int> partner(labels_, -1);
    for (int l = 0; l < labels_; ++l) {
      if (!next_[l] || partner[l] >= 0) continue;
      auto cur = occ[l][0];
      while (true) {
        auto nxt = step(cur.first, cur.second);
        if (nxt.first < 0) {
          partner[l] = nxt.second;
          partner[nxt.second] = l;
          break;
        }
        cur = nxt;
      }
    }
    Pre pre;
    pre.match = table.intern(partner);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
      if (used[i]) continue;
      std::vector<ArcRef> loop;
      std::pair<int, int> cur{i, 0};
      while (!used[cur.first]) {
        loop.push_back(arcs[cur.first].ref);
        cur = step(cur.first, cur.second);
      }
      pre.loops.push_back(std::move(loop));
    }
    return pre;
  }

  struct Layout {
    int ks = 0;                  // old-side pieces
    std::vector<int> s_piece;    // old boundary label -> piece
    std::vector<int> s_dots;     // per old-side piece
    int xs = 0;                  // crossing-side pieces
    std::array<int, 4> x_piece{};  // slot -> crossing-side piece
    std::array<int, 2> bottom{};   // source smoothing arc -> piece
    std::array<int, 2> top{};      // target smoothing arc -> piece
  };

  Terms realize(const Layout& L, const Pre& ps, Mask es, const Pre& pt, Mask et, const C& coef,
                Matchings& table) const {
    Surface sf;
    for (int i = 0; i < L.ks; ++i) sf.add_piece(L.s_dots[i]);
    for (int i = 0; i < L.xs; ++i) sf.add_piece(0);
    for (int t = 0; t < 4; ++t) {
      if (shared_[t]) sf.glue(L.s_piece[x_[t]], L.ks + L.x_piece[t]);
      if (kink_[t] > t) sf.glue(L.ks + L.x_piece[t], L.ks + L.x_piece[kink_[t]]);
    }
    for (std::size_t i = 0; i < ps.loops.size(); ++i) {
      // v- summand: dotted cup; v+ summand: plain cup
      const int cap = sf.add_piece(((es >> i) & 1u) ? 0 : 1);
      for (const auto& r : ps.loops[i]) sf.attach(cap, r.r ? L.ks + L.bottom[r.id] : L.s_piece[r.id]);
    }
    for (std::size_t i = 0; i < pt.loops.size(); ++i) {
      // v+ summand: dotted cap; v- summand: plain cap
      const int cap = sf.add_piece(((et >> i) & 1u) ? 1 : 0);
      for (const auto& r : pt.loops[i]) sf.attach(cap, r.r ? L.ks + L.top[r.id] : L.s_piece[r.id]);
    }
    const PairCycles& pc = table.cycles(ps.match, pt.match);
    std::vector<int> cycle_piece;
    for (int l : pc.rep) cycle_piece.push_back(old_[l] ? L.s_piece[l] : L.ks + L.x_piece[slot_of_.at(l)]);
    return sf.reduce(cycle_piece, coef);
  }

  Layout identity_layout(const PairCycles& pc, int s) const {
    Layout L;
    L.ks = static_cast<int>(pc.rep.size());
    L.s_piece = pc.of;
    L.s_dots.assign(L.ks, 0);
    L.xs = 2;
    for (int t = 0; t < 4; ++t) L.x_piece[t] = arc_of_slot_[s][t];
    L.bottom = L.top = {0, 1};
    return L;
  }

  Layout saddle_layout(const std::vector<int>& S) const {
    Layout L;
    L.s_piece.assign(labels_, -1);
    for (int l = 0; l < labels_; ++l)
      if (S[l] > l) L.s_piece[l] = L.s_piece[S[l]] = L.ks++;
    L.s_dots.assign(L.ks, 0);
    L.xs = 1;
    L.x_piece = {0, 0, 0, 0};
    L.bottom = L.top = {0, 0};
    return L;
  }

 private:
  std::array<int, 4> x_;
  const std::vector<char>& old_;
  int labels_;
  std::vector<char> next_;
  std::array<int, 4> kink_{};
  std::array<bool, 4> shared_{};
  std::map<int, int> slot_of_;  // new boundary label -> slot
  int arc_of_slot_[2][4]{};
};

static Complex add_crossing(Complex& cx, const std::vector<char>& boundary, const std::array<int, 4>& x, int labels,
                     std::size_t budget, std::vector<char>& next_boundary) {
  Stepper st(x, boundary, labels);
  next_boundary = st.new_boundary();
  Complex nx(labels);

  const int n_old = static_cast<int>(cx.objs.size());
  std::vector<std::array<Pre, 2>> pre(n_old);
  std::vector<std::array<int, 2>> first(n_old, {-1, -1});
  for (int o = 0; o < n_old; ++o) {
    if (!cx.alive[o]) continue;
    for (int s = 0; s < 2; ++s) {
      pre[o][s] = st.trace(cx.matchings[cx.objs[o].match], s, nx.matchings);
      const int L = static_cast<int>(pre[o][s].loops.size());
      for (Mask e = 0; e < (Mask{1} << L); ++e) {
        const int id = nx.add({pre[o][s].match, cx.objs[o].q + s + 2 * std::popcount(e) - L, cx.objs[o].h + s});
        if (e == 0) first[o][s] = id;
      }
    }
    if (nx.objs.size() > budget)
      throw Error(Errc::BudgetExceeded, "scan complex exceeds the generator budget of " + std::to_string(budget));
  }

  auto connect = [&](const typename Stepper::Layout& L, const Pre& ps, int src0, const Pre& pt, int tgt0, const C& coef) {
    for (Mask es = 0; es < (Mask{1} << ps.loops.size()); ++es)
      for (Mask et = 0; et < (Mask{1} << pt.loops.size()); ++et)
        nx.add_entry(static_cast<int>(src0 + es), static_cast<int>(tgt0 + et),
                     st.realize(L, ps, es, pt, et, coef, nx.matchings), C(1));
  };

  for (int o = 0; o < n_old; ++o) {
    if (!cx.alive[o]) continue;
    for (const auto& [p, f] : cx.out[o]) {
      const PairCycles& pc = cx.matchings.cycles(cx.objs[o].match, cx.objs[p].match);
      for (int s = 0; s < 2; ++s) {
        auto L = st.identity_layout(pc, s);
        for (const auto& [mask, coef] : f) {
          for (int i = 0; i < L.ks; ++i) L.s_dots[i] = (mask >> i) & 1u;
          connect(L, pre[o][s], first[o][s], pre[p][s], first[p][s], coef);
        }
      }
    }
    const auto L = st.saddle_layout(cx.matchings[cx.objs[o].match]);
    connect(L, pre[o][0], first[o][0], pre[o][1], first[o][1], C(cx.objs[o].h % 2 == 0 ? 1 : -1));
  }
  eliminate(nx);
  return nx;
}

// Greedy order: each step takes the crossing sharing the most labels with the
// current tangle boundary, lowest index on ties.
static std::vector<int> scan_order(const CompactPd& pd) {
  const int n = static_cast<int>(pd.xs.size());
  std::vector<int> order;
  std::vector<char> done(n, 0);
  std::vector<int> seen(pd.labels, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (done[c]) continue;
      int score = 0;
      for (int l : pd.xs[c]) score += seen[l] == 1;
      if (score > best_score) {
        best = c;
        best_score = score;
      }
    }
    done[best] = 1;
    order.push_back(best);
    for (int l : pd.xs[best]) ++seen[l];
  }
  return order;
}

static std::map<std::pair<int, int>, std::int64_t> run(const CompactPd& pd, Field field, std::size_t budget) {
  const int labels = pd.labels;
  Complex cx(labels);
  std::vector<char> boundary(labels, 0);
  cx.add({cx.matchings.intern(std::vector<int>(labels, -1)), 0, 0});
  for (int c : scan_order(pd)) {
    std::vector<char> next;
    Complex nx = add_crossing(cx, boundary, pd.xs[c], labels, budget, next);
    cx = std::move(nx);
    boundary = std::move(next);
  }

  std::vector<int> index(cx.objs.size(), -1);
  int live = 0;
  for (std::size_t i = 0; i < cx.objs.size(); ++i)
    if (cx.alive[i]) index[i] = live++;
  std::map<std::pair<int, int>, std::vector<std::vector<std::pair<int, C>>>> blocks;
  for (std::size_t i = 0; i < cx.objs.size(); ++i) {
    if (!cx.alive[i]) continue;
    std::vector<std::pair<int, C>> row;
    for (const auto& [j, t] : cx.out[i]) {
      if (t.size() != 1 || t[0].first != 0) throw std::logic_error("scan engine: closed complex is not scalar");
      row.emplace_back(index[j], t[0].second);
    }
    blocks[{cx.objs[i].h, cx.objs[i].q}].push_back(std::move(row));
  }
  return homology_ranks_of(blocks, field);
}
};

}  // namespace

std::map<std::pair<int, int>, std::int64_t> scan_ranks(const CompactPd& pd, Field field, std::size_t budget) {
  if (field == Field::F2) return Scan<Mod2>::run(pd, field, budget);
  try {
    return Scan<SmallInt>::run(pd, field, budget);
  } catch (const Error& e) {
    if (e.code() != Errc::Overflow) throw;
  }
  return Scan<BigInt>::run(pd, field, budget);
}

}  // namespace legknot::detail
