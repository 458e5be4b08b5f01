#include "legknot/skein.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "legknot/error.hpp"

namespace legknot {

namespace {

using Quad = std::array<int, 4>;

// A positive curl multiplies the regular-isotopy polynomial by a^kCurlPower.
constexpr int kCurlPower = 1;

thread_local std::size_t g_last_memo_size = 0;

struct Pd {
  std::vector<Quad> x;
  std::vector<int> sign;  // filled in oriented mode only
  int loops = 0;
};

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const { return boost::hash_range(v.begin(), v.end()); }
};

void rename_label(Pd& d, int from, int to) {
  for (auto& q : d.x)
    for (int& l : q)
      if (l == from) l = to;
}

void erase_crossing(Pd& d, std::size_t i) {
  d.x.erase(d.x.begin() + static_cast<std::ptrdiff_t>(i));
  if (!d.sign.empty()) d.sign.erase(d.sign.begin() + static_cast<std::ptrdiff_t>(i));
}

// Removes Reidemeister I curls; returns the summed writhe of the removed curls.
int remove_curls(Pd& d) {
  int kinks = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < d.x.size() && !changed; ++i) {
      const Quad q = d.x[i];
      for (int s = 0; s < 4; ++s) {
        if (q[s] != q[(s + 1) % 4]) continue;
        kinks += s % 2 == 0 ? 1 : -1;
        const int p = q[(s + 2) % 4];
        const int r = q[(s + 3) % 4];
        erase_crossing(d, i);
        if (p == r)
          ++d.loops;
        else
          rename_label(d, r, p);
        changed = true;
        break;
      }
    }
  }
  return kinks;
}

// Splits the crossings into connected pieces; free loops are not included.
std::vector<Pd> split_pieces(const Pd& d) {
  const int n = static_cast<int>(d.x.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::unordered_map<int, int> first;
  for (int c = 0; c < n; ++c)
    for (int l : d.x[c]) {
      auto [it, inserted] = first.try_emplace(l, c);
      if (!inserted) parent[find(c)] = find(it->second);
    }
  std::vector<int> piece_of(n, -1);
  std::vector<Pd> out;
  for (int c = 0; c < n; ++c) {
    const int root = find(c);
    if (piece_of[root] < 0) {
      piece_of[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    Pd& p = out[piece_of[root]];
    p.x.push_back(d.x[c]);
    if (!d.sign.empty()) p.sign.push_back(d.sign[c]);
  }
  return out;
}

std::vector<int> partners(const Pd& d) {
  const int n = static_cast<int>(d.x.size());
  std::unordered_map<int, int> seen;
  std::vector<int> partner(4 * n, -1);
  for (int o = 0; o < 4 * n; ++o) {
    auto [it, inserted] = seen.try_emplace(d.x[o / 4][o % 4], o);
    if (!inserted) {
      partner[o] = it->second;
      partner[it->second] = o;
    }
  }
  return partner;
}

bool is_outgoing(const Pd& d, int occ) {
  const int s = occ % 4;
  return s == 2 || s == (d.sign[occ / 4] > 0 ? 1 : 3);
}

// Relabels a connected piece by walking it from every admissible starting
// point and keeps the lexicographically smallest sorted crossing list.
std::pair<Pd, std::vector<int>> canonical(const Pd& d, bool oriented) {
  const int n = static_cast<int>(d.x.size());
  const auto partner = partners(d);
  const int width = oriented ? 5 : 4;

  std::vector<int> best_key;
  Pd best;
  std::vector<int> lab(4 * n);
  std::vector<int> first_entry(n);
  std::vector<int> order;
  std::vector<std::pair<std::array<int, 5>, int>> rows(n);

  for (int start = 0; start < 4 * n; ++start) {
    if (oriented && !is_outgoing(d, start)) continue;
    std::fill(lab.begin(), lab.end(), -1);
    std::fill(first_entry.begin(), first_entry.end(), -1);
    order.clear();
    int next = 0;
    auto walk = [&](int exit_occ) {
      for (int e = exit_occ; lab[e] < 0;) {
        const int in = partner[e];
        lab[e] = lab[in] = next++;
        const int c = in / 4;
        if (first_entry[c] < 0) {
          first_entry[c] = in % 4;
          order.push_back(c);
        }
        e = in ^ 2;
      }
    };
    walk(start);
    for (std::size_t k = 0; k < order.size(); ++k) {
      const int c = order[k];
      const int s = first_entry[c];
      int slot = (s + 1) % 4;
      if (oriented && !is_outgoing(d, 4 * c + slot)) slot = (s + 3) % 4;
      if (lab[4 * c + slot] < 0) walk(4 * c + slot);
    }

    for (int c = 0; c < n; ++c) {
      std::array<int, 5> r{};
      if (oriented) {
        r[0] = d.sign[c];
        for (int s = 0; s < 4; ++s) r[s + 1] = lab[4 * c + s];
      } else {
        Quad a{lab[4 * c], lab[4 * c + 1], lab[4 * c + 2], lab[4 * c + 3]};
        Quad b{a[2], a[3], a[0], a[1]};
        const Quad& m = std::min(a, b);
        std::copy(m.begin(), m.end(), r.begin());
      }
      rows[c] = {r, c};
    }
    std::sort(rows.begin(), rows.end());
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(n * width));
    for (const auto& [r, c] : rows) key.insert(key.end(), r.begin(), r.begin() + width);
    if (best_key.empty() || key < best_key) {
      best_key = std::move(key);
      best.x.clear();
      best.sign.clear();
      for (const auto& [r, c] : rows) {
        if (oriented) {
          best.sign.push_back(r[0]);
          best.x.push_back({r[1], r[2], r[3], r[4]});
        } else {
          best.x.push_back({r[0], r[1], r[2], r[3]});
        }
      }
    }
  }
  return {std::move(best), std::move(best_key)};
}

// Removes crossing c joining the arcs at the given slot pairs.
Pd smooth(const Pd& d, std::size_t c, std::pair<int, int> p1, std::pair<int, int> p2) {
  Pd out = d;
  const Quad q = d.x[c];
  erase_crossing(out, c);
  int u1 = q[p1.first], v1 = q[p1.second];
  if (u1 == v1) {
    ++out.loops;
  } else {
    rename_label(out, v1, u1);
  }
  int u2 = q[p2.first], v2 = q[p2.second];
  if (u1 != v1) {
    if (u2 == v1) u2 = u1;
    if (v2 == v1) v2 = u1;
  }
  if (u2 == v2)
    ++out.loops;
  else
    rename_label(out, v2, u2);
  return out;
}

void switch_crossing(Pd& d, std::size_t c) {
  Quad& q = d.x[c];
  if (d.sign.empty() || d.sign[c] < 0) {
    q = {q[1], q[2], q[3], q[0]};
  } else {
    q = {q[3], q[0], q[1], q[2]};
  }
  if (!d.sign.empty()) d.sign[c] = -d.sign[c];
}

struct Passage {
  int crossing;
  bool under;
  int entry_slot;
};

class Engine {
 public:
  Engine(bool oriented, bool reduce_kinks) : oriented_(oriented), reduce_kinks_(reduce_kinks) {
    const auto z_inv = LaurentPoly2::monomial(1, 0, -1);
    if (oriented_) {
      loop_ = (LaurentPoly2::monomial(1, 1, 0) - LaurentPoly2::monomial(1, -1, 0)) * z_inv;
    } else {
      loop_ = (LaurentPoly2::monomial(1, 1, 0) + LaurentPoly2::monomial(1, -1, 0)) * z_inv -
              LaurentPoly2::constant(1);
    }
  }

  LaurentPoly2 eval(Pd d) {
    int kinks = 0;
    if (reduce_kinks_) kinks = remove_curls(d);
    auto pieces = split_pieces(d);
    const int parts = static_cast<int>(pieces.size()) + d.loops;
    LaurentPoly2 result = loop_power(parts - 1);
    if (!oriented_ && kinks != 0) result = result.shifted(kCurlPower * kinks, 0);
    for (auto& p : pieces) {
      auto [canon, key] = canonical(p, oriented_);
      auto it = memo_.find(key);
      if (it == memo_.end()) {
        LaurentPoly2 v = piece(canon);
        it = memo_.emplace(std::move(key), std::move(v)).first;
      }
      result *= it->second;
    }
    return result;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  const LaurentPoly2& loop_power(int k) {
    while (static_cast<int>(powers_.size()) <= k) {
      powers_.push_back(powers_.empty() ? LaurentPoly2::constant(1) : powers_.back() * loop_);
    }
    return powers_[k];
  }

  // Value of a connected curl-free piece: switch crossings until the diagram
  // is descending, recursing on the smoothings made along the way.
  LaurentPoly2 piece(const Pd& d) {
    const int n = static_cast<int>(d.x.size());
    const auto partner = partners(d);

    std::vector<std::vector<Passage>> comps;
    std::vector<int> seen(4 * n, 0);
    for (int o = 0; o < 4 * n; ++o) {
      if (seen[o] || (oriented_ && is_outgoing(d, o))) continue;
      std::vector<Passage> cyc;
      int e = o;
      do {
        seen[e] = seen[e ^ 2] = 1;
        cyc.push_back({e / 4, (e % 4) % 2 == 0, e % 4});
        e = partner[e ^ 2];
      } while (e != o);
      comps.push_back(std::move(cyc));
    }
    const int k = static_cast<int>(comps.size());

    std::vector<int> under_comp(n), over_comp(n), under_slot(n), over_slot(n);
    for (int ci = 0; ci < k; ++ci)
      for (const auto& p : comps[ci]) {
        (p.under ? under_comp : over_comp)[p.crossing] = ci;
        (p.under ? under_slot : over_slot)[p.crossing] = p.entry_slot;
      }

    // Base point and direction per component, fewest self-crossings met
    // from below first.
    std::vector<char> bad(n, 0);
    std::vector<char> mark(n, 0);
    for (int ci = 0; ci < k; ++ci) {
      const auto& cyc = comps[ci];
      const int len = static_cast<int>(cyc.size());
      int best = -1, best_b = 0, best_dir = 1;
      for (int dir : {1, -1}) {
        if (dir < 0 && oriented_) break;
        for (int b = 0; b < len; ++b) {
          int count = 0;
          for (int t = 0; t < len; ++t) {
            const auto& p = cyc[((b + dir * t) % len + len) % len];
            if (under_comp[p.crossing] != over_comp[p.crossing]) continue;
            if (mark[p.crossing] != 1 + ci) {
              mark[p.crossing] = static_cast<char>(1 + ci);
              if (p.under) ++count;
            }
          }
          for (const auto& p : cyc) mark[p.crossing] = 0;
          if (best < 0 || count < best) {
            best = count;
            best_b = b;
            best_dir = dir;
          }
        }
      }
      for (int t = 0; t < len; ++t) {
        const auto& p = cyc[((best_b + best_dir * t) % len + len) % len];
        if (under_comp[p.crossing] != over_comp[p.crossing]) continue;
        if (!mark[p.crossing]) {
          mark[p.crossing] = 1;
          if (p.under) bad[p.crossing] = 1;
        }
      }
    }

    // Stacking order of components: earlier components lie on top.
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_pos = perm;
    if (k > 1) {
      auto inter_bad = [&](const std::vector<int>& pos) {
        int count = 0;
        for (int c = 0; c < n; ++c)
          if (under_comp[c] != over_comp[c] && pos[under_comp[c]] < pos[over_comp[c]]) ++count;
        return count;
      };
      if (k <= 6) {
        int best = -1;
        do {
          std::vector<int> pos(k);
          for (int i = 0; i < k; ++i) pos[perm[i]] = i;
          const int count = inter_bad(pos);
          if (best < 0 || count < best) {
            best = count;
            best_pos = pos;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      for (int c = 0; c < n; ++c)
        if (under_comp[c] != over_comp[c] && best_pos[under_comp[c]] < best_pos[over_comp[c]]) bad[c] = 1;
    }

    LaurentPoly2 acc;
    LaurentPoly2 coef = LaurentPoly2::constant(1);
    Pd cur = d;
    const auto z = LaurentPoly2::monomial(1, 0, 1);
    for (int c = 0; c < n; ++c) {
      if (!bad[c]) continue;
      if (oriented_) {
        const bool pos = cur.sign[c] > 0;
        Pd s0 = pos ? smooth(cur, c, {0, 1}, {3, 2}) : smooth(cur, c, {0, 3}, {1, 2});
        const auto c0 = pos ? LaurentPoly2::monomial(1, -1, 1) : LaurentPoly2::monomial(-1, 1, 1);
        acc += coef * c0 * eval(std::move(s0));
        coef = coef.shifted(pos ? -2 : 2, 0);
      } else {
        auto sum = eval(smooth(cur, c, {0, 1}, {2, 3})) + eval(smooth(cur, c, {0, 3}, {1, 2}));
        acc += coef * z * sum;
        coef = coef.scaled(-1);
      }
      switch_crossing(cur, c);
    }

    LaurentPoly2 base = loop_power(k - 1);
    if (!oriented_) {
      int w_self = 0;
      for (int c = 0; c < n; ++c) {
        if (under_comp[c] != over_comp[c]) continue;
        const int s = ((over_slot[c] - under_slot[c]) % 4 + 4) % 4 == 3 ? 1 : -1;
        w_self += bad[c] ? -s : s;
      }
      base = base.shifted(kCurlPower * w_self, 0);
    }
    acc += coef * base;
    return acc;
  }

  bool oriented_;
  bool reduce_kinks_;
  LaurentPoly2 loop_;
  std::vector<LaurentPoly2> powers_;
  std::unordered_map<std::vector<int>, LaurentPoly2, KeyHash> memo_;
};

void check_limit(const LinkDiagram& d, const SkeinOptions& opts) {
  if (d.crossing_count() > opts.crossing_limit)
    throw Error(Errc::CrossingLimitExceeded, "diagram has " + std::to_string(d.crossing_count()) +
                                                 " crossings, limit is " + std::to_string(opts.crossing_limit));
}

Pd to_pd(const LinkDiagram& d, bool oriented) {
  Pd p;
  p.x = d.raw();
  if (oriented)
    for (const auto& c : d.crossings()) p.sign.push_back(c.sign);
  p.loops = d.free_loops();
  return p;
}

}  // namespace

LaurentPoly2 kauffman_F(const LinkDiagram& d, const SkeinOptions& opts) {
  check_limit(d, opts);
  Engine eng(false, opts.reduce_kinks);
  auto lambda = eng.eval(to_pd(d, false));
  g_last_memo_size = eng.memo_size();
  return lambda.shifted(-kCurlPower * d.writhe(), 0);
}

LaurentPoly2 homfly(const LinkDiagram& d, const SkeinOptions& opts) {
  check_limit(d, opts);
  Engine eng(true, opts.reduce_kinks);
  auto p = eng.eval(to_pd(d, true));
  g_last_memo_size = eng.memo_size();
  return p;
}

LaurentPoly2 dubrovnik_transform(const LaurentPoly2& f) {
  LaurentPoly2 out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    const int r = ((e.first - e.second) % 4 + 4) % 4;
    if (r % 2 != 0)
      throw Error(Errc::NonRealResult, "term a^" + std::to_string(e.first) + " z^" + std::to_string(e.second) +
                                           " has an imaginary image");
    out.add_term(e.first, e.second, r == 0 ? c : checked_mul(c, -1));
  }
  return out;
}

UniPoly leading_a_part(const LaurentPoly2& p) {
  if (p.is_zero()) throw Error(Errc::DegreeOfZero, "leading part of the zero polynomial");
  const int top = p.terms().rbegin()->first.first;
  UniPoly out;
  for (auto it = p.terms().lower_bound({top, INT32_MIN}); it != p.terms().end(); ++it)
    out.coeffs[it->first.second] = it->second;
  return out;
}

std::size_t last_skein_memo_size() noexcept { return g_last_memo_size; }

}  // namespace legknot
