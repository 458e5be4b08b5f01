#include "legknot/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <vector>

#include "kh_internal.hpp"
#include "legknot/error.hpp"
#include "sparse_rank.hpp"

namespace legknot {

Field parse_field(std::string_view text) {
  if (text == "Q" || text == "q" || text == "rational" || text == "QQ") return Field::Rational;
  if (text == "F2" || text == "f2" || text == "2" || text == "Z2") return Field::F2;
  throw Error(Errc::FieldUnsupported, "unsupported coefficient field '" + std::string(text) + "'");
}

std::string_view field_name(Field f) noexcept { return f == Field::F2 ? "F2" : "Q"; }

KhMode parse_mode(std::string_view text) {
  if (text == "scan") return KhMode::Scan;
  if (text == "naive") return KhMode::Naive;
  throw Error(Errc::UsageError, "unknown Khovanov mode '" + std::string(text) + "'");
}

std::int64_t KhTable::rank(int i, int j) const {
  auto it = ranks.find({i, j});
  return it == ranks.end() ? 0 : it->second;
}

LaurentPoly2 KhTable::poincare() const {
  LaurentPoly2 p(Vars::QT);
  for (const auto& [ij, r] : ranks) p.add_term(ij.second, ij.first, r);
  return p;
}

UniPoly KhTable::euler_characteristic() const {
  UniPoly u;
  for (const auto& [ij, r] : ranks) {
    auto& c = u.coeffs[ij.second];
    c = checked_add(c, ij.first % 2 == 0 ? r : -r);
  }
  std::erase_if(u.coeffs, [](const auto& kv) { return kv.second == 0; });
  return u;
}

std::string KhTable::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, r] : ranks) {
    if (!first) os << "; ";
    first = false;
    os << ij.first << ' ' << ij.second << ' ' << r;
  }
  return os.str();
}

KhTable mirror_table(const KhTable& t) {
  KhTable m;
  m.field = t.field;
  m.crossings = t.crossings;
  m.n_plus = t.n_minus;
  m.n_minus = t.n_plus;
  for (const auto& [ij, r] : t.ranks) m.ranks.emplace(std::pair{-ij.first, -ij.second}, r);
  return m;
}

namespace {

std::pair<int, int> shifted_extent(const KhTable& t) {
  if (t.empty()) throw Error(Errc::EmptyTable, "Khovanov table has no entries");
  int lo = t.ranks.begin()->first.second - t.ranks.begin()->first.first;
  int hi = lo;
  for (const auto& [ij, r] : t.ranks) {
    lo = std::min(lo, ij.second - ij.first);
    hi = std::max(hi, ij.second - ij.first);
  }
  return {lo, hi};
}

}  // namespace

int kh_tb_bound(const KhTable& t) { return shifted_extent(t).first; }

int kh_breadth(const KhTable& t) {
  auto [lo, hi] = shifted_extent(t);
  return hi - lo;
}

namespace detail {

CompactPd compact_pd(const LinkDiagram& d) {
  CompactPd c;
  std::map<int, int> ids;
  for (const auto& x : d.crossings()) {
    std::array<int, 4> a{};
    for (int s = 0; s < 4; ++s) {
      auto [it, inserted] = ids.try_emplace(x.arcs[s], static_cast<int>(ids.size()));
      a[s] = it->second;
    }
    c.xs.push_back(a);
  }
  c.labels = static_cast<int>(ids.size());
  return c;
}

KhTable finish_table(const std::map<std::pair<int, int>, std::int64_t>& raw, const LinkDiagram& d, Field field) {
  const int np = d.positive_crossings();
  const int nm = d.negative_crossings();
  // Each free loop tensors with q + q^-1.
  std::map<std::pair<int, int>, std::int64_t> cur = raw;
  for (int k = 0; k < d.free_loops(); ++k) {
    std::map<std::pair<int, int>, std::int64_t> next;
    for (const auto& [ij, r] : cur) {
      next[{ij.first, ij.second + 1}] = checked_add(next[{ij.first, ij.second + 1}], r);
      next[{ij.first, ij.second - 1}] = checked_add(next[{ij.first, ij.second - 1}], r);
    }
    cur = std::move(next);
  }
  KhTable t;
  t.field = field;
  t.crossings = d.crossing_count();
  t.n_plus = np;
  t.n_minus = nm;
  for (const auto& [ij, r] : cur)
    if (r > 0) t.ranks.emplace(std::pair{ij.first - nm, ij.second + np - 2 * nm}, r);
  return t;
}

// Naive cube: every resolution, every labelling of its circles.
std::map<std::pair<int, int>, std::int64_t> naive_ranks(const CompactPd& pd, Field field, std::size_t budget) {
  const int n = static_cast<int>(pd.xs.size());
  const int E = pd.labels;
  const std::uint32_t states = 1u << n;

  std::vector<int> circles(states);
  std::vector<std::vector<int>> circle_of(states);
  std::vector<std::vector<int>> rep(states);
  std::vector<int> parent(E);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::size_t> offset(states + 1, 0);
  for (std::uint32_t s = 0; s < states; ++s) {
    for (int i = 0; i < E; ++i) parent[i] = i;
    for (int c = 0; c < n; ++c) {
      const auto& a = pd.xs[c];
      if ((s >> c) & 1u) {
        parent[find(a[0])] = find(a[3]);
        parent[find(a[1])] = find(a[2]);
      } else {
        parent[find(a[0])] = find(a[1]);
        parent[find(a[2])] = find(a[3]);
      }
    }
    std::vector<int> id(E, -1), of(E);
    int k = 0;
    for (int i = 0; i < E; ++i) {
      const int r = find(i);
      if (id[r] < 0) {
        id[r] = k++;
        rep[s].push_back(i);
      }
      of[i] = id[r];
    }
    circles[s] = k;
    circle_of[s] = std::move(of);
    if (k > 40) throw Error(Errc::BudgetExceeded, "resolution has too many circles");
    offset[s + 1] = offset[s] + (std::size_t{1} << k);
    if (offset[s + 1] > budget)
      throw Error(Errc::BudgetExceeded, "cube exceeds the generator budget of " + std::to_string(budget));
  }

  using Row = std::vector<std::pair<int, std::int64_t>>;
  // (h, j) -> rows of the differential leaving that block
  std::map<std::pair<int, int>, std::vector<Row>> blocks;
  for (std::uint32_t s = 0; s < states; ++s) {
    const int h = std::popcount(s);
    const int k = circles[s];
    for (std::uint64_t lab = 0; lab < (std::uint64_t{1} << k); ++lab) {
      const int j = 2 * std::popcount(lab) - k + h;
      Row row;
      for (int c = 0; c < n; ++c) {
        if ((s >> c) & 1u) continue;
        const std::uint32_t t = s | (1u << c);
        const std::int64_t sign = (std::popcount(s & ((1u << c) - 1)) % 2 == 0) ? 1 : -1;
        const auto& a = pd.xs[c];
        const int A = circle_of[s][a[0]];
        const int B = circle_of[s][a[2]];
        const auto& of_t = circle_of[t];
        // labelling of target circles not touched by the crossing
        std::uint64_t base = 0;
        for (int ci = 0; ci < circles[t]; ++ci) {
          const int src = circle_of[s][rep[t][ci]];
          if (src != A && src != B && ((lab >> src) & 1u)) base |= std::uint64_t{1} << ci;
        }
        const bool vA = (lab >> A) & 1u;
        if (A != B) {
          const bool vB = (lab >> B) & 1u;
          const int M = of_t[a[0]];
          base &= ~(std::uint64_t{1} << M);
          if (vA && vB) {
            row.emplace_back(static_cast<int>(offset[t] + (base | (std::uint64_t{1} << M))), sign);
          } else if (vA || vB) {
            row.emplace_back(static_cast<int>(offset[t] + base), sign);
          }
        } else {
          const int C1 = of_t[a[0]];
          const int C2 = of_t[a[1]];
          if (C1 == C2) throw Error(Errc::InconsistentRecord, "non-orientable smoothing in cube");
          base &= ~((std::uint64_t{1} << C1) | (std::uint64_t{1} << C2));
          if (vA) {
            row.emplace_back(static_cast<int>(offset[t] + (base | (std::uint64_t{1} << C1))), sign);
            row.emplace_back(static_cast<int>(offset[t] + (base | (std::uint64_t{1} << C2))), sign);
          } else {
            row.emplace_back(static_cast<int>(offset[t] + base), sign);
          }
        }
      }
      blocks[{h, j}].push_back(std::move(row));
    }
  }
  return homology_ranks_of(blocks, field);
}

}  // namespace detail

KhTable khovanov(const LinkDiagram& d, const KhOptions& options) {
  const int limit = options.crossing_limit >= 0 ? options.crossing_limit
                                                : (options.mode == KhMode::Scan ? 20 : 10);
  if (d.crossing_count() > limit)
    throw Error(Errc::CrossingLimitExceeded, std::to_string(d.crossing_count()) + " crossings exceed the limit of " +
                                                 std::to_string(limit));
  if (options.mode == KhMode::Naive && d.crossing_count() > 30)
    throw Error(Errc::CrossingLimitExceeded, "naive cube is capped at 30 crossings");
  const auto pd = detail::compact_pd(d);
  std::map<std::pair<int, int>, std::int64_t> raw;
  if (d.crossing_count() == 0) {
    raw[{0, 0}] = 1;
  } else if (options.mode == KhMode::Naive) {
    raw = detail::naive_ranks(pd, options.field, options.generator_budget);
  } else {
    raw = detail::scan_ranks(pd, options.field, options.generator_budget);
  }
  return detail::finish_table(raw, d, options.field);
}

}  // namespace legknot
