#include "legknot/grid.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "legknot/error.hpp"

namespace legknot {

namespace {

struct Rows {
  std::vector<int> xc;  // xc[j]: column of the X marker in row j
  std::vector<int> oc;
};

Rows row_lookup(const GridDiagram& g) {
  const int n = g.size();
  Rows r{std::vector<int>(n + 1), std::vector<int>(n + 1)};
  for (int i = 1; i <= n; ++i) {
    r.xc[g.x()[i - 1]] = i;
    r.oc[g.o()[i - 1]] = i;
  }
  return r;
}

bool strictly_between(int v, int a, int b) { return std::min(a, b) < v && v < std::max(a, b); }

void check_permutation(const std::vector<int>& p, const char* which) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : p) {
    if (v < 1 || v > n || seen[v])
      throw Error(Errc::NotAPermutation, std::string(which) + " is not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

int count_components(const std::vector<int>& x, const std::vector<int>& o) {
  const int n = static_cast<int>(x.size());
  std::vector<int> xc(n + 1);
  for (int i = 1; i <= n; ++i) xc[x[i - 1]] = i;
  std::vector<bool> seen(n + 1, false);
  int comps = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    ++comps;
    for (int i = s; !seen[i]; i = xc[o[i - 1]]) seen[i] = true;
  }
  return comps;
}

}  // namespace

GridDiagram make_grid(std::vector<int> x, std::vector<int> o) {
  if (x.size() != o.size()) throw Error(Errc::NotAPermutation, "x and o have different lengths");
  if (x.size() < 2) throw Error(Errc::TooSmall, "grid size must be at least 2");
  check_permutation(x, "x");
  check_permutation(o, "o");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == o[i])
      throw Error(Errc::MarkerCollision, "column " + std::to_string(i + 1) + " has both markers in one cell");
  GridDiagram g;
  g.components_ = count_components(x, o);
  g.x_ = std::move(x);
  g.o_ = std::move(o);
  return g;
}

int grid_components(const GridDiagram& g) { return g.components(); }

GridInvariants grid_invariants(const GridDiagram& g) {
  const int n = g.size();
  const auto& x = g.x();
  const auto& o = g.o();
  const Rows rows = row_lookup(g);
  GridInvariants inv;
  for (int i = 1; i <= n; ++i) {
    const int vdir = o[i - 1] > x[i - 1] ? 1 : -1;
    for (int j = 1; j <= n; ++j) {
      if (!strictly_between(j, x[i - 1], o[i - 1])) continue;
      if (!strictly_between(i, rows.oc[j], rows.xc[j])) continue;
      const int hdir = rows.xc[j] > rows.oc[j] ? 1 : -1;
      inv.w += -vdir * hdir;
    }
  }
  // Each marker is a corner; classify by where the other ends of its two
  // segments lie.
  for (int i = 1; i <= n; ++i) {
    for (int is_x = 0; is_x < 2; ++is_x) {
      const int row = is_x ? x[i - 1] : o[i - 1];
      const int other_row = is_x ? o[i - 1] : x[i - 1];
      const int other_col = is_x ? rows.oc[row] : rows.xc[row];
      const bool up = other_row > row;
      const bool left = other_col < i;
      if (up && left) {
        ++inv.c;
        if (!is_x) ++inv.c_down;
      }
      if (!up && !left && is_x) ++inv.c_down;
    }
  }
  inv.tb = inv.w - inv.c;
  inv.sl = inv.w - inv.c_down;
  inv.r = inv.tb - inv.sl;
  return inv;
}

GridDiagram rotate_mirror(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> nx(n), no(n);
  for (int i = 1; i <= n; ++i) {
    no[g.x()[i - 1] - 1] = n + 1 - i;
    nx[g.o()[i - 1] - 1] = n + 1 - i;
  }
  return make_grid(std::move(nx), std::move(no));
}

GridDiagram rotate_half(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> nx(n), no(n);
  for (int i = 1; i <= n; ++i) {
    nx[n - i] = n + 1 - g.x()[i - 1];
    no[n - i] = n + 1 - g.o()[i - 1];
  }
  return make_grid(std::move(nx), std::move(no));
}

GridDiagram reverse_orientation(const GridDiagram& g) { return make_grid(g.o(), g.x()); }

LinkDiagram grid_to_link_diagram(const GridDiagram& g) {
  const int n = g.size();
  const auto& x = g.x();
  const auto& o = g.o();
  const Rows rows = row_lookup(g);

  struct Passage {
    int crossing;
    bool over;
  };
  struct Info {
    int vdir = 0, hdir = 0;
    int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
  };
  std::map<std::pair<int, int>, int> ids;
  std::vector<Info> info;
  auto crossing_id = [&](int col, int row) {
    auto [it, inserted] = ids.try_emplace({col, row}, static_cast<int>(info.size()));
    if (inserted) {
      Info c;
      c.vdir = o[col - 1] > x[col - 1] ? 1 : -1;
      c.hdir = rows.xc[row] > rows.oc[row] ? 1 : -1;
      info.push_back(c);
    }
    return it->second;
  };

  std::vector<bool> seen(n + 1, false);
  int next_label = 1;
  int free_loops = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<Passage> path;
    for (int i = s; !seen[i];) {
      seen[i] = true;
      const int from = x[i - 1], to = o[i - 1];
      const int dv = to > from ? 1 : -1;
      for (int j = from + dv; j != to; j += dv)
        if (strictly_between(i, rows.oc[j], rows.xc[j])) path.push_back({crossing_id(i, j), true});
      const int next = rows.xc[to];
      const int dh = next > i ? 1 : -1;
      for (int k = i + dh; k != next; k += dh)
        if (strictly_between(to, x[k - 1], o[k - 1])) path.push_back({crossing_id(k, to), false});
      i = next;
    }
    if (path.empty()) {
      ++free_loops;
      continue;
    }
    const int len = static_cast<int>(path.size());
    for (int t = 0; t < len; ++t) {
      const int in = next_label + (t + len - 1) % len;
      const int out = next_label + t;
      Info& c = info[path[t].crossing];
      if (path[t].over) {
        c.over_in = in;
        c.over_out = out;
      } else {
        c.under_in = in;
        c.under_out = out;
      }
    }
    next_label += len;
  }

  std::vector<std::array<int, 4>> xs;
  xs.reserve(info.size());
  for (const Info& c : info) {
    const int below = c.vdir > 0 ? c.over_in : c.over_out;
    const int above = c.vdir > 0 ? c.over_out : c.over_in;
    if (c.hdir > 0)
      xs.push_back({c.under_in, below, c.under_out, above});
    else
      xs.push_back({c.under_in, above, c.under_out, below});
  }
  return LinkDiagram::from_pd(xs, free_loops);
}

GridDiagram random_grid(int n, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::TooSmall, "grid size must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<int> x(n), o(n);
  while (true) {
    std::iota(x.begin(), x.end(), 1);
    std::iota(o.begin(), o.end(), 1);
    for (auto* p : {&x, &o})
      for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap((*p)[i], (*p)[pick(rng)]);
      }
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && x[i] != o[i];
    if (ok) return make_grid(x, o);
  }
}

namespace {

std::vector<int> int_list(std::string_view s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ',' || s[pos] == ' ' || s[pos] == '[' || s[pos] == ']')) ++pos;
    if (pos >= s.size()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc()) throw Error(Errc::SyntaxError, "bad integer in grid text");
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

}  // namespace

GridDiagram parse_grid(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw Error(Errc::SyntaxError, "empty grid text");
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      return make_grid(j.at("x").get<std::vector<int>>(), j.at("o").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::SyntaxError, std::string("grid JSON: ") + e.what());
    }
  }
  std::string s(text);
  std::replace_if(s.begin(), s.end(), [](char ch) { return ch == '\n' || ch == '\t' || ch == '\r'; }, ' ');
  const auto px = s.find("x:");
  const auto po = s.find("o:");
  if (px == std::string::npos || po == std::string::npos)
    throw Error(Errc::SyntaxError, "grid text must look like \"x:2,1 o:1,2\"");
  auto field = [&](std::size_t at, std::size_t other) {
    const std::size_t end = other > at ? other : s.size();
    return int_list(std::string_view(s).substr(at + 2, end - at - 2));
  };
  return make_grid(field(px, po), field(po, px));
}

std::string grid_to_string(const GridDiagram& g) {
  std::ostringstream os;
  os << "x:";
  for (int i = 0; i < g.size(); ++i) os << (i ? "," : "") << g.x()[i];
  os << " o:";
  for (int i = 0; i < g.size(); ++i) os << (i ? "," : "") << g.o()[i];
  return os.str();
}

}  // namespace legknot
