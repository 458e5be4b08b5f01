#include "legknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "legknot/error.hpp"

namespace legknot {

namespace {

constexpr int kUnknown = -1;
constexpr int kIn = 1;
constexpr int kOut = 0;

}  // namespace

LinkDiagram LinkDiagram::from_pd(const std::vector<std::array<int, 4>>& xs, int free_loops) {
  if (free_loops < 0) throw Error(Errc::SyntaxError, "negative free loop count");
  const int n = static_cast<int>(xs.size());
  const int occs = 4 * n;

  std::map<int, std::vector<int>> where;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) where[xs[c][s]].push_back(4 * c + s);

  std::vector<int> partner(occs, -1);
  for (const auto& [label, list] : where) {
    if (list.size() != 2)
      throw Error(Errc::ArcMultiplicity,
                  "arc " + std::to_string(label) + " occurs " + std::to_string(list.size()) + " times");
    partner[list[0]] = list[1];
    partner[list[1]] = list[0];
  }

  // Two-colour the occurrence graph: an arc has one head and one tail, and a
  // strand entering a crossing leaves through the opposite slot.
  std::vector<int> dir(occs, kUnknown);
  std::vector<int> comp(occs, -1);
  auto propagate = [&](int start, int value, int comp_id) {
    std::vector<int> stack{start};
    dir[start] = value;
    comp[start] = comp_id;
    while (!stack.empty()) {
      const int o = stack.back();
      stack.pop_back();
      for (int nb : {partner[o], o ^ 2}) {
        const int want = 1 - dir[o];
        if (dir[nb] == kUnknown) {
          dir[nb] = want;
          comp[nb] = comp_id;
          stack.push_back(nb);
        } else if (dir[nb] != want) {
          throw Error(Errc::OrientationConflict,
                      "arc " + std::to_string(xs[nb / 4][nb % 4]) + " cannot be oriented consistently");
        }
      }
    }
  };

  int components = 0;
  for (int c = 0; c < n; ++c) {
    if (dir[4 * c] == kUnknown) {
      propagate(4 * c, kIn, components++);
    } else if (dir[4 * c] != kIn) {
      throw Error(Errc::OrientationConflict,
                  "arc " + std::to_string(xs[c][0]) + " must enter crossing " + std::to_string(c + 1) +
                      " as the under-strand");
    }
  }
  // Components that only pass over: orient the smallest label away from its
  // first occurrence.
  for (const auto& [label, list] : where) {
    if (dir[list[0]] == kUnknown) propagate(list[0], kOut, components++);
  }

  LinkDiagram d;
  d.crossings_.reserve(n);
  for (int c = 0; c < n; ++c) {
    Crossing x;
    x.arcs = xs[c];
    x.sign = dir[4 * c + 3] == kIn ? +1 : -1;
    d.crossings_.push_back(x);
  }
  d.free_loops_ = free_loops;
  d.components_ = components + free_loops;
  return d;
}

int LinkDiagram::writhe() const noexcept {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign;
  return w;
}

int LinkDiagram::positive_crossings() const noexcept {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(),
                                        [](const Crossing& x) { return x.sign > 0; }));
}

std::vector<std::array<int, 4>> LinkDiagram::raw() const {
  std::vector<std::array<int, 4>> out;
  out.reserve(crossings_.size());
  for (const auto& x : crossings_) out.push_back(x.arcs);
  return out;
}

std::string LinkDiagram::to_pd_string() const {
  std::ostringstream os;
  os << "PD[";
  int max_label = 0;
  bool first = true;
  for (const auto& x : crossings_) {
    if (!first) os << ',';
    first = false;
    os << "X[" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3] << ']';
    for (int a : x.arcs) max_label = std::max(max_label, a);
  }
  for (int k = 1; k <= free_loops_; ++k) {
    if (!first) os << ',';
    first = false;
    os << "O[" << max_label + k << ']';
  }
  os << ']';
  return os.str();
}

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view s) : s_(s) {}

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view w) {
    ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    ws();
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  bool at_end() {
    ws();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::array<int, 4> read_quad(PdScanner& sc, char open, char close) {
  sc.expect(open);
  std::array<int, 4> q{};
  for (int i = 0; i < 4; ++i) {
    if (i) sc.expect(',');
    q[i] = sc.integer();
  }
  sc.expect(close);
  return q;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text, int extra_free_loops) {
  PdScanner sc(text);
  std::vector<std::array<int, 4>> xs;
  int loops = extra_free_loops;
  if (sc.accept_word("PD")) {
    sc.expect('[');
    if (!sc.accept(']')) {
      do {
        if (sc.accept_word("X")) {
          xs.push_back(read_quad(sc, '[', ']'));
        } else if (sc.accept_word("O")) {
          sc.expect('[');
          sc.integer();
          sc.expect(']');
          ++loops;
        } else {
          sc.fail("expected X[...] or O[...]");
        }
      } while (sc.accept(','));
      sc.expect(']');
    }
  } else if (sc.peek('[')) {
    sc.expect('[');
    if (!sc.accept(']')) {
      do {
        xs.push_back(read_quad(sc, '[', ']'));
      } while (sc.accept(','));
      sc.expect(']');
    }
  } else {
    sc.fail("expected PD[...] or [[...]]");
  }
  if (!sc.at_end()) sc.fail("trailing characters");
  if (xs.empty() && loops == 0) throw Error(Errc::SyntaxError, "diagram has no components");
  return LinkDiagram::from_pd(xs, loops);
}

LinkDiagram mirror_diagram(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> xs;
  xs.reserve(d.crossings().size());
  for (const auto& x : d.crossings()) {
    const auto& a = x.arcs;
    // The old over-strand becomes the under-strand; rotate so its incoming arc
    // sits in slot 0 (counterclockwise order is unchanged).
    if (x.sign > 0)
      xs.push_back({a[3], a[0], a[1], a[2]});
    else
      xs.push_back({a[1], a[2], a[3], a[0]});
  }
  return LinkDiagram::from_pd(xs, d.free_loops());
}

int BraidWord::writhe() const noexcept {
  int w = 0;
  for (int l : letters) w += l > 0 ? 1 : -1;
  return w;
}

int BraidWord::permutation_cycles() const {
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  // perm[p] = strand currently at position p
  for (int l : letters) {
    const int k = std::abs(l);
    std::swap(perm[k - 1], perm[k]);
  }
  std::vector<bool> seen(strands, false);
  int cycles = 0;
  for (int p = 0; p < strands; ++p) {
    if (seen[p]) continue;
    ++cycles;
    for (int q = p; !seen[q]; q = perm[q]) seen[q] = true;
  }
  return cycles;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << "m=" << strands << ':';
  for (int l : letters) os << ' ' << l;
  return os.str();
}

BraidWord make_braid(int strands, std::vector<int> letters) {
  if (strands < 1) throw Error(Errc::LetterOutOfRange, "braid needs at least one strand");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      throw Error(Errc::LetterOutOfRange,
                  "letter " + std::to_string(l) + " out of range for " + std::to_string(strands) + " strands");
  return BraidWord{strands, std::move(letters)};
}

BraidWord parse_braid(std::string_view text) {
  PdScanner sc(text);
  if (!sc.accept('m')) sc.fail("expected 'm=<strands>:'");
  sc.expect('=');
  const int m = sc.integer();
  sc.expect(':');
  std::vector<int> letters;
  while (!sc.at_end()) {
    letters.push_back(sc.integer());
    sc.accept(',');
  }
  return make_braid(m, std::move(letters));
}

LinkDiagram braid_closure(const BraidWord& b) {
  const int m = b.strands;
  std::vector<int> pos(m);
  std::iota(pos.begin(), pos.end(), 1);
  std::vector<bool> touched(m, false);
  int next = m + 1;
  std::vector<std::array<int, 4>> xs;
  xs.reserve(b.letters.size());
  for (int l : b.letters) {
    const int p = std::abs(l) - 1;
    touched[p] = touched[p + 1] = true;
    const int new_left = next++;
    const int new_right = next++;
    if (l > 0) {
      // right strand passes under to the left; slots SE, NE, NW, SW
      xs.push_back({pos[p + 1], new_right, new_left, pos[p]});
    } else {
      // left strand passes under to the right; slots SW, SE, NE, NW
      xs.push_back({pos[p], pos[p + 1], new_right, new_left});
    }
    pos[p] = new_left;
    pos[p + 1] = new_right;
  }
  // Close up: the top arc at position p is the bottom arc at position p.
  std::vector<int> rename(next, 0);
  std::iota(rename.begin(), rename.end(), 0);
  for (int p = 0; p < m; ++p) rename[pos[p]] = p + 1;
  std::map<int, int> compact;
  for (auto& x : xs)
    for (int& a : x) {
      a = rename[a];
      auto [it, inserted] = compact.try_emplace(a, static_cast<int>(compact.size()) + 1);
      a = it->second;
    }
  const int loops = static_cast<int>(std::count(touched.begin(), touched.end(), false));
  return LinkDiagram::from_pd(xs, loops);
}

}  // namespace legknot
