#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "legknot/diagram.hpp"
#include "legknot/laurent.hpp"

namespace legknot {

enum class Field { Rational, F2 };
enum class KhMode { Scan, Naive };

/// "Q" (also "rational") or "F2" (also "2"); anything else is FieldUnsupported.
Field parse_field(std::string_view text);
std::string_view field_name(Field f) noexcept;
/// "scan" or "naive"; anything else is a UsageError.
KhMode parse_mode(std::string_view text);

struct KhOptions {
  Field field = Field::Rational;
  KhMode mode = KhMode::Scan;
  /// Negative selects the default for the mode: 20 for scan, 10 for naive.
  int crossing_limit = -1;
  /// Abort with BudgetExceeded once a complex holds more generators than this.
  std::size_t generator_budget = 4'000'000;
};

/// Bigraded ranks of unreduced Khovanov homology, keyed by (i, j) with i the
/// homological and j the quantum degree.
struct KhTable {
  std::map<std::pair<int, int>, std::int64_t> ranks;
  Field field = Field::Rational;
  int crossings = 0;
  int n_plus = 0;
  int n_minus = 0;

  bool empty() const noexcept { return ranks.empty(); }
  std::int64_t rank(int i, int j) const;
  /// Sum of rank * q^j t^i.
  LaurentPoly2 poincare() const;
  /// Graded Euler characteristic: sum of (-1)^i rank q^j.
  UniPoly euler_characteristic() const;
  /// "i j rank" triples separated by ';', sorted by (i, j).
  std::string to_string() const;

  /// Compares ranks only.
  friend bool operator==(const KhTable& x, const KhTable& y) { return x.ranks == y.ranks; }
};

KhTable khovanov(const LinkDiagram& d, const KhOptions& options = {});

/// (i, j) -> (-i, -j); the table of the mirror diagram over a field.
KhTable mirror_table(const KhTable& t);

/// min of j - i over the support. Throws EmptyTable.
int kh_tb_bound(const KhTable& t);
/// max(j - i) - min(j - i) over the support. Throws EmptyTable.
int kh_breadth(const KhTable& t);

}  // namespace legknot
