#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace legknot::detail {

using Rational = boost::multiprecision::cpp_rational;

// Row-by-row echelon reduction keyed on leading columns. Rows must be sorted
// by column with nonzero entries.
template <class T>
class Echelon {
 public:
  using Row = std::vector<std::pair<int, T>>;

  // Returns true when the row is independent of the rows added so far.
  bool add(Row row) {
    while (!row.empty()) {
      auto it = pivot_.find(row.front().first);
      if (it == pivot_.end()) {
        normalize(row);
        pivot_.emplace(row.front().first, rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      row = subtract(row, rows_[it->second]);
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  static void normalize(Row& row) {
    if constexpr (!std::is_same_v<T, bool>) {
      const T lead = row.front().second;
      if (lead != 1)
        for (auto& [c, v] : row) v /= lead;
    }
  }

  // row - row.lead * pivot (pivot has leading coefficient 1)
  static Row subtract(const Row& row, const Row& pivot) {
    const T factor = row.front().second;
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, scaled_neg(factor, pivot[j].second));
        ++j;
      } else {
        T v = combine(row[i].second, factor, pivot[j].second);
        if (!is_zero(v)) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  static T scaled_neg(const T& f, const T& p) {
    if constexpr (std::is_same_v<T, bool>) {
      return p;
    } else {
      return -(f * p);
    }
  }
  static T combine(const T& r, const T& f, const T& p) {
    if constexpr (std::is_same_v<T, bool>) {
      return r != p;
    } else {
      return r - f * p;
    }
  }
  static bool is_zero(const T& v) {
    if constexpr (std::is_same_v<T, bool>) {
      return !v;
    } else {
      return v == 0;
    }
  }

  std::unordered_map<int, std::size_t> pivot_;
  std::vector<Row> rows_;
};

// Rank of an integer matrix given as sparse rows, over Q or over F2.
template <class V>
std::size_t integer_rank(const std::vector<std::vector<std::pair<int, V>>>& rows, bool mod2) {
  if (mod2) {
    Echelon<bool> e;
    for (const auto& r : rows) {
      Echelon<bool>::Row row;
      for (const auto& [c, v] : r)
        if (v % 2 != 0) row.emplace_back(c, true);
      std::sort(row.begin(), row.end());
      e.add(std::move(row));
    }
    return e.rank();
  }
  Echelon<Rational> e;
  for (const auto& r : rows) {
    Echelon<Rational>::Row row;
    for (const auto& [c, v] : r)
      if (v != 0) row.emplace_back(c, Rational(v));
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    e.add(std::move(row));
  }
  return e.rank();
}

}  // namespace legknot::detail
