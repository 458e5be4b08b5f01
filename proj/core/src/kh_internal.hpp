#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "legknot/khovanov.hpp"
#include "sparse_rank.hpp"

namespace legknot::detail {

// PD with labels renumbered 0..labels-1.
struct CompactPd {
  std::vector<std::array<int, 4>> xs;
  int labels = 0;
};

CompactPd compact_pd(const LinkDiagram& d);


// Homology ranks from the rows of the differential grouped by (h, q).
template <class V>
std::map<std::pair<int, int>, std::int64_t> homology_ranks_of(
    const std::map<std::pair<int, int>, std::vector<std::vector<std::pair<int, V>>>>& blocks, Field field) {
  std::map<std::pair<int, int>, std::int64_t> rank_of;
  for (const auto& [hj, rows] : blocks)
    rank_of[hj] = static_cast<std::int64_t>(integer_rank(rows, field == Field::F2));
  std::map<std::pair<int, int>, std::int64_t> out;
  for (const auto& [hj, rows] : blocks) {
    std::int64_t r = static_cast<std::int64_t>(rows.size()) - rank_of[hj];
    auto prev = rank_of.find({hj.first - 1, hj.second});
    if (prev != rank_of.end()) r -= prev->second;
    if (r > 0) out[hj] = r;
  }
  return out;
}

// Unshifted (h, q) ranks of the bracket complex; free loops are not included.
std::map<std::pair<int, int>, std::int64_t> naive_ranks(const CompactPd& pd, Field field, std::size_t budget);
std::map<std::pair<int, int>, std::int64_t> scan_ranks(const CompactPd& pd, Field field, std::size_t budget);

KhTable finish_table(const std::map<std::pair<int, int>, std::int64_t>& raw, const LinkDiagram& d, Field field);

}  // namespace legknot::detail
