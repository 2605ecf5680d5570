#pragma once

#include <array>
#include <string>
#include <vector>

namespace lzl::cli {

/// One row of the subdivided ternary tree table: T_i is the complete ternary
/// tree of depth 3 with every edge subdivided i times, rooted at its root.
struct TreeTableRow {
  std::string name;
  std::size_t subdivisions = 0;
  std::size_t order = 0;
  std::size_t depth = 0;
  std::array<std::size_t, 3> computed{};  // ceil(log2 n), floor(d/4)+2, ceil(maxL/3)+1
  std::array<std::size_t, 3> expected{};
  bool matches() const { return computed == expected; }
};

std::vector<TreeTableRow> table_tab1();
std::string format_tab1(const std::vector<TreeTableRow>& rows);

}  // namespace lzl::cli
