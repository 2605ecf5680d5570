#include "lzl/table.hpp"

#include <iomanip>
#include <sstream>

#include "lzl/generators.hpp"
#include "lzl/trees.hpp"

namespace lzl::cli {

std::vector<TreeTableRow> table_tab1() {
  struct Spec {
    std::size_t i;
    std::array<std::size_t, 3> expected;
  };
  const Spec specs[] = {{0, {6, 2, 4}}, {10, {9, 10, 10}}, {100, {12, 77, 10}}};
  std::vector<TreeTableRow> rows;
  for (const auto& s : specs) {
    const Graph t = subdivide(kary_tree(3, 3, Caps::kMaxVertices), s.i, Caps::kMaxVertices);
    TreeTableRow row;
    row.name = "T" + std::to_string(s.i);
    row.subdivisions = s.i;
    row.order = t.order();
    row.depth = root_tree(t, 0).height;
    row.computed = {ceil_log2(t.order()), row.depth / 4 + 2, level_decomposition(t, 0).cop_bound()};
    row.expected = s.expected;
    rows.push_back(row);
  }
  return rows;
}

std::string format_tab1(const std::vector<TreeTableRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "tree" << std::setw(7) << "n" << std::setw(6) << "d" << std::setw(14)
      << "ceil(log2 n)" << std::setw(14) << "floor(d/4)+2" << std::setw(16) << "ceil(maxL/3)+1" << "check\n";
  static const char* columns[] = {"ceil(log2 n)", "floor(d/4)+2", "ceil(maxL/3)+1"};
  for (const auto& r : rows) {
    out << std::setw(6) << r.name << std::setw(7) << r.order << std::setw(6) << r.depth << std::setw(14)
        << r.computed[0] << std::setw(14) << r.computed[1] << std::setw(16) << r.computed[2];
    if (r.matches()) {
      out << "ok\n";
      continue;
    }
    out << "MISMATCH";
    for (std::size_t c = 0; c < 3; ++c) {
      if (r.computed[c] != r.expected[c]) {
        out << " " << columns[c] << " expected " << r.expected[c] << " got " << r.computed[c] << ";";
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace lzl::cli
