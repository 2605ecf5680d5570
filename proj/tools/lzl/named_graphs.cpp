#include "lzl/named_graphs.hpp"

#include <algorithm>
#include <filesystem>
#include <regex>

#include "lzl/errors.hpp"
#include "lzl/generators.hpp"
#include "lzl/graph_io.hpp"

namespace lzl::cli {

namespace {

std::size_t to_size(const std::string& s) { return static_cast<std::size_t>(std::stoul(s)); }

std::vector<std::size_t> arm_list(const std::string& text) {
  std::vector<std::size_t> arms;
  if (text.find(',') == std::string::npos) {
    for (char c : text) arms.push_back(static_cast<std::size_t>(c - '0'));
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = std::min(text.find(',', start), text.size());
      arms.push_back(to_size(text.substr(start, comma - start)));
      start = comma + 1;
    }
  }
  return arms;
}

}  // namespace

std::size_t cli_vertex_cap(const Caps& caps) { return std::max(caps.vertices, Caps::kWideVertices); }

Graph resolve_graph(const std::string& name, std::size_t file_cap) {
  // Named families are explicit requests; the exact engines keep their own caps.
  const std::size_t cap = Caps::kMaxVertices;
  static const std::regex simple(R"((grid|k|p|c|star)(\d+))");
  static const std::regex spider(R"(spider(\d+(,\d+)*))");
  static const std::regex kary(R"(t(\d+)_(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, simple)) {
    const std::string family = m[1];
    const std::size_t n = to_size(m[2]);
    if (family == "grid") return grid_graph(n, cap);
    if (family == "k") return complete_graph(n, cap);
    if (family == "p") return path_graph(n, cap);
    if (family == "c") return cycle_graph(n, cap);
    return star_graph(n, cap);
  }
  if (std::regex_match(name, m, spider)) return spider_graph(arm_list(m[1]), cap);
  if (std::regex_match(name, m, kary)) return kary_tree(to_size(m[1]), to_size(m[2]), cap);
  if (std::filesystem::exists(name)) return load_graph(name, GraphOptions{false, file_cap});
  throw ValidationError("unknown graph '" + name + "' (not a named graph and no such file)");
}

}  // namespace lzl::cli
