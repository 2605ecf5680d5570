#pragma once

#include <string>

#include "lzl/caps.hpp"
#include "lzl/graph.hpp"

namespace lzl::cli {

/// Resolves grid<N>, k<N>, p<N>, c<N>, star<N>, spider333 / spider3,3,3 and
/// t<k>_<d> (generated up to the hard vertex ceiling); anything else is read as
/// a graph file subject to `file_cap`.
Graph resolve_graph(const std::string& name, std::size_t file_cap);

/// Vertex cap used when the CLI loads graphs: the wide width unless raised.
std::size_t cli_vertex_cap(const Caps& caps);

}  // namespace lzl::cli
