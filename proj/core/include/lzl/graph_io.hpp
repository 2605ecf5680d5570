#pragma once

#include <cstdint>
#include <string>

#include "lzl/graph.hpp"

namespace lzl {

/// Parses the line-oriented graph format:
///
///   # comment
///   p <n> <m>
///   e <u> <v>            (1-based, u != v)
///   l <v> <key>=<value>
///
/// Edge lines may list endpoints in either order. Throws ParseError (with the
/// line number) on malformed input and ValidationError on a disconnected graph
/// unless options.allow_disconnected is set.
Graph parse_graph(const std::string& text, const GraphOptions& options = {});

/// Canonical text form: header, edges sorted by (u,v), then labels sorted by
/// vertex and key. Byte-stable, so it doubles as a cache key input.
std::string serialize_graph(const Graph& g);

/// Reads and parses a file. Throws ValidationError if it cannot be opened.
Graph load_graph(const std::string& path, const GraphOptions& options = {});
void save_graph(const Graph& g, const std::string& path);

/// 64-bit FNV-1a over the canonical serialization.
std::uint64_t graph_hash(const Graph& g);
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace lzl
