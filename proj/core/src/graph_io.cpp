#include "lzl/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "lzl/errors.hpp"

namespace lzl {

namespace {

std::size_t parse_index(const std::string& token, std::size_t line, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(token));
  } catch (const std::exception&) {
    throw ParseError(line, std::string(what) + " out of range: '" + token + "'");
  }
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Graph parse_graph(const std::string& text, const GraphOptions& options) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::optional<GraphBuilder> builder;
  std::size_t declared_edges = 0;
  std::size_t seen_edges = 0;
  std::size_t header_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    std::vector<std::string> rest;
    for (std::string tok; fields >> tok;) rest.push_back(tok);

    if (tag == "p") {
      if (builder) throw ParseError(line_no, "duplicate header");
      if (rest.size() != 2) throw ParseError(line_no, "header must be 'p <n> <m>'");
      const std::size_t n = parse_index(rest[0], line_no, "vertex count");
      declared_edges = parse_index(rest[1], line_no, "edge count");
      if (n == 0) throw ParseError(line_no, "graph must have at least one vertex");
      if (n > options.vertex_cap) throw SizeError("graph order", n, options.vertex_cap);
      builder.emplace(n);
      header_line = line_no;
    } else if (tag == "e") {
      if (!builder) throw ParseError(line_no, "edge before header");
      if (rest.size() != 2) throw ParseError(line_no, "edge must be 'e <u> <v>'");
      const std::size_t u = parse_index(rest[0], line_no, "vertex");
      const std::size_t v = parse_index(rest[1], line_no, "vertex");
      if (u == 0 || v == 0 || u > builder->order() || v > builder->order()) {
        throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(builder->order()));
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (builder->has_edge(u - 1, v - 1)) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      builder->add_edge(u - 1, v - 1);
      ++seen_edges;
    } else if (tag == "l") {
      if (!builder) throw ParseError(line_no, "label before header");
      if (rest.size() != 2) throw ParseError(line_no, "label must be 'l <v> <key>=<value>'");
      const std::size_t v = parse_index(rest[0], line_no, "vertex");
      if (v == 0 || v > builder->order()) throw ParseError(line_no, "label vertex out of range");
      const auto eq = rest[1].find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError(line_no, "label must be key=value");
      builder->set_label(v - 1, rest[1].substr(0, eq), rest[1].substr(eq + 1));
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!builder) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'p <n> <m>'");
  if (seen_edges != declared_edges) {
    throw ParseError(header_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                      std::to_string(seen_edges));
  }
  return builder->build(options);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const auto& [key, value] : g.labels(v)) out << "l " << v + 1 << ' ' << key << '=' << value << '\n';
  }
  return out.str();
}

Graph load_graph(const std::string& path, const GraphOptions& options) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), options);
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write graph file '" + path + "'");
  out << serialize_graph(g);
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t graph_hash(const Graph& g) { return fnv1a(serialize_graph(g)); }

}  // namespace lzl
