#include "lzl/caps.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "lzl/errors.hpp"

namespace lzl {

namespace {

std::size_t parse_count(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw ValidationError("cap override: not a number: '" + text + "'");
  }
  if (pos != text.size() || value == 0) throw ValidationError("cap override: bad value '" + text + "'");
  return static_cast<std::size_t>(value);
}

}  // namespace

void Caps::apply_override(const std::string& spec) {
  if (spec.empty()) return;
  if (spec.find('=') == std::string::npos) {
    const std::size_t n = parse_count(spec);
    vertices = std::max(vertices, n);
    iso = prox = zeta = pathwidth = separator = domination = n;
    return;
  }
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("cap override: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::size_t value = parse_count(item.substr(eq + 1));
    if (key == "graph" || key == "vertices") {
      vertices = value;
    } else if (key == "iso") {
      iso = value;
    } else if (key == "prox") {
      prox = value;
    } else if (key == "zeta") {
      zeta = value;
    } else if (key == "pathwidth") {
      pathwidth = value;
    } else if (key == "separator") {
      separator = value;
    } else if (key == "domination") {
      domination = value;
    } else {
      throw ValidationError("cap override: unknown engine '" + key + "'");
    }
  }
  if (vertices > kMaxVertices) throw SizeError("vertex cap", vertices, kMaxVertices);
}

Caps Caps::from_environment() {
  Caps caps;
  if (const char* env = std::getenv("LZL_MAX_N")) caps.apply_override(env);
  return caps;
}

std::string Caps::describe() const {
  std::ostringstream out;
  out << "graph=" << vertices << ",iso=" << iso << ",prox=" << prox << ",zeta=" << zeta << ",pathwidth=" << pathwidth
      << ",separator=" << separator << ",domination=" << domination;
  return out.str();
}

std::size_t worker_count() {
  if (const char* env = std::getenv("LZL_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace lzl
