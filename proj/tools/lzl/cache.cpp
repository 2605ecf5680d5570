#include "lzl/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lzl/graph_io.hpp"

namespace lzl::cli {

using json = nlohmann::ordered_json;

ResultCache ResultCache::from_environment() {
  const char* dir = std::getenv("LZL_CACHE");
  return ResultCache(dir ? dir : "");
}

std::string ResultCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return (std::filesystem::path(dir_) / name).string();
}

std::optional<CachedResult> ResultCache::lookup(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    return CachedResult{j.at("exit").get<int>(), j.at("text").get<std::string>(), j.at("json").get<std::string>()};
  } catch (const json::exception&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

void ResultCache::store(const std::string& key, const CachedResult& result) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const std::string path = path_for(key);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << json{{"key", key}, {"exit", result.exit_code}, {"text", result.text}, {"json", result.json}}.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace lzl::cli
