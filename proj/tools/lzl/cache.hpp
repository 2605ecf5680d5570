#pragma once

#include <optional>
#include <string>

namespace lzl::cli {

struct CachedResult {
  int exit_code = 0;
  std::string text;
  std::string json;
};

/// JSON files under a directory, named by the FNV-1a hash of the full key. The
/// key itself is stored and compared on lookup, so a hash collision is a miss.
class ResultCache {
 public:
  /// Cache rooted at $LZL_CACHE; disabled when the variable is unset or empty.
  static ResultCache from_environment();
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  std::optional<CachedResult> lookup(const std::string& key) const;
  void store(const std::string& key, const CachedResult& result) const;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace lzl::cli
