#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "envelope.hpp"

namespace albanese::cli {

/// Content-addressed store of result payloads. Files are named by a hash of
/// (operation, normalized arguments, library version); the full key is kept
/// inside the file and checked on load. Writes go through a temporary file
/// and a rename, so concurrent writers never expose partial files.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

  /// $ALBANESE_CACHE_DIR, else $HOME/.cache/albanese, else ./.albanese-cache.
  static std::filesystem::path default_directory();

  static std::string key(const std::string& operation, const Json& arguments);

  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& payload) const;

  const std::filesystem::path& directory() const { return directory_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path directory_;
};

}  // namespace albanese::cli
