#include "result_cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "albanese/version.hpp"

namespace albanese::cli {

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::filesystem::path ResultCache::default_directory() {
  if (const char* dir = std::getenv("ALBANESE_CACHE_DIR"); dir && *dir) return dir;
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "albanese";
  return ".albanese-cache";
}

std::string ResultCache::key(const std::string& operation, const Json& arguments) {
  return operation + "\n" + arguments.dump() + "\n" + std::string(kLibraryVersion);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << fnv1a(key) << ".json";
  return directory_ / name.str();
}

std::optional<Json> ResultCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    Json doc = Json::parse(in);
    if (doc.value("key", "") != key || !doc.contains("payload")) return std::nullopt;
    return doc["payload"];
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const Json& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) return;
  const std::filesystem::path target = path_for(key);
  std::random_device rd;
  std::filesystem::path temp = target;
  temp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(temp);
    if (!out) return;
    Json doc;
    doc["key"] = key;
    doc["payload"] = payload;
    out << doc.dump(2) << '\n';
    if (!out) {
      std::filesystem::remove(temp, ec);
      return;
    }
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) std::filesystem::remove(temp, ec);
}

}  // namespace albanese::cli
