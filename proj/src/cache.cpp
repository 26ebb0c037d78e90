#include "floorq/cache.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace floorq {

namespace {

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::default_dir() {
  if (const char* env = std::getenv("FLOORQ_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "floorq";
  const char* home = std::getenv("HOME");
  return std::filesystem::path(home ? home : ".") / ".local" / "share" / "floorq";
}

std::filesystem::path ResultCache::file_for(const std::string& key) const {
  return dir_ / (fnv1a_hex(std::string(kAlgorithmVersion) + "|" + key) + ".json");
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(file_for(key));
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("version") != kAlgorithmVersion || j.at("key") != key) return std::nullopt;
    return j.at("value").get<std::string>();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& key, const std::string& value) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  nlohmann::ordered_json j;
  j["version"] = kAlgorithmVersion;
  j["key"] = key;
  j["value"] = value;
  // Write-then-rename keeps concurrent readers from seeing partial files.
  auto target = file_for(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, target, ec);
}

std::size_t ResultCache::clear() const {
  std::size_t n = 0;
  std::error_code ec;
  if (!std::filesystem::exists(dir_, ec)) return 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec))
    if (entry.path().extension() == ".json" && std::filesystem::remove(entry.path(), ec)) ++n;
  return n;
}

std::size_t ResultCache::entry_count() const {
  std::size_t n = 0;
  std::error_code ec;
  if (!std::filesystem::exists(dir_, ec)) return 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec))
    if (entry.path().extension() == ".json") ++n;
  return n;
}

}  // namespace floorq
