#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace floorq {

// Bumped whenever enumeration or multiplicity code changes results.
inline constexpr const char* kAlgorithmVersion = "floorq-enum-3";

// Content-addressed on-disk store of computed polynomials. Entries are JSON
// files named by a hash of the key; the full key is stored and checked on read.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  // $FLOORQ_CACHE_DIR, else $XDG_DATA_HOME/floorq, else ~/.local/share/floorq.
  static std::filesystem::path default_dir();

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;
  // Number of entries removed.
  std::size_t clear() const;
  std::size_t entry_count() const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path file_for(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace floorq
