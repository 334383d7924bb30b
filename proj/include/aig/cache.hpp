#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "json.hpp"

#include "aig/report.hpp"

namespace aig {

/// Bumped whenever a change could alter any computed invariant.
inline constexpr const char* kCodeVersion = "aig-1.0";

/// Overrides the cache directory when no directory is given explicitly.
inline constexpr const char* kCacheDirEnv = "AIG_CACHE_DIR";

/// On-disk cache of label-independent graph invariants, one JSON file per
/// (canonical space key, model, code version). Entries are written to a
/// temporary file and renamed into place, so concurrent writers are safe.
class ScalarCache {
 public:
  explicit ScalarCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  /// `dir` if nonempty, else $AIG_CACHE_DIR if set, else no cache.
  static std::unique_ptr<ScalarCache> open(const std::string& dir) {
    if (!dir.empty()) return std::make_unique<ScalarCache>(dir);
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) return std::make_unique<ScalarCache>(env);
    return nullptr;
  }

  const std::filesystem::path& dir() const { return dir_; }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

  std::optional<ScalarInvariants> get(const std::string& key, const std::string& model) const {
    std::ifstream in(path_for(key, model));
    if (!in) return std::nullopt;
    try {
      auto j = nlohmann::json::parse(in);
      // The file name is a hash; the stored fields are the real key.
      if (j.at("key") != key || j.at("model") != model || j.at("version") != kCodeVersion)
        return std::nullopt;
      return scalars_from_json(j.at("scalars"));
    } catch (const std::exception&) {
      return std::nullopt;  // unreadable entries count as misses and get rewritten
    }
  }

  void put(const std::string& key, const std::string& model, const ScalarInvariants& s) const {
    nlohmann::json j{{"key", key}, {"model", model}, {"version", kCodeVersion}, {"scalars", to_json(s)}};
    auto final_path = path_for(key, model);
    std::ostringstream suffix;
    suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter_++;
    auto tmp = final_path;
    tmp += suffix.str();
    {
      std::ofstream out(tmp);
      out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, final_path);
  }

  template <class Compute>
  ScalarInvariants get_or_compute(const std::string& key, const std::string& model, Compute compute) const {
    if (auto hit = get(key, model)) {
      ++hits_;
      return *hit;
    }
    ++misses_;
    auto s = compute();
    put(key, model, s);
    return s;
  }

 private:
  std::filesystem::path path_for(const std::string& key, const std::string& model) const {
    // FNV-1a: stable across platforms, unlike std::hash.
    std::uint64_t h = 14695981039346656037ull;
    for (char c : key + '\n' + model + '\n' + kCodeVersion) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    std::ostringstream name;
    name << std::hex << h << ".json";
    return dir_ / name.str();
  }

  std::filesystem::path dir_;
  mutable std::atomic<std::size_t> hits_{0}, misses_{0}, counter_{0};
};

}  // namespace aig
