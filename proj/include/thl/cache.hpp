#pragma once

#include "thl/series.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace thl {

constexpr int kCacheSchema = 1;

nlohmann::json rep_to_json(const Rep& r);
Rep rep_from_json(const nlohmann::json& j, int d);
nlohmann::json mseries_to_json(const MSeries& s);
MSeries mseries_from_json(const nlohmann::json& j, int d);

// Default directory: $THL_CACHE_DIR, else $XDG_CACHE_HOME/thl, else ~/.cache/thl.
std::filesystem::path default_cache_dir();

// One JSON document per key, named <kind>-<hash of key>.json.
class ResultCache {
public:
    ResultCache() = default;
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {}

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path file_for(const std::string& kind, const nlohmann::json& key) const;

    std::optional<nlohmann::json> lookup(const std::string& kind, const nlohmann::json& key) const;
    void store(const std::string& kind, const nlohmann::json& key, const nlohmann::json& payload) const;

private:
    std::filesystem::path dir_;
    bool enabled_ = false;
};

std::string content_hash(const std::string& text);

}  // namespace thl
