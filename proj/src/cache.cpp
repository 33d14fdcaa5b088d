#include "thl/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace thl {

nlohmann::json rep_to_json(const Rep& r)
{
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [x, c] : r.sorted())
        arr.push_back({{"weight", x.weight()}, {"mult", c.str()}});
    return arr;
}

Rep rep_from_json(const nlohmann::json& j, int d)
{
    Rep r(d);
    for (auto& t : j) {
        auto w = t.at("weight").get<std::vector<int>>();
        if (int(w.size()) != d)
            throw std::runtime_error("weight of the wrong rank");
        r.add(GlIrrep::from_weight(w), BigInt(t.at("mult").get<std::string>()));
    }
    return r;
}

nlohmann::json mseries_to_json(const MSeries& s)
{
    nlohmann::json arr = nlohmann::json::array();
    for (auto& r : s)
        arr.push_back(rep_to_json(r));
    return arr;
}

MSeries mseries_from_json(const nlohmann::json& j, int d)
{
    MSeries s;
    for (auto& r : j)
        s.push_back(rep_from_json(r, d));
    return s;
}

std::filesystem::path default_cache_dir()
{
    if (const char* e = std::getenv("THL_CACHE_DIR"); e && *e)
        return e;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
        return std::filesystem::path(x) / "thl";
    if (const char* h = std::getenv("HOME"); h && *h)
        return std::filesystem::path(h) / ".cache" / "thl";
    return std::filesystem::temp_directory_path() / "thl-cache";
}

std::string content_hash(const std::string& text)
{
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text)
        h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::filesystem::path ResultCache::file_for(const std::string& kind, const nlohmann::json& key) const
{
    return dir_ / (kind + "-" + content_hash(key.dump()) + ".json");
}

std::optional<nlohmann::json> ResultCache::lookup(const std::string& kind, const nlohmann::json& key) const
{
    if (!enabled_)
        return std::nullopt;
    auto path = file_for(kind, key);
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    try {
        nlohmann::json doc = nlohmann::json::parse(in);
        if (doc.at("schema").get<int>() != kCacheSchema || doc.at("kind") != kind)
            return std::nullopt;
        if (doc.at("key") != key)
            return std::nullopt;
        return doc.at("payload");
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring unreadable cache file " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

void ResultCache::store(const std::string& kind, const nlohmann::json& key, const nlohmann::json& payload) const
{
    if (!enabled_)
        return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        std::cerr << "warning: cannot create cache directory " << dir_ << "\n";
        return;
    }
    auto path = file_for(kind, key);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            std::cerr << "warning: cannot write cache file " << path << "\n";
            return;
        }
        nlohmann::json doc{{"schema", kCacheSchema}, {"kind", kind}, {"key", key}, {"payload", payload}};
        out << doc.dump();
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        std::cerr << "warning: cannot write cache file " << path << "\n";
}

}  // namespace thl
