#pragma once

#include "nhr/ramsey.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nhr {

inline constexpr const char* kToolVersion = "0.1.0";

struct CacheEntry {
    std::string key;
    bool exact = false;
    int value = 0;
    std::optional<int> upper;
    std::string witness;
    std::string version = kToolVersion;
    std::string timestamp;
    /// The full record as read, so unknown fields survive a rewrite.
    nlohmann::json raw = nlohmann::json::object();

    nlohmann::json to_json() const;
    static CacheEntry from_json(const nlohmann::json& j);
};

/// Append-only JSON-lines store. The last entry for a key wins.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path);

    std::optional<CacheEntry> find(const std::string& key) const;
    void append(CacheEntry entry);
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::vector<CacheEntry> entries_;
};

std::string ramsey_cache_key(const RamseyTarget& red, const RamseyTarget& blue);

struct CacheOutcome {
    CacheEntry entry;
    bool hit = false;
};

/// Exact hits are returned without search unless `recompute_verify`, in
/// which case a differing recomputation raises Defect. Brackets are
/// recomputed and a tighter answer appended.
CacheOutcome cache_lookup_or_compute(ResultCache& cache, const std::string& key,
                                     const std::function<CacheEntry()>& compute, bool recompute_verify = false);

}  // namespace nhr
