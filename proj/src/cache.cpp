#include "nhr/cache.hpp"

#include "nhr/error.hpp"
#include "nhr/io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

namespace nhr {

namespace {

    std::string utc_now()
    {
        const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    bool tighter(const CacheEntry& fresh, const CacheEntry& old)
    {
        if (fresh.exact) return !old.exact;
        if (old.exact) return false;
        const bool lower = fresh.value > old.value;
        const bool upper = fresh.upper && (!old.upper || *fresh.upper < *old.upper);
        return lower || upper;
    }

}  // namespace

nlohmann::json CacheEntry::to_json() const
{
    nlohmann::json j = raw.is_object() ? raw : nlohmann::json::object();
    j["schema"] = 1;
    j["key"] = key;
    j["status"] = exact ? "exact" : "bracketed";
    j["value"] = value;
    if (upper) j["upper"] = *upper;
    else j.erase("upper");
    j["witness"] = witness;
    j["version"] = version;
    j["timestamp"] = timestamp;
    return j;
}

CacheEntry CacheEntry::from_json(const nlohmann::json& j)
{
    CacheEntry e;
    e.raw = j;
    e.key = j.at("key").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status != "exact" && status != "bracketed") throw std::invalid_argument("unknown status " + status);
    e.exact = status == "exact";
    e.value = j.at("value").get<int>();
    if (j.contains("upper")) e.upper = j.at("upper").get<int>();
    e.witness = j.value("witness", "");
    e.version = j.value("version", "");
    e.timestamp = j.value("timestamp", "");
    return e;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path))
{
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    long long number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            entries_.push_back(CacheEntry::from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw Error(ErrorKind::CacheCorrupt, path_.string() + ":" + std::to_string(number) + ": " + e.what(),
                        number);
        }
    }
}

std::optional<CacheEntry> ResultCache::find(const std::string& key) const
{
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        if (it->key == key) return *it;
    return std::nullopt;
}

void ResultCache::append(CacheEntry entry)
{
    if (entry.timestamp.empty()) entry.timestamp = utc_now();
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error(ErrorKind::Precondition, "cannot append to " + path_.string());
    out << entry.to_json().dump() << '\n';
    entries_.push_back(std::move(entry));
}

std::string ramsey_cache_key(const RamseyTarget& red, const RamseyTarget& blue)
{
    return "ramsey:" + red.key() + "|" + blue.key();
}

CacheOutcome cache_lookup_or_compute(ResultCache& cache, const std::string& key,
                                     const std::function<CacheEntry()>& compute, bool recompute_verify)
{
    const auto old = cache.find(key);
    if (old && old->exact && !recompute_verify) return {*old, true};

    CacheEntry fresh = compute();
    fresh.key = key;
    if (old && old->exact) {
        if (fresh.exact && fresh.value != old->value)
            throw Error(ErrorKind::Defect, "cached value " + std::to_string(old->value) + " for " + key +
                                               " disagrees with recomputed " + std::to_string(fresh.value));
        return {*old, true};
    }
    if (!old || tighter(fresh, *old)) {
        cache.append(fresh);
        return {fresh, false};
    }
    return {*old, true};
}

}  // namespace nhr
