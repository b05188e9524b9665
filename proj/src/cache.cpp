#include "ramseykit/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>

namespace ramseykit {

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("RAMSEYKIT_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_DATA_HOME"))
        return std::filesystem::path(xdg) / "ramseykit";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".local" / "share" / "ramseykit";
    return std::filesystem::temp_directory_path() / "ramseykit-cache";
}

std::string cache_key_material(const json& report_key) { return report_key.dump(); }

std::string cache_digest(const std::string& key_material) {
    // FNV-1a, 64-bit. Routing only; hits verify the full key material.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key_material) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

namespace {

std::filesystem::path entry_path(const CacheConfig& cfg, const std::string& digest) {
    return cfg.dir / (digest + ".json");
}

} // namespace

std::optional<json> cache_lookup(const CacheConfig& cfg, const json& report_key) {
    if (!cfg.enabled) return std::nullopt;
    const std::string material = cache_key_material(report_key);
    const auto path = entry_path(cfg, cache_digest(material));
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json entry = json::parse(in);
        if (entry.at("key").dump() != material) return std::nullopt; // digest collision
        return entry.at("report");
    } catch (const nlohmann::json::exception&) {
        return std::nullopt; // unreadable entry behaves like a miss
    }
}

void cache_store(const CacheConfig& cfg, const json& report_key, const json& report) {
    if (!cfg.enabled) return;
    std::error_code ec;
    std::filesystem::create_directories(cfg.dir, ec);
    if (ec) return; // caching is best-effort; the run still succeeds
    const std::string material = cache_key_material(report_key);
    const std::string digest = cache_digest(material);
    json entry;
    entry["key"] = report_key;
    entry["report"] = report;
    const auto tmp = cfg.dir / (digest + ".tmp");
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << entry.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, entry_path(cfg, digest), ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

CacheAuditResult cache_audit(const CacheConfig& cfg, int sample, std::uint64_t seed,
                             const std::function<json(const json& key)>& recompute) {
    CacheAuditResult res;
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    if (std::filesystem::exists(cfg.dir, ec)) {
        for (const auto& e : std::filesystem::directory_iterator(cfg.dir)) {
            if (e.path().extension() == ".json") files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    res.entries = static_cast<int>(files.size());

    std::vector<std::size_t> order(files.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t take = std::min<std::size_t>(order.size(), static_cast<std::size_t>(std::max(sample, 0)));

    for (std::size_t i = 0; i < take; ++i) {
        const auto& path = files[order[i]];
        json entry;
        try {
            std::ifstream in(path);
            entry = json::parse(in);
        } catch (const nlohmann::json::exception&) {
            ++res.mismatches;
            res.mismatched_digests.push_back(path.stem().string());
            continue;
        }
        ++res.sampled;
        json fresh = recompute(entry.at("key"));
        if (fresh.dump() != entry.at("report").dump()) {
            ++res.mismatches;
            res.mismatched_digests.push_back(path.stem().string());
        }
    }
    res.verdict = res.mismatches == 0 ? Verdict::Pass : Verdict::Fail;
    return res;
}

} // namespace ramseykit
