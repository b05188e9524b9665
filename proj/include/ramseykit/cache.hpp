#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "ramseykit/io.hpp"

namespace ramseykit {

// Content-addressed report cache. The key material is the canonical
// serialization of (operation, instance, caps); the digest only routes to a
// file, hits additionally require exact key-material equality, so digest
// collisions cannot surface stale reports.
struct CacheConfig {
    std::filesystem::path dir;
    bool enabled = false;
};

// Cache directory resolution: explicit flag > RAMSEYKIT_CACHE_DIR > per-user
// data directory (XDG_DATA_HOME or ~/.local/share)/ramseykit.
std::filesystem::path default_cache_dir();

std::string cache_key_material(const json& report_key);
std::string cache_digest(const std::string& key_material);

std::optional<json> cache_lookup(const CacheConfig& cfg, const json& report_key);
// Atomic write (temp file + rename).
void cache_store(const CacheConfig& cfg, const json& report_key, const json& report);

struct CacheAuditResult {
    Verdict verdict = Verdict::Pass;
    int entries = 0;
    int sampled = 0;
    int mismatches = 0;
    std::vector<std::string> mismatched_digests;
};

// Recomputes a seeded random sample of cached entries through the supplied
// runner and compares reports exactly.
CacheAuditResult cache_audit(const CacheConfig& cfg, int sample, std::uint64_t seed,
                             const std::function<json(const json& key)>& recompute);

} // namespace ramseykit
