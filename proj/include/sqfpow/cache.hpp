#ifndef SQFPOW_CACHE_HPP
#define SQFPOW_CACHE_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sqfpow/betti.hpp"

namespace sqfpow {

/// FNV-1a, used for stable content-addressed cache file names.
std::uint64_t fnv1a64(const std::string& data);

/// Content-addressed persistent store for regularity values, keyed by the
/// canonical ideal serialization plus the field token. One JSON file per
/// entry; writes go through a temp file + rename and are serialized by a
/// process-local mutex, so concurrent readers are safe.
class RegCache {
public:
    explicit RegCache(std::string directory);

    const std::string& directory() const { return dir_; }

    std::optional<int> lookup(const SqfIdeal& ideal, const FieldChoice& field);
    void store(const SqfIdeal& ideal, const FieldChoice& field, int reg);

    struct Stats {
        std::size_t entries = 0;
        std::uint64_t bytes = 0;
        std::uint64_t hits = 0;
        std::uint64_t misses = 0;
    };
    Stats stats() const;

    /// Drop unreadable or malformed entries; returns how many were removed.
    int gc();

    struct AuditResult {
        int checked = 0;
        int mismatched = 0;
        std::vector<std::string> bad_entries;
    };
    /// Recompute every stored value and compare.
    AuditResult audit(const std::function<int(const SqfIdeal&, const FieldChoice&)>& recompute);

private:
    std::string path_for(const std::string& key) const;

    std::string dir_;
    std::mutex write_mutex_;
    std::atomic<std::uint64_t> hits_{0};
    std::atomic<std::uint64_t> misses_{0};
};

/// regularity() with read-through caching; cache may be null.
int cached_regularity(const SqfIdeal& a, const BettiOptions& opts, RegCache* cache);

}  // namespace sqfpow

#endif  // SQFPOW_CACHE_HPP
