#include "sqfpow/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace sqfpow {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

RegCache::RegCache(std::string directory) : dir_(std::move(directory)) {
    fs::create_directories(dir_);
}

std::string RegCache::path_for(const std::string& key) const {
    std::ostringstream name;
    name << std::hex << fnv1a64(key);
    return (fs::path(dir_) / (name.str() + ".json")).string();
}

namespace {

std::string cache_key(const SqfIdeal& ideal, const FieldChoice& field) {
    return ideal.to_json() + "|" + field.to_string();
}

}  // namespace

std::optional<int> RegCache::lookup(const SqfIdeal& ideal, const FieldChoice& field) {
    const std::string key = cache_key(ideal, field);
    std::ifstream in(path_for(key));
    if (!in) {
        ++misses_;
        return std::nullopt;
    }
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("ideal").get<std::string>() != ideal.to_json() ||
            j.at("field").get<std::string>() != field.to_string()) {
            ++misses_;  // hash collision or tampering; treat as a miss
            return std::nullopt;
        }
        ++hits_;
        return j.at("reg").get<int>();
    } catch (const std::exception&) {
        ++misses_;
        return std::nullopt;
    }
}

void RegCache::store(const SqfIdeal& ideal, const FieldChoice& field, int reg) {
    const std::string key = cache_key(ideal, field);
    nlohmann::json j;
    j["ideal"] = ideal.to_json();
    j["field"] = field.to_string();
    j["reg"] = reg;

    std::lock_guard<std::mutex> lock(write_mutex_);
    const std::string final_path = path_for(key);
    const std::string tmp_path = final_path + ".tmp";
    {
        std::ofstream out(tmp_path);
        out << j.dump();
    }
    fs::rename(tmp_path, final_path);
}

RegCache::Stats RegCache::stats() const {
    Stats s;
    s.hits = hits_.load();
    s.misses = misses_.load();
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        ++s.entries;
        s.bytes += entry.file_size();
    }
    return s;
}

int RegCache::gc() {
    int removed = 0;
    std::lock_guard<std::mutex> lock(write_mutex_);
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".json") {
            fs::remove(entry.path());  // leftover temp files
            ++removed;
            continue;
        }
        bool ok = false;
        try {
            std::ifstream in(entry.path());
            nlohmann::json j = nlohmann::json::parse(in);
            const SqfIdeal ideal = SqfIdeal::from_json(j.at("ideal").get<std::string>());
            ok = FieldChoice::parse(j.at("field").get<std::string>()).has_value() &&
                 j.at("reg").is_number_integer() &&
                 entry.path().filename().string() ==
                     fs::path(path_for(cache_key(
                                  ideal, *FieldChoice::parse(j.at("field").get<std::string>()))))
                         .filename()
                         .string();
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) {
            fs::remove(entry.path());
            ++removed;
        }
    }
    return removed;
}

RegCache::AuditResult RegCache::audit(
    const std::function<int(const SqfIdeal&, const FieldChoice&)>& recompute) {
    AuditResult result;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        ++result.checked;
        try {
            std::ifstream in(entry.path());
            nlohmann::json j = nlohmann::json::parse(in);
            const SqfIdeal ideal = SqfIdeal::from_json(j.at("ideal").get<std::string>());
            const auto field = FieldChoice::parse(j.at("field").get<std::string>());
            if (!field || recompute(ideal, *field) != j.at("reg").get<int>()) {
                ++result.mismatched;
                result.bad_entries.push_back(entry.path().string());
            }
        } catch (const std::exception&) {
            ++result.mismatched;
            result.bad_entries.push_back(entry.path().string());
        }
    }
    return result;
}

int cached_regularity(const SqfIdeal& a, const BettiOptions& opts, RegCache* cache) {
    if (cache != nullptr) {
        if (auto hit = cache->lookup(a, opts.field)) return *hit;
    }
    const int reg = regularity(a, opts);
    if (cache != nullptr) cache->store(a, opts.field, reg);
    return reg;
}

}  // namespace sqfpow
