#include "forge/gateway/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "forge/core/digest.hpp"
#include "forge/core/errors.hpp"

namespace forge::gateway {

namespace fs = std::filesystem;

CompletionCache::CompletionCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) fs::create_directories(dir_);
}

std::string CompletionCache::key(const std::string& prompt_digest,
                                 const std::string& model_id, double temperature,
                                 int max_output_tokens) {
    char temp[32];
    std::snprintf(temp, sizeof(temp), "%.6f", temperature);
    return digest::sha256_fields(
        {prompt_digest, model_id, temp, std::to_string(max_output_tokens)});
}

std::optional<CompletionRecord> CompletionCache::get(const std::string& key) {
    std::lock_guard lock(mutex_);
    if (auto it = mem_.find(key); it != mem_.end()) {
        ++hits_;
        return it->second;
    }
    if (!dir_.empty()) {
        auto path = fs::path(dir_) / (key + ".json");
        std::ifstream in(path);
        if (in) {
            nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
            if (!j.is_discarded()) {
                CompletionRecord rec;
                rec.prompt_digest = j.value("prompt_digest", "");
                rec.model_id = j.value("model_id", "");
                rec.output_text = j.value("output_text", "");
                rec.latency_ms = j.value("latency_ms", 0L);
                rec.attempt_count = j.value("attempt_count", 1);
                mem_[key] = rec;
                ++hits_;
                return rec;
            }
        }
    }
    ++misses_;
    return std::nullopt;
}

void CompletionCache::put(const std::string& key, const CompletionRecord& rec) {
    std::lock_guard lock(mutex_);
    mem_[key] = rec;
    if (dir_.empty()) return;

    nlohmann::json j{{"prompt_digest", rec.prompt_digest},
                     {"model_id", rec.model_id},
                     {"output_text", rec.output_text},
                     {"latency_ms", rec.latency_ms},
                     {"attempt_count", rec.attempt_count}};
    auto final_path = fs::path(dir_) / (key + ".json");
    auto tmp_path = fs::path(dir_) / (key + ".tmp");
    {
        std::ofstream out(tmp_path, std::ios::trunc);
        if (!out) fail("UnresolvedPath", "cannot write cache file " + tmp_path.string());
        out << j.dump();
    }
    fs::rename(tmp_path, final_path);
}

} // namespace forge::gateway
