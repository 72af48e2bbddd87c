#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace forge::gateway {

struct CompletionRecord {
    std::string prompt_digest;
    std::string model_id;
    std::string output_text;
    long latency_ms = 0;
    int attempt_count = 1;
};

// Content-addressed completion store. Key covers every request parameter
// that can change output (prompt digest, model, temperature, max tokens).
// With a directory configured, records persist as one JSON file per key,
// written atomically; otherwise the cache is memory-only.
class CompletionCache {
public:
    explicit CompletionCache(std::string dir = "");

    static std::string key(const std::string& prompt_digest, const std::string& model_id,
                           double temperature, int max_output_tokens);

    std::optional<CompletionRecord> get(const std::string& key);
    void put(const std::string& key, const CompletionRecord& rec);

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    std::string dir_;
    std::map<std::string, CompletionRecord> mem_;
    std::mutex mutex_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

} // namespace forge::gateway
