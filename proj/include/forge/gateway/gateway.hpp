#pragma once

#include <chrono>
#include <condition_variable>
#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "forge/gateway/backend.hpp"
#include "forge/gateway/cache.hpp"
#include "forge/gateway/prompt.hpp"

namespace forge::gateway {

struct GatewayConfig {
    std::string model_id = "mock-teacher";
    int concurrency = 8;
    int max_retries = 3;       // transport retries per request
    int repair_attempts = 2;   // JSON repair re-prompts
    std::chrono::milliseconds backoff_base{200};
    std::chrono::milliseconds backoff_cap{5000};
    std::string cache_dir;     // empty -> memory-only cache
    bool allow_truncated = false;
};

struct GatewayStats {
    std::size_t requests = 0;       // complete() calls
    std::size_t backend_calls = 0;  // actual backend invocations (incl. retries)
    std::size_t cache_hits = 0;
    std::size_t retries = 0;
    std::size_t repairs = 0;
};

// Thread-safe front door to the teacher/judge model: caching, bounded
// concurrency, retries with exponential backoff, and JSON repair loops.
class Gateway {
public:
    Gateway(std::shared_ptr<Backend> backend, GatewayConfig config);

    // Returns completion text; cache hits skip the backend entirely.
    std::string complete(const PromptBundle& bundle);

    // complete() + parse. Recovers JSON from fenced or chatty output; on
    // parse/schema failure re-prompts with the error up to repair_attempts
    // times. schema_check throws Error("SchemaViolation", field) to reject.
    nlohmann::json complete_json(
        const PromptBundle& bundle,
        const std::function<void(const nlohmann::json&)>& schema_check = nullptr);

    GatewayStats stats() const;
    const GatewayConfig& config() const { return config_; }
    Backend& backend() { return *backend_; }

    // Extracts the first JSON value from raw model output: direct parse,
    // then markdown-fence stripping, then a balanced {...} / [...] scan.
    // Exposed for tests; throws MalformedOutput when nothing parses.
    static nlohmann::json recover_json(const std::string& text);

private:
    std::string complete_uncached(const PromptBundle& bundle, int& attempts);

    class Semaphore {
    public:
        explicit Semaphore(int slots) : slots_(slots) {}
        void acquire();
        void release();

    private:
        std::mutex m_;
        std::condition_variable cv_;
        int slots_;
    };

    std::shared_ptr<Backend> backend_;
    GatewayConfig config_;
    CompletionCache cache_;
    Semaphore semaphore_;
    mutable std::mutex stats_mutex_;
    GatewayStats stats_;
};

// Builds a gateway per run configuration: mock unless an endpoint is set, in
// which case the credential comes from the named environment variable.
std::shared_ptr<Gateway> make_mock_gateway(GatewayConfig config = {});

} // namespace forge::gateway
