#include "forge/gateway/gateway.hpp"

#include <algorithm>
#include <thread>

#include <nlohmann/json.hpp>

#include "forge/core/errors.hpp"
#include "forge/core/text.hpp"
#include "forge/gateway/mock_backend.hpp"

namespace forge::gateway {

void Gateway::Semaphore::acquire() {
    std::unique_lock lock(m_);
    cv_.wait(lock, [&] { return slots_ > 0; });
    --slots_;
}

void Gateway::Semaphore::release() {
    {
        std::lock_guard lock(m_);
        ++slots_;
    }
    cv_.notify_one();
}

Gateway::Gateway(std::shared_ptr<Backend> backend, GatewayConfig config)
    : backend_(std::move(backend)),
      config_(std::move(config)),
      cache_(config_.cache_dir),
      semaphore_(config_.concurrency) {}

std::string Gateway::complete(const PromptBundle& bundle) {
    {
        std::lock_guard lock(stats_mutex_);
        ++stats_.requests;
    }
    auto key = CompletionCache::key(bundle.digest(), config_.model_id,
                                    bundle.temperature, bundle.max_output_tokens);
    if (auto hit = cache_.get(key)) {
        std::lock_guard lock(stats_mutex_);
        ++stats_.cache_hits;
        return hit->output_text;
    }

    int attempts = 0;
    auto started = std::chrono::steady_clock::now();
    std::string text = complete_uncached(bundle, attempts);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);

    CompletionRecord rec;
    rec.prompt_digest = bundle.digest();
    rec.model_id = config_.model_id;
    rec.output_text = text;
    rec.latency_ms = static_cast<long>(elapsed.count());
    rec.attempt_count = attempts;
    cache_.put(key, rec);
    return text;
}

std::string Gateway::complete_uncached(const PromptBundle& bundle, int& attempts) {
    semaphore_.acquire();
    struct Release {
        Semaphore& s;
        ~Release() { s.release(); }
    } releaser{semaphore_};

    auto backoff = config_.backoff_base;
    for (int attempt = 0;; ++attempt) {
        ++attempts;
        {
            std::lock_guard lock(stats_mutex_);
            ++stats_.backend_calls;
        }
        try {
            auto result = backend_->complete(bundle, config_.model_id);
            if (result.truncated && !config_.allow_truncated)
                fail("OutputTooLong",
                     bundle.template_id + ": completion truncated at max_output_tokens");
            return result.text;
        } catch (const Error& e) {
            bool retryable =
                e.code() == "TransportError" || e.code() == "RateLimited";
            if (!retryable || attempt >= config_.max_retries) throw;
            {
                std::lock_guard lock(stats_mutex_);
                ++stats_.retries;
            }
            std::this_thread::sleep_for(backoff);
            backoff = std::min(backoff * 2, config_.backoff_cap);
        }
    }
}

namespace {

// Strips a leading/trailing markdown fence pair (``` or ```json) if present.
std::string strip_fences(const std::string& raw) {
    auto s = text::trim(raw);
    if (s.rfind("```", 0) != 0) return s;
    auto first_nl = s.find('\n');
    if (first_nl == std::string::npos) return s;
    auto close = s.rfind("```");
    if (close <= first_nl) return s;
    return text::trim(s.substr(first_nl + 1, close - first_nl - 1));
}

// Finds the first balanced JSON object or array in free-form text,
// respecting string literals and escapes.
std::string balanced_slice(const std::string& s) {
    auto start = s.find_first_of("{[");
    if (start == std::string::npos) return "";
    char open = s[start];
    char close = open == '{' ? '}' : ']';
    int depth = 0;
    bool in_str = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        char c = s[i];
        if (in_str) {
            if (c == '\\')
                ++i;
            else if (c == '"')
                in_str = false;
        } else if (c == '"') {
            in_str = true;
        } else if (c == open) {
            ++depth;
        } else if (c == close) {
            if (--depth == 0) return s.substr(start, i - start + 1);
        }
    }
    return "";
}

} // namespace

nlohmann::json Gateway::recover_json(const std::string& raw) {
    for (const std::string& candidate :
         {text::trim(raw), strip_fences(raw), balanced_slice(strip_fences(raw)),
          balanced_slice(raw)}) {
        if (candidate.empty()) continue;
        auto j = nlohmann::json::parse(candidate, nullptr, false);
        if (!j.is_discarded()) return j;
    }
    fail("MalformedOutput", "no JSON value found in completion");
}

nlohmann::json Gateway::complete_json(
    const PromptBundle& bundle,
    const std::function<void(const nlohmann::json&)>& schema_check) {
    PromptBundle current = bundle;
    std::string last_error;
    for (int round = 0;; ++round) {
        std::string raw = complete(current);
        try {
            auto j = recover_json(raw);
            if (schema_check) schema_check(j);
            return j;
        } catch (const Error& e) {
            if (e.code() != "MalformedOutput" && e.code() != "SchemaViolation") throw;
            last_error = e.what();
            if (round >= config_.repair_attempts) throw;
        }
        {
            std::lock_guard lock(stats_mutex_);
            ++stats_.repairs;
        }
        // Re-prompt with the failure appended. The round number keeps every
        // repair's digest distinct, so no repair can be served the previous
        // round's cached (rejected) completion.
        current.rendered_text = bundle.rendered_text +
                                "\n\nYour previous output was rejected (" + last_error +
                                "; repair attempt " + std::to_string(round + 1) +
                                "). Respond with only valid JSON matching the "
                                "required structure.";
    }
}

GatewayStats Gateway::stats() const {
    std::lock_guard lock(stats_mutex_);
    return stats_;
}

std::shared_ptr<Gateway> make_mock_gateway(GatewayConfig config) {
    config.model_id = "mock-teacher";
    return std::make_shared<Gateway>(std::make_shared<MockBackend>(), std::move(config));
}

} // namespace forge::gateway
