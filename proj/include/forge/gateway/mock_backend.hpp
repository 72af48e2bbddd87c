#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "forge/gateway/backend.hpp"

namespace forge::gateway {

// Deterministic offline stand-in for the teacher model. Each template family
// has a handler that computes output purely from the bundle (slots + a digest
// of the rendered text), so reruns are byte-identical. Tests can override
// handlers or inject transport failures.
class MockBackend : public Backend {
public:
    using Handler = std::function<CompletionResult(const PromptBundle&)>;

    MockBackend();

    CompletionResult complete(const PromptBundle& bundle,
                              const std::string& model_id) override;
    std::string name() const override { return "mock"; }

    // Replaces the handler for every template id starting with `prefix`.
    // Longest matching prefix wins.
    void set_handler(const std::string& prefix, Handler h);

    // The next `n` complete() calls throw TransportError before reaching any
    // handler.
    void inject_failures(int n) { failures_ = n; }

    int calls() const { return calls_.load(); }

    // Deterministic 1:1 letter maps used by the built-in translate/Arabizi
    // handlers. Unmapped codepoints pass through.
    static std::string to_mock_arabic(std::string_view latin_text);
    static std::string to_mock_latin(std::string_view arabic_text);

private:
    const Handler* find_handler(const std::string& template_id) const;

    std::map<std::string, Handler> handlers_;  // keyed by template-id prefix
    mutable std::mutex mutex_;
    std::atomic<int> failures_{0};
    std::atomic<int> calls_{0};
};

} // namespace forge::gateway
