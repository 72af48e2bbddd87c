#pragma once

#include <string>

#include "forge/gateway/prompt.hpp"

namespace forge::gateway {

struct CompletionResult {
    std::string text;
    bool truncated = false;
};

// One completion call against some model endpoint. Implementations throw
// Error("TransportError", …) for retryable failures and
// Error("RateLimited", …) when the endpoint asks us to back off.
class Backend {
public:
    virtual ~Backend() = default;
    virtual CompletionResult complete(const PromptBundle& bundle,
                                      const std::string& model_id) = 0;
    virtual std::string name() const = 0;
};

} // namespace forge::gateway
