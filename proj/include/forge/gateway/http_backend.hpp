#pragma once

#include <string>

#include "forge/gateway/backend.hpp"

namespace forge::gateway {

// Chat-completions backend for any OpenAI-wire-compatible endpoint.
// `endpoint` is the server base URL ("http://host:port" or with a path
// prefix); requests go to <prefix>/v1/chat/completions.
class HttpBackend : public Backend {
public:
    HttpBackend(std::string endpoint, std::string api_key,
                int connect_timeout_s = 10, int read_timeout_s = 120);

    CompletionResult complete(const PromptBundle& bundle,
                              const std::string& model_id) override;
    std::string name() const override { return "http:" + host_; }

private:
    std::string host_;  // scheme://host:port
    std::string path_prefix_;
    std::string api_key_;
    int connect_timeout_s_;
    int read_timeout_s_;
};

// Reads the credential from the environment (empty if unset, which is fine
// for unauthenticated local endpoints).
std::string api_key_from_env(const std::string& var_name);

} // namespace forge::gateway
