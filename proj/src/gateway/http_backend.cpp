#include "forge/gateway/http_backend.hpp"

#include <cstdlib>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "forge/core/errors.hpp"

namespace forge::gateway {

HttpBackend::HttpBackend(std::string endpoint, std::string api_key,
                         int connect_timeout_s, int read_timeout_s)
    : api_key_(std::move(api_key)),
      connect_timeout_s_(connect_timeout_s),
      read_timeout_s_(read_timeout_s) {
    // Split "scheme://host:port/prefix" into client target and path prefix.
    auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string::npos)
        fail("ConfigInvalid", "endpoint must be http(s)://…, got " + endpoint);
    auto path_start = endpoint.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        host_ = endpoint;
    } else {
        host_ = endpoint.substr(0, path_start);
        path_prefix_ = endpoint.substr(path_start);
        while (!path_prefix_.empty() && path_prefix_.back() == '/')
            path_prefix_.pop_back();
    }
}

CompletionResult HttpBackend::complete(const PromptBundle& bundle,
                                       const std::string& model_id) {
    httplib::Client cli(host_);
    cli.set_connection_timeout(connect_timeout_s_);
    cli.set_read_timeout(read_timeout_s_);
    httplib::Headers headers;
    if (!api_key_.empty())
        headers.emplace("Authorization", "Bearer " + api_key_);

    nlohmann::json body{
        {"model", model_id},
        {"messages",
         nlohmann::json::array({{{"role", "user"}, {"content", bundle.rendered_text}}})},
        {"temperature", bundle.temperature},
        {"max_tokens", bundle.max_output_tokens}};

    auto res = cli.Post(path_prefix_ + "/v1/chat/completions", headers, body.dump(),
                        "application/json");
    if (!res)
        fail("TransportError",
             host_ + ": " + httplib::to_string(res.error()));
    if (res->status == 429) {
        std::string after = res->get_header_value("Retry-After");
        fail("RateLimited", after.empty() ? "rate limited" : "retry after " + after + "s");
    }
    if (res->status >= 500)
        fail("TransportError", host_ + ": HTTP " + std::to_string(res->status));
    if (res->status != 200)
        fail("BackendError", host_ + ": HTTP " + std::to_string(res->status) + " " +
                                 res->body.substr(0, 200));

    auto j = nlohmann::json::parse(res->body, nullptr, false);
    if (j.is_discarded() || !j.contains("choices") || j["choices"].empty())
        fail("BackendError", "malformed completion response from " + host_);
    const auto& choice = j["choices"][0];
    CompletionResult out;
    out.text = choice.at("message").at("content").get<std::string>();
    out.truncated = choice.value("finish_reason", "stop") == "length";
    return out;
}

std::string api_key_from_env(const std::string& var_name) {
    const char* v = std::getenv(var_name.c_str());
    return v ? v : "";
}

} // namespace forge::gateway
