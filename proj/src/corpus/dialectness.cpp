#include "forge/corpus/dialectness.hpp"

#include <algorithm>
#include <cstdio>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "forge/core/errors.hpp"
#include "forge/core/unicode.hpp"

namespace forge::corpus {

double MockDialectnessScorer::score(const std::string& text) {
    return unicode::arabic_ratio(text);
}

HttpDialectnessScorer::HttpDialectnessScorer(std::string endpoint, int timeout_s)
    : timeout_s_(timeout_s) {
    auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string::npos)
        fail("ConfigInvalid", "scorer endpoint must be http(s)://…, got " + endpoint);
    auto path_start = endpoint.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        host_ = std::move(endpoint);
    } else {
        host_ = endpoint.substr(0, path_start);
        path_prefix_ = endpoint.substr(path_start);
        while (!path_prefix_.empty() && path_prefix_.back() == '/') path_prefix_.pop_back();
    }
}

double HttpDialectnessScorer::score(const std::string& text) {
    httplib::Client cli(host_);
    cli.set_connection_timeout(timeout_s_);
    cli.set_read_timeout(timeout_s_);
    nlohmann::json body{{"text", text}};
    auto res = cli.Post(path_prefix_ + "/score", body.dump(), "application/json");
    if (!res)
        fail("ScorerUnavailable", "no response from " + host_);
    if (res->status != 200)
        fail("ScorerUnavailable", host_ + " returned " + std::to_string(res->status));
    auto j = nlohmann::json::parse(res->body, nullptr, false);
    if (j.is_discarded() || !j.contains("score") || !j["score"].is_number())
        fail("ScorerUnavailable", "malformed scorer response: " + res->body);
    return j["score"].get<double>();
}

DialectnessSummary score_dialectness(std::vector<Document>& docs,
                                     DialectnessScorer& scorer) {
    if (docs.empty()) fail("EmptyCorpus", "no documents to score");
    DialectnessSummary s;
    double sum = 0.0;
    for (auto& doc : docs) {
        double value;
        try {
            value = std::clamp(scorer.score(doc.text), 0.0, 1.0);
        } catch (const Error&) {
            doc.provenance["dialectness"] = "missing";
            ++s.missing;
            continue;
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", value);
        doc.provenance["dialectness"] = buf;
        sum += value;
        ++s.scored;
    }
    if (s.scored == 0)
        fail("ScorerUnavailable", "scorer " + scorer.name() + " failed on every document");
    s.mean = sum / static_cast<double>(s.scored);
    return s;
}

} // namespace forge::corpus
