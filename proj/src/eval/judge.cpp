#include "forge/eval/judge.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>

#include <nlohmann/json.hpp>

#include "forge/core/digest.hpp"
#include "forge/core/errors.hpp"
#include "forge/core/jsonl.hpp"

namespace forge::eval {

std::optional<int> first_integer(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && !std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) return std::nullopt;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) break;  // scores never need more digits
        ++i;
    }
    return static_cast<int>(value);
}

namespace {

struct Judgment {
    int score;
    bool clipped;
};

Judgment judge_one(gateway::Gateway& gateway, const gateway::TemplateRegistry& registry,
                   const JudgeItem& item) {
    auto bundle = gateway::render_prompt(registry.get("judge.correctness"),
                                         {{"question", item.question},
                                          {"reference_answer", item.reference_answer},
                                          {"model_answer", item.model_answer}});
    std::string reply = gateway.complete(bundle);
    auto parsed = first_integer(reply);
    if (!parsed) {
        // One stricter re-prompt; the appended instruction changes the digest
        // so the cache cannot replay the unparseable reply.
        gateway::PromptBundle retry = bundle;
        retry.rendered_text +=
            "\n\nYour previous reply contained no score. "
            "Respond with only a single integer between 0 and 10.";
        reply = gateway.complete(retry);
        parsed = first_integer(reply);
        if (!parsed)
            fail("UnparseableJudgment", item.id + ": no integer in \"" + reply + "\"");
    }
    int raw = *parsed;
    int score = std::clamp(raw, 0, 10);
    if (score != raw)
        std::cerr << "judge: item " << item.id << " scored " << raw
                  << ", clipped to " << score << "\n";
    return {score, score != raw};
}

} // namespace

int judge_correctness(gateway::Gateway& gateway, const gateway::TemplateRegistry& registry,
                      const JudgeItem& item) {
    return judge_one(gateway, registry, item).score;
}

EvalReport judge_report(gateway::Gateway& gateway, const gateway::TemplateRegistry& registry,
                        const std::vector<JudgeItem>& items) {
    EvalReport r;
    r.metric = "judge";
    r.config_fingerprint = digest::sha256_fields(
        {"judge", gateway.config().model_id, registry.get("judge.correctness").text});
    double sum = 0.0;
    std::size_t clipped = 0;
    for (const auto& item : items) {
        Judgment j = judge_one(gateway, registry, item);
        r.per_item.emplace_back(item.id, static_cast<double>(j.score));
        sum += j.score;
        if (j.clipped) ++clipped;
    }
    r.aggregate = items.empty() ? 0.0 : sum / static_cast<double>(items.size());
    if (clipped > 0) r.by_group["clipped"] = static_cast<double>(clipped);
    return r;
}

std::vector<JudgeItem> load_judge_file(const std::string& path) {
    std::vector<JudgeItem> out;
    jsonl::Reader r(path);
    while (auto j = r.next()) {
        JudgeItem item;
        item.id = j->at("id").get<std::string>();
        item.question = j->at("question").get<std::string>();
        item.reference_answer = j->at("reference_answer").get<std::string>();
        item.model_answer = j->at("model_answer").get<std::string>();
        out.push_back(std::move(item));
    }
    return out;
}

} // namespace forge::eval
