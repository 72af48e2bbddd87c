#include "forge/eval/tasks.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "forge/core/digest.hpp"
#include "forge/core/errors.hpp"
#include "forge/core/jsonl.hpp"
#include "forge/core/rng.hpp"

namespace forge::eval {

void validate_mcq(const MCQItem& item) {
    if (item.id.empty()) fail("InvalidItem", "item id empty");
    if (item.options.size() < 2)
        fail("InvalidItem", item.id + ": needs at least 2 options");
    if (item.gold_index.has_value() == item.response_distribution.has_value())
        fail("InvalidItem",
             item.id + ": exactly one of gold_index / response_distribution");
    if (item.gold_index) {
        int g = *item.gold_index;
        if (g < 0 || g >= static_cast<int>(item.options.size()))
            fail("InvalidItem", item.id + ": gold_index out of range");
    }
    if (item.response_distribution) {
        double sum = 0.0;
        for (const auto& [idx, frac] : *item.response_distribution) {
            if (idx < 0 || idx >= static_cast<int>(item.options.size()))
                fail("InvalidDistribution", item.id + ": option index out of range");
            if (frac < 0.0 || frac > 1.0)
                fail("InvalidDistribution", item.id + ": fraction outside [0,1]");
            sum += frac;
        }
        if (std::abs(sum - 1.0) > 1e-6)
            fail("InvalidDistribution",
                 item.id + ": distribution sums to " + std::to_string(sum));
    }
}

nlohmann::json mcq_to_json(const MCQItem& item) {
    nlohmann::json j{{"id", item.id}, {"question", item.question},
                     {"options", item.options}};
    if (item.gold_index) j["gold_index"] = *item.gold_index;
    if (item.response_distribution) {
        auto d = nlohmann::json::object();
        for (const auto& [idx, frac] : *item.response_distribution)
            d[std::to_string(idx)] = frac;
        j["response_distribution"] = d;
    }
    if (item.dimension) j["dimension"] = *item.dimension;
    if (item.weight != 1.0) j["weight"] = item.weight;
    return j;
}

MCQItem mcq_from_json(const nlohmann::json& j) {
    MCQItem item;
    item.id = j.at("id").get<std::string>();
    item.question = j.at("question").get<std::string>();
    item.options = j.at("options").get<std::vector<std::string>>();
    if (j.contains("gold_index")) item.gold_index = j["gold_index"].get<int>();
    if (j.contains("response_distribution")) {
        std::map<int, double> d;
        for (const auto& [k, v] : j["response_distribution"].items())
            d[std::stoi(k)] = v.get<double>();
        item.response_distribution = std::move(d);
    }
    if (j.contains("dimension")) item.dimension = j["dimension"].get<std::string>();
    item.weight = j.value("weight", 1.0);
    validate_mcq(item);
    return item;
}

std::vector<MCQItem> load_mcq_file(const std::string& path) {
    std::vector<MCQItem> out;
    jsonl::Reader r(path);
    while (auto j = r.next()) out.push_back(mcq_from_json(*j));
    return out;
}

nlohmann::json report_to_json(const EvalReport& r) {
    auto items = nlohmann::json::array();
    for (const auto& [id, score] : r.per_item)
        items.push_back({{"id", id}, {"score", score}});
    nlohmann::json j{{"metric", r.metric},
                     {"aggregation", r.aggregation},
                     {"aggregate", r.aggregate},
                     {"config_fingerprint", r.config_fingerprint},
                     {"per_item", items}};
    if (!r.by_group.empty()) j["by_group"] = r.by_group;
    return j;
}

std::string report_to_csv(const EvalReport& r) {
    std::string out = "id,score\n";
    for (const auto& [id, score] : r.per_item) {
        out += id;
        out += ',';
        out += std::to_string(score);
        out += '\n';
    }
    return out;
}

namespace {

int prediction_for(const std::map<std::string, int>& predictions, const MCQItem& item) {
    auto it = predictions.find(item.id);
    if (it == predictions.end()) fail("MissingPrediction", item.id);
    return it->second;
}

} // namespace

EvalReport mcq_accuracy(const std::vector<MCQItem>& items,
                        const std::map<std::string, int>& predictions) {
    EvalReport r;
    r.metric = "accuracy";
    r.config_fingerprint = digest::sha256_fields({"accuracy"});
    double sum = 0.0;
    for (const auto& item : items) {
        validate_mcq(item);
        if (!item.gold_index)
            fail("InvalidItem", item.id + ": accuracy needs gold_index");
        int pred = prediction_for(predictions, item);
        double score = pred == *item.gold_index ? 1.0 : 0.0;
        r.per_item.emplace_back(item.id, score);
        sum += score;
    }
    r.aggregate = items.empty() ? 0.0 : sum / static_cast<double>(items.size());
    return r;
}

EvalReport sva_score(const std::vector<MCQItem>& items,
                     const std::map<std::string, int>& predictions, bool use_weights) {
    EvalReport r;
    r.metric = "sva";
    r.config_fingerprint =
        digest::sha256_fields({"sva", use_weights ? "weighted" : "unweighted"});
    double sum = 0.0, weight_sum = 0.0;
    std::map<std::string, std::pair<double, double>> groups;  // dim -> (sum, weight)
    for (const auto& item : items) {
        validate_mcq(item);
        if (!item.response_distribution)
            fail("InvalidDistribution", item.id + ": sva needs response_distribution");
        int pred = prediction_for(predictions, item);
        if (pred < 0 || pred >= static_cast<int>(item.options.size()))
            fail("IndexOutOfRange",
                 item.id + ": prediction " + std::to_string(pred));
        // Options nobody in the survey chose score 0.
        auto it = item.response_distribution->find(pred);
        double score = it == item.response_distribution->end() ? 0.0 : it->second;
        double w = use_weights ? item.weight : 1.0;
        r.per_item.emplace_back(item.id, score);
        sum += score * w;
        weight_sum += w;
        if (item.dimension) {
            groups[*item.dimension].first += score * w;
            groups[*item.dimension].second += w;
        }
    }
    r.aggregate = weight_sum > 0.0 ? sum / weight_sum : 0.0;
    for (const auto& [dim, acc] : groups)
        r.by_group[dim] = acc.second > 0.0 ? acc.first / acc.second : 0.0;
    return r;
}

std::string few_shot_prefix(const std::vector<std::string>& exemplar_pool,
                            std::size_t k, std::uint64_t seed) {
    if (k == 0) return "";
    if (k > exemplar_pool.size())
        fail("InsufficientExemplars", std::to_string(k) + " requested, pool has " +
                                          std::to_string(exemplar_pool.size()));
    std::vector<std::size_t> order(exemplar_pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);
    std::string out;
    for (std::size_t i = 0; i < k; ++i) {
        out += exemplar_pool[order[i]];
        out += "\n\n";
    }
    return out;
}

} // namespace forge::eval
