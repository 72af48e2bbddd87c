#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace forge::eval {

// One multiple-choice item. Accuracy items carry gold_index; value-alignment
// items carry the survey response distribution instead (exactly one of the
// two). `dimension` optionally tags the value dimension for grouped
// reporting; `weight` supports weighted aggregation (default unweighted).
struct MCQItem {
    std::string id;
    std::string question;
    std::vector<std::string> options;
    std::optional<int> gold_index;
    std::optional<std::map<int, double>> response_distribution;
    std::optional<std::string> dimension;
    double weight = 1.0;
};

void validate_mcq(const MCQItem& item);  // InvalidItem / InvalidDistribution
nlohmann::json mcq_to_json(const MCQItem& item);
MCQItem mcq_from_json(const nlohmann::json& j);
std::vector<MCQItem> load_mcq_file(const std::string& path);

struct EvalReport {
    std::string metric;
    std::string aggregation = "mean";
    std::vector<std::pair<std::string, double>> per_item;  // (id, score)
    double aggregate = 0.0;
    std::string config_fingerprint;
    std::map<std::string, double> by_group;  // e.g. per value dimension
};

nlohmann::json report_to_json(const EvalReport& r);
std::string report_to_csv(const EvalReport& r);

// Fraction of items whose predicted option equals gold_index.
// Errors: MissingPrediction(id).
EvalReport mcq_accuracy(const std::vector<MCQItem>& items,
                        const std::map<std::string, int>& predictions);

// Per item: the survey fraction that chose the predicted option; aggregate
// is the (optionally weighted) mean. Items carrying a dimension tag also
// aggregate per dimension. Errors: IndexOutOfRange, InvalidDistribution,
// MissingPrediction.
EvalReport sva_score(const std::vector<MCQItem>& items,
                     const std::map<std::string, int>& predictions,
                     bool use_weights = false);

// Few-shot prompt assembly: k exemplars drawn from the pool by seed without
// replacement, joined with blank-line separators, ready to prepend to a task
// prompt. k = 0 yields "". Errors: InsufficientExemplars.
std::string few_shot_prefix(const std::vector<std::string>& exemplar_pool,
                            std::size_t k, std::uint64_t seed);

} // namespace forge::eval
