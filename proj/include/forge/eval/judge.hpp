#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/eval/tasks.hpp"
#include "forge/gateway/gateway.hpp"

namespace forge::eval {

// One cultural-knowledge QA item to be graded by the judge model.
struct JudgeItem {
    std::string id;
    std::string question;
    std::string reference_answer;
    std::string model_answer;
};

// First contiguous digit run in the text, as an integer. "The score is 7."
// yields 7; text without digits yields nullopt.
std::optional<int> first_integer(const std::string& text);

// Asks the judge model to grade one answer against the reference on a 0-10
// scale. Unparseable replies get one stricter re-prompt; out-of-range values
// are clipped to [0,10] and counted in the report.
// Errors: UnparseableJudgment after the retry.
int judge_correctness(gateway::Gateway& gateway, const gateway::TemplateRegistry& registry,
                      const JudgeItem& item);

// Grades every item; aggregate = mean score. Clip events surface in
// by_group["clipped"] (count) so reports stay comparable.
EvalReport judge_report(gateway::Gateway& gateway, const gateway::TemplateRegistry& registry,
                        const std::vector<JudgeItem>& items);

std::vector<JudgeItem> load_judge_file(const std::string& path);

} // namespace forge::eval
