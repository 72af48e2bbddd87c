#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace forge::persona {

// The three persona attribute groups, in fixed textualization order.
enum class AttributeGroup { demographics, socioeconomic, moral_values };

std::string_view to_string(AttributeGroup g);
AttributeGroup group_from_string(std::string_view s);
const std::vector<AttributeGroup>& attribute_groups();

// The 13 societal-value dimensions used for tagging and eval grouping.
const std::vector<std::string>& wvs_dimensions();

struct Question {
    std::string id;
    AttributeGroup group = AttributeGroup::demographics;
    std::string dimension;                 // value dimension tag; may be empty
    std::map<int, std::string> statements; // answer code -> natural-language statement
};

// Versioned selection of survey questions and their per-code statement
// templates. Question order within a group follows file order and is part of
// the textualization contract.
class QuestionRegistry {
public:
    static QuestionRegistry from_file(const std::string& path);
    static QuestionRegistry from_json(const nlohmann::json& j); // ConfigInvalid

    int version() const { return version_; }
    const std::vector<Question>& questions() const { return questions_; }
    const Question* find(std::string_view id) const;

    // Distinct dimension tags present, sorted.
    std::vector<std::string> dimensions() const;

private:
    int version_ = 0;
    std::vector<Question> questions_;
};

struct SurveyRecord {
    std::string respondent_id;
    std::string country;
    std::map<std::string, int> answers; // question id -> code; negative = non-answer
    std::optional<double> weight;
};

// CSV or TSV (sniffed from the header row) with columns respondent_id,
// country, optional weight, then question-id columns. Blank cells mean the
// question was not asked. Every question column must exist in the registry
// (UnknownQuestion) and every non-negative code must have a statement
// (UnknownAnswerCode). Structural problems raise MalformedSurvey.
std::vector<SurveyRecord> load_survey(const std::string& path,
                                      const QuestionRegistry& registry);

} // namespace forge::persona
