#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "forge/gateway/gateway.hpp"
#include "forge/persona/survey.hpp"

namespace forge::persona {

struct PersonaProfile {
    std::string id; // content digest over respondent, country, description
    std::string respondent_id;
    std::string country;
    std::map<std::string, std::vector<std::string>> attributes; // group -> statements
    std::string long_description;
    std::string refined_description;

    bool operator==(const PersonaProfile&) const = default;
};

// Per-group statement lists for a record: groups in fixed order, questions in
// registry order, one statement per answer with code >= 0 (negative codes are
// survey non-answers and are skipped). Errors: MissingTemplate for a question
// with no statements at all, UnknownAnswerCode for a code without one.
std::map<std::string, std::vector<std::string>> collect_statements(
    const SurveyRecord& record, const QuestionRegistry& registry);

// The statements joined with single spaces into one paragraph.
std::string textualize(const SurveyRecord& record, const QuestionRegistry& registry);

// Teacher-LLM summarization of a long description. The reply must be nonempty
// and strictly shorter in words; one corrective re-prompt is allowed before
// DegenerateSummary.
std::string refine(gateway::Gateway& gw, const std::string& long_description);

// Country-filters, samples n respondents without replacement (seeded),
// textualizes and refines each. Output order is the draw order, deterministic
// under seed. Errors: InsufficientRecords.
std::vector<PersonaProfile> build_persona_set(const std::vector<SurveyRecord>& records,
                                              const QuestionRegistry& registry,
                                              gateway::Gateway& gw,
                                              const std::string& country, std::size_t n,
                                              std::uint64_t seed);

// All three groups nonempty; refined nonempty and shorter than long (words).
void validate_profile(const PersonaProfile& p);

// Stable stand-in name for prompts: "Persona " + first 8 hex of the id.
std::string display_name(const PersonaProfile& p);

nlohmann::json persona_to_json(const PersonaProfile& p);
PersonaProfile persona_from_json(const nlohmann::json& j);
void save_personas(const std::string& path, const std::vector<PersonaProfile>& personas);
std::vector<PersonaProfile> load_personas(const std::string& path);

} // namespace forge::persona
