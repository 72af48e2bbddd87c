#include "forge/persona/profile.hpp"

#include <nlohmann/json.hpp>

#include "forge/core/digest.hpp"
#include "forge/core/errors.hpp"
#include "forge/core/jsonl.hpp"
#include "forge/core/rng.hpp"
#include "forge/core/text.hpp"

namespace forge::persona {

std::map<std::string, std::vector<std::string>> collect_statements(
    const SurveyRecord& record, const QuestionRegistry& registry) {
    std::map<std::string, std::vector<std::string>> groups;
    for (auto g : attribute_groups()) {
        auto& out = groups[std::string(to_string(g))];
        for (const auto& q : registry.questions()) {
            if (q.group != g) continue;
            auto it = record.answers.find(q.id);
            if (it == record.answers.end() || it->second < 0) continue;
            if (q.statements.empty()) fail("MissingTemplate", q.id);
            auto st = q.statements.find(it->second);
            if (st == q.statements.end())
                fail("UnknownAnswerCode", q.id + " code " + std::to_string(it->second));
            out.push_back(st->second);
        }
    }
    return groups;
}

std::string textualize(const SurveyRecord& record, const QuestionRegistry& registry) {
    auto groups = collect_statements(record, registry);
    std::string out;
    for (auto g : attribute_groups()) {
        for (const auto& s : groups[std::string(to_string(g))]) {
            if (!out.empty()) out.push_back(' ');
            out += s;
        }
    }
    return out;
}

std::string refine(gateway::Gateway& gw, const std::string& long_description) {
    auto words_in = text::count_words(long_description);
    auto attempt = [&](bool retry) {
        const auto& tmpl = gateway::TemplateRegistry::builtin().get("persona.refine");
        auto bundle =
            gateway::render_prompt(tmpl, {{"PERSONA_DESCRIPTION", long_description}});
        if (retry)
            bundle.rendered_text +=
                "\n\nYour previous summary was empty or not shorter than the "
                "description. Rewrite it concisely, keeping all the information.";
        return gw.complete(bundle);
    };
    for (bool retry : {false, true}) {
        auto out = text::trim(attempt(retry));
        if (!out.empty() && text::count_words(out) < words_in) return out;
    }
    fail("DegenerateSummary", "reply empty or not shorter after retry");
}

std::vector<PersonaProfile> build_persona_set(const std::vector<SurveyRecord>& records,
                                              const QuestionRegistry& registry,
                                              gateway::Gateway& gw,
                                              const std::string& country, std::size_t n,
                                              std::uint64_t seed) {
    std::vector<const SurveyRecord*> pool;
    for (const auto& r : records)
        if (r.country == country) pool.push_back(&r);
    if (n > pool.size())
        fail("InsufficientRecords", "want " + std::to_string(n) + " personas, have " +
                                        std::to_string(pool.size()) + " " + country +
                                        " respondents");

    Rng rng(seed);
    auto picks = rng.sample_without_replacement(pool.size(), n);

    std::vector<PersonaProfile> out;
    out.reserve(n);
    for (auto idx : picks) {
        const SurveyRecord& rec = *pool[idx];
        PersonaProfile p;
        p.respondent_id = rec.respondent_id;
        p.country = rec.country;
        p.attributes = collect_statements(rec, registry);
        p.long_description = textualize(rec, registry);
        p.refined_description = refine(gw, p.long_description);
        p.id = digest::sha256_fields(
            {"persona", p.respondent_id, p.country, p.long_description});
        validate_profile(p);
        out.push_back(std::move(p));
    }
    return out;
}

void validate_profile(const PersonaProfile& p) {
    if (p.id.empty() || p.country.empty()) fail("InvalidProfile", "missing id or country");
    for (auto g : attribute_groups()) {
        auto it = p.attributes.find(std::string(to_string(g)));
        if (it == p.attributes.end() || it->second.empty())
            fail("InvalidProfile",
                 p.id + ": empty attribute group " + std::string(to_string(g)));
    }
    if (p.refined_description.empty())
        fail("InvalidProfile", p.id + ": empty refined description");
    if (text::count_words(p.refined_description) >=
        text::count_words(p.long_description))
        fail("InvalidProfile", p.id + ": refined description not shorter");
}

std::string display_name(const PersonaProfile& p) {
    if (p.id.size() < 8) fail("InvalidProfile", "id too short for a display name");
    return "Persona " + p.id.substr(0, 8);
}

nlohmann::json persona_to_json(const PersonaProfile& p) {
    return {{"id", p.id},
            {"respondent_id", p.respondent_id},
            {"country", p.country},
            {"attributes", p.attributes},
            {"long_description", p.long_description},
            {"refined_description", p.refined_description}};
}

PersonaProfile persona_from_json(const nlohmann::json& j) {
    PersonaProfile p;
    p.id = j.at("id").get<std::string>();
    p.respondent_id = j.at("respondent_id").get<std::string>();
    p.country = j.at("country").get<std::string>();
    p.attributes =
        j.at("attributes").get<std::map<std::string, std::vector<std::string>>>();
    p.long_description = j.at("long_description").get<std::string>();
    p.refined_description = j.at("refined_description").get<std::string>();
    return p;
}

void save_personas(const std::string& path, const std::vector<PersonaProfile>& personas) {
    jsonl::Writer w(path);
    for (const auto& p : personas) w.write(persona_to_json(p));
}

std::vector<PersonaProfile> load_personas(const std::string& path) {
    jsonl::Reader r(path);
    std::vector<PersonaProfile> out;
    while (auto j = r.next()) out.push_back(persona_from_json(*j));
    return out;
}

} // namespace forge::persona
