#include "forge/persona/survey.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "forge/core/errors.hpp"

namespace forge::persona {

std::string_view to_string(AttributeGroup g) {
    switch (g) {
        case AttributeGroup::demographics: return "demographics";
        case AttributeGroup::socioeconomic: return "socioeconomic";
        case AttributeGroup::moral_values: return "moral_values";
    }
    fail("ConfigInvalid", "bad attribute group");
}

AttributeGroup group_from_string(std::string_view s) {
    for (auto g : attribute_groups())
        if (to_string(g) == s) return g;
    fail("ConfigInvalid", "unknown attribute group: " + std::string(s));
}

const std::vector<AttributeGroup>& attribute_groups() {
    static const std::vector<AttributeGroup> order{AttributeGroup::demographics,
                                                   AttributeGroup::socioeconomic,
                                                   AttributeGroup::moral_values};
    return order;
}

const std::vector<std::string>& wvs_dimensions() {
    static const std::vector<std::string> dims{"EcoV", "EthV", "HW",   "IP",    "PST",
                                               "PC",   "PM",   "PS",   "PCPR",  "PIPP",
                                               "RV",   "SCTOM", "SVNS"};
    return dims;
}

QuestionRegistry QuestionRegistry::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("UnresolvedPath", "cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) fail("ConfigInvalid", "registry is not valid JSON: " + path);
    return from_json(j);
}

QuestionRegistry QuestionRegistry::from_json(const nlohmann::json& j) {
    QuestionRegistry reg;
    if (!j.is_object() || !j.contains("version") || !j["version"].is_number_integer() ||
        j["version"].get<int>() < 1)
        fail("ConfigInvalid", "registry needs an integer version >= 1");
    reg.version_ = j["version"].get<int>();
    if (!j.contains("questions") || !j["questions"].is_array() || j["questions"].empty())
        fail("ConfigInvalid", "registry needs a nonempty questions array");
    for (const auto& qj : j["questions"]) {
        Question q;
        q.id = qj.at("id").get<std::string>();
        q.group = group_from_string(qj.at("group").get<std::string>());
        if (qj.contains("dimension")) q.dimension = qj["dimension"].get<std::string>();
        for (const auto& [code, text] : qj.at("statements").items()) {
            std::size_t pos = 0;
            int c = std::stoi(code, &pos);
            if (pos != code.size())
                fail("ConfigInvalid", q.id + ": non-integer answer code " + code);
            if (c < 0) fail("ConfigInvalid", q.id + ": negative codes are non-answers");
            q.statements[c] = text.get<std::string>();
        }
        if (reg.find(q.id)) fail("ConfigInvalid", "duplicate question " + q.id);
        reg.questions_.push_back(std::move(q));
    }
    return reg;
}

const Question* QuestionRegistry::find(std::string_view id) const {
    for (const auto& q : questions_)
        if (q.id == id) return &q;
    return nullptr;
}

std::vector<std::string> QuestionRegistry::dimensions() const {
    std::vector<std::string> dims;
    for (const auto& q : questions_)
        if (!q.dimension.empty() &&
            std::find(dims.begin(), dims.end(), q.dimension) == dims.end())
            dims.push_back(q.dimension);
    std::sort(dims.begin(), dims.end());
    return dims;
}

namespace {

// One delimited row; double quotes wrap fields containing the delimiter and
// double up to escape themselves.
std::vector<std::string> split_row(const std::string& line, char delim,
                                   const std::string& where) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == delim) {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) fail("MalformedSurvey", where + ": unterminated quote");
    fields.push_back(std::move(cur));
    return fields;
}

} // namespace

std::vector<SurveyRecord> load_survey(const std::string& path,
                                      const QuestionRegistry& registry) {
    std::ifstream in(path);
    if (!in) fail("UnresolvedPath", "cannot open " + path);

    std::string header;
    if (!std::getline(in, header)) fail("MalformedSurvey", path + ": empty file");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    char delim = header.find('\t') != std::string::npos ? '\t' : ',';

    auto cols = split_row(header, delim, path + ":1");
    if (cols.size() < 2 || cols[0] != "respondent_id" || cols[1] != "country")
        fail("MalformedSurvey", path + ": header must start respondent_id,country");
    std::size_t first_q = 2;
    bool has_weight = cols.size() > 2 && cols[2] == "weight";
    if (has_weight) first_q = 3;
    for (std::size_t i = first_q; i < cols.size(); ++i)
        if (!registry.find(cols[i]))
            fail("UnknownQuestion", cols[i] + " is not in the question registry");

    std::vector<SurveyRecord> records;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto where = path + ":" + std::to_string(line_no);
        auto fields = split_row(line, delim, where);
        if (fields.size() != cols.size())
            fail("MalformedSurvey", where + ": expected " + std::to_string(cols.size()) +
                                        " fields, got " + std::to_string(fields.size()));
        SurveyRecord rec;
        rec.respondent_id = fields[0];
        rec.country = fields[1];
        if (rec.respondent_id.empty() || rec.country.empty())
            fail("MalformedSurvey", where + ": blank respondent_id or country");
        if (has_weight && !fields[2].empty()) {
            try {
                rec.weight = std::stod(fields[2]);
            } catch (const std::exception&) {
                fail("MalformedSurvey", where + ": bad weight " + fields[2]);
            }
        }
        for (std::size_t i = first_q; i < cols.size(); ++i) {
            if (fields[i].empty()) continue; // not asked
            int code = 0;
            try {
                std::size_t pos = 0;
                code = std::stoi(fields[i], &pos);
                if (pos != fields[i].size()) throw std::invalid_argument(fields[i]);
            } catch (const std::exception&) {
                fail("MalformedSurvey", where + ": non-integer code " + fields[i]);
            }
            if (code >= 0 && !registry.find(cols[i])->statements.count(code))
                fail("UnknownAnswerCode",
                     cols[i] + " code " + std::to_string(code) + " at " + where);
            rec.answers[cols[i]] = code;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace forge::persona
