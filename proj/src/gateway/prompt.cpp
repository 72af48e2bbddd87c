#include "forge/gateway/prompt.hpp"

#include <algorithm>
#include <cctype>

#include "forge/core/digest.hpp"
#include "forge/core/errors.hpp"

namespace forge::gateway {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Placeholder-shaped tokens in a template: "{name}" where name is an
// identifier. Literal braces around JSON examples never match.
std::vector<std::string> placeholder_names(std::string_view text) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i + 2 < text.size(); ++i) {
        if (text[i] != '{' || !ident_start(text[i + 1])) continue;
        std::size_t j = i + 2;
        while (j < text.size() && ident_char(text[j])) ++j;
        if (j < text.size() && text[j] == '}') {
            out.emplace_back(text.substr(i + 1, j - i - 1));
            i = j;
        }
    }
    return out;
}

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
    std::size_t pos = 0;
    while ((pos = text.find(from, pos)) != std::string::npos) {
        text.replace(pos, from.size(), to);
        pos += to.size();
    }
    return text;
}

struct DialectNames {
    std::string code;      // egy / mor
    std::string language;  // Egyptian Arabic / Moroccan Arabic
    std::string adjective; // Egyptian / Moroccan
    std::string demonym;   // Egyptians / Moroccans
    std::string country;   // Egypt / Morocco
};

const DialectNames kEgy{"egy", "Egyptian Arabic", "Egyptian", "Egyptians", "Egypt"};
const DialectNames kMor{"mor", "Moroccan Arabic", "Moroccan", "Moroccans", "Morocco"};

std::string translate_text(const DialectNames& d) {
    return "Translate the following text from English to " + d.language +
           ". Ensure that all words are in " + d.language +
           ", and do not use any Modern Standard Arabic (MSA). Keep the translation "
           "casual, conversational, and reflective of how " + d.demonym +
           " would naturally speak in everyday situations. Avoid any formal or "
           "classical language structures. Translate only the input paragraph and "
           "don't add anything else in your output.\n"
           "English: {English_text}";
}

std::string translate_json_text(const DialectNames& d) {
    return "Translate the following text from English to " + d.language +
           ". Ensure that all words are in " + d.language +
           ", and do not use any Modern Standard Arabic (MSA). Keep the translation "
           "casual, conversational, and reflective of how " + d.demonym +
           " would naturally speak in everyday situations. Avoid any formal or "
           "classical language structures. Translate only the content keys in the "
           "following JSON, and output a json of the same format:\n"
           "{JSON_OBJECT}";
}

std::string arabizi_text(const DialectNames& d) {
    return "Write the following " + d.adjective + " dialectal Arabic text in " +
           d.adjective + " Arabizi. Ensure that all words are written in " +
           d.adjective + " Arabizi. Keep the text casual, conversational, and "
           "reflective of how " + d.demonym +
           " would naturally write in everyday situations using Arabizi. Translate "
           "only the content keys in the following JSON, and output a json of the "
           "same format:\n"
           "{JSON_OBJECT}";
}

std::string generation_text(const DialectNames& d) {
    return "Act as the following person: {persona_description} Act like you are "
           "{person_Name} and write a {text_genre} in " + d.adjective +
           " dialect, using colloquial Arabic script as spoken in " + d.country +
           " and not Modern Standard Arabic (MSA). Use this context and use the "
           "information provided in it while writing the {text_genre}:\n"
           "{context}\n"
           "Make sure to follow these conditions: \n"
           "1. Rely on the provided context when writing the {text_genre}.\n"
           "2. Ensure that the written {text_genre} reflects the cultural "
           "background, values, and worldview of {person_Name}.\n"
           "3. Don't write the persona's description. I want you to focus only on "
           "the provided context when writing while reflecting the perosna's "
           "background.\n"
           "Note: Ensure that all words are in " + d.language +
           ", and do not use any Modern Standard Arabic (MSA). Keep the translation "
           "casual, conversational, and reflective of how " + d.demonym +
           " would naturally speak in everyday situations.";
}

const char* kRefineText =
    "I have the following persona description, I want you to write it in a concise "
    "manner keeping all the information, the output should be plain text, make sure "
    "to include all values, morals, and culture of the persona:\n"
    "{PERSONA_DESCRIPTION}";

std::string cultural_qa_text(const DialectNames& d) {
    std::string t =
        "You are an expert in Moroccan culture and language, with native-level "
        "fluency in Moroccan Arabic dialect written in Arabic script. Your task is "
        "to transform detailed articles or information (like recipes, historical "
        "accounts, cultural traditions, etc.) into practical, useful "
        "instruction-response pairs in authentic Moroccan Arabic dialect expressed "
        "in Arabic script.\n"
        "\n"
        "## Task Description:\n"
        "1. I will provide you with raw text content (like cooking recipes, "
        "cultural traditions, historical information, etc.)\n"
        "2. Transform this content into practical instruction-response pairs "
        "where:\n"
        "   - Instructions ask how to do something, how something works, or how to "
        "understand something\n"
        "   - Responses provide thorough, practical explanations in Moroccan "
        "dialect\n"
        "3. Focus on making these interactions useful for someone wanting to learn "
        "practical information\n"
        "4. Output the results in structured JSON format\n"
        "\n"
        "## Instruction Format Guidelines:\n"
        "- For procedural content (recipes, crafts, etc.): Create \"how to\" "
        "questions\n"
        "  - Example: {example_1}\n"
        "- For historical/factual content: Create \"why\" questions\n"
        "  - Example: {example_2}\n"
        "- For cultural practices: Create \"what is\" or \"how do we celebrate\" "
        "questions\n"
        "  - Example: {example_3}\n"
        "\n"
        "## Response Format Guidelines:\n"
        "- Make responses detailed and practical\n"
        "- Include specific steps for procedural content\n"
        "- Use authentic Moroccan vocabulary and expressions\n"
        "- Structure responses in a logical order \n"
        "- For recipes or procedures, list steps clearly in the order they should "
        "be performed\n"
        "- Include tips and warnings where appropriate\n"
        "- Keep the tone conversational and helpful, as if explaining to a friend\n"
        "\n"
        "## Language Guidelines:\n"
        "- Use authentic Moroccan Arabic dialect written in Arabic script (not "
        "transliteration)\n"
        "- Include typical Moroccan cooking/cultural terminology and expressions\n"
        "- Use language as it would naturally be spoken, not literary Arabic\n"
        "- Include common Moroccan filler words and expressions where natural\n"
        "- For cooking terms or specialized vocabulary, use the actual terms "
        "Moroccans use.\n"
        "\n"
        "## Output Format:\n"
        "The output should be valid JSON with the following structure:\n"
        "```json\n"
        "{\n"
        "  \"instruction_response_pairs\": [\n"
        "    {\n"
        "      \"instruction\": \"[practical instruction in Moroccan dialect]\",\n"
        "      \"response\": \"[detailed practical response in Moroccan dialect]\"\n"
        "    },\n"
        "    {\n"
        "      \"instruction\": \"[another practical instruction]\",\n"
        "      \"response\": \"[another detailed response]\"\n"
        "    }\n"
        "  ]\n"
        "}\n"
        "```\n"
        "## Instructions:\n"
        "1. Generate at least 3-5 practical instruction-response pairs based on the "
        "content I provide.\n"
        "2. Make each instruction focus on a practical aspect (how-to, ingredients, "
        "common mistakes, variations, etc.).\n"
        "3. Ensure responses are detailed enough to be practically useful.\n"
        "4. The resulting JSON must be properly formatted and valid.\n"
        "5. For specialized terms or techniques, use the authentic Moroccan terms.\n"
        "6. When dealing with recipes or procedures, make sure the steps are in "
        "logical order.\n"
        "7. If the article contains cultural context or historical information, "
        "include some of this in the responses to provide depth.\n"
        "8. If the article does not have any relevent information to the Moroccan "
        "culture then return an empty list.\n"
        "\n"
        "Now, I'll provide you with content, and you'll transform it into practical "
        "instruction-response pairs in Moroccan dialect as specified above.\n"
        "{Text}";
    if (d.code != "mor") {
        t = replace_all(t, "Moroccans", d.demonym);
        t = replace_all(t, "Moroccan", d.adjective);
    }
    return t;
}

const char* kJudgeText =
    "You are grading the correctness of an answer. Compare the model answer to the "
    "reference answer for the given question and rate its correctness on a scale "
    "from 0 to 10, where 0 means completely incorrect and 10 means fully correct "
    "and complete. Reply with the integer score only.\n"
    "Question: {question}\n"
    "Reference answer: {reference_answer}\n"
    "Model answer: {model_answer}";

TemplateRegistry build_builtin() {
    TemplateRegistry reg;
    for (const auto* d : {&kEgy, &kMor}) {
        reg.add({"mt.translate." + d->code, translate_text(*d), {"English_text"},
                 false, 0.0, 4096});
        reg.add({"mt.translate_json." + d->code, translate_json_text(*d),
                 {"JSON_OBJECT"}, true, 0.0, 4096});
        reg.add({"arabizi.convert." + d->code, arabizi_text(*d), {"JSON_OBJECT"},
                 true, 0.0, 4096});
        reg.add({"gen.text." + d->code, generation_text(*d),
                 {"persona_description", "person_Name", "text_genre", "context"},
                 false, 0.7, 2048});
        reg.add({"sft.cultural_qa." + d->code, cultural_qa_text(*d),
                 {"example_1", "example_2", "example_3", "Text"}, true, 0.7, 4096});
    }
    reg.add({"persona.refine", kRefineText, {"PERSONA_DESCRIPTION"}, false, 0.7, 1024});
    reg.add({"judge.correctness", kJudgeText,
             {"question", "reference_answer", "model_answer"}, false, 0.0, 16});
    return reg;
}

void check_lang(std::string_view lang) {
    if (lang != "egy" && lang != "mor")
        fail("UnsupportedTargetLang", std::string(lang));
}

} // namespace

std::string PromptBundle::digest() const {
    return digest::sha256_hex(rendered_text);
}

const TemplateRegistry& TemplateRegistry::builtin() {
    static const TemplateRegistry reg = build_builtin();
    return reg;
}

void TemplateRegistry::add(PromptTemplate t) {
    // Sanity: every declared slot occurs in the text, and every
    // placeholder-shaped token is a declared slot.
    auto found = placeholder_names(t.text);
    for (const auto& slot : t.slots) {
        if (t.text.find("{" + slot + "}") == std::string::npos)
            fail("UnfilledPlaceholder", t.id + ": slot " + slot + " not in text");
    }
    for (const auto& name : found) {
        if (std::find(t.slots.begin(), t.slots.end(), name) == t.slots.end())
            fail("UnfilledPlaceholder", t.id + ": undeclared placeholder {" + name + "}");
    }
    templates_[t.id] = std::move(t);
}

bool TemplateRegistry::has(std::string_view id) const {
    return templates_.find(id) != templates_.end();
}

const PromptTemplate& TemplateRegistry::get(std::string_view id) const {
    auto it = templates_.find(id);
    if (it == templates_.end()) fail("UnknownTemplate", std::string(id));
    return it->second;
}

std::vector<std::string> TemplateRegistry::ids() const {
    std::vector<std::string> out;
    for (const auto& [id, t] : templates_) out.push_back(id);
    return out;
}

PromptBundle render_prompt(const PromptTemplate& tmpl,
                           const std::map<std::string, std::string>& slots) {
    for (const auto& [name, value] : slots) {
        (void)value;
        if (std::find(tmpl.slots.begin(), tmpl.slots.end(), name) == tmpl.slots.end())
            fail("UnknownSlot", tmpl.id + ": " + name);
    }
    std::string text = tmpl.text;
    for (const auto& slot : tmpl.slots) {
        auto it = slots.find(slot);
        if (it == slots.end()) fail("MissingSlot", tmpl.id + ": " + slot);
        text = replace_all(std::move(text), "{" + slot + "}", it->second);
    }
    PromptBundle b;
    b.template_id = tmpl.id;
    b.rendered_text = std::move(text);
    b.slots = slots;
    b.max_output_tokens = tmpl.max_output_tokens;
    b.temperature = tmpl.temperature;
    b.json_output = tmpl.json_output;
    return b;
}

PromptBundle render_prompt(std::string_view template_id,
                           const std::map<std::string, std::string>& slots) {
    return render_prompt(TemplateRegistry::builtin().get(template_id), slots);
}

std::string translate_template_id(std::string_view lang) {
    check_lang(lang);
    return "mt.translate." + std::string(lang);
}
std::string translate_json_template_id(std::string_view lang) {
    check_lang(lang);
    return "mt.translate_json." + std::string(lang);
}
std::string arabizi_template_id(std::string_view lang) {
    check_lang(lang);
    return "arabizi.convert." + std::string(lang);
}
std::string generation_template_id(std::string_view lang) {
    check_lang(lang);
    return "gen.text." + std::string(lang);
}
std::string cultural_qa_template_id(std::string_view lang) {
    check_lang(lang);
    return "sft.cultural_qa." + std::string(lang);
}

} // namespace forge::gateway
