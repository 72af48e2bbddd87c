#include "forge/core/document.hpp"

#include <nlohmann/json.hpp>

#include "forge/core/digest.hpp"
#include "forge/core/errors.hpp"
#include "forge/core/text.hpp"
#include "forge/core/unicode.hpp"

namespace forge {

using nlohmann::json;

std::string_view to_string(Script s) {
    switch (s) {
        case Script::arabic: return "arabic";
        case Script::arabizi: return "arabizi";
        case Script::latin: return "latin";
    }
    return "latin";
}

std::string_view to_string(Genre g) {
    switch (g) {
        case Genre::educational: return "educational";
        case Genre::story: return "story";
        case Genre::personal_essay: return "personal_essay";
        case Genre::blog_post: return "blog_post";
        case Genre::review: return "review";
        case Genre::conversation: return "conversation";
        case Genre::news: return "news";
        case Genre::wiki: return "wiki";
        case Genre::web: return "web";
        case Genre::other: return "other";
    }
    return "other";
}

std::string_view to_string(Source s) {
    switch (s) {
        case Source::mt: return "mt";
        case Source::synthetic: return "synthetic";
        case Source::retrieved: return "retrieved";
        case Source::native: return "native";
    }
    return "native";
}

Script script_from_string(std::string_view s) {
    if (s == "arabic") return Script::arabic;
    if (s == "arabizi") return Script::arabizi;
    if (s == "latin") return Script::latin;
    fail("InvalidEnum", "unknown script '" + std::string(s) + "'");
}

Genre genre_from_string(std::string_view s) {
    static const std::map<std::string_view, Genre> kMap = {
        {"educational", Genre::educational},
        {"story", Genre::story},
        {"personal_essay", Genre::personal_essay},
        {"blog_post", Genre::blog_post},
        {"review", Genre::review},
        {"conversation", Genre::conversation},
        {"news", Genre::news},
        {"wiki", Genre::wiki},
        {"web", Genre::web},
        {"other", Genre::other},
    };
    auto it = kMap.find(s);
    if (it == kMap.end()) fail("InvalidEnum", "unknown genre '" + std::string(s) + "'");
    return it->second;
}

Source source_from_string(std::string_view s) {
    if (s == "mt") return Source::mt;
    if (s == "synthetic") return Source::synthetic;
    if (s == "retrieved") return Source::retrieved;
    if (s == "native") return Source::native;
    fail("InvalidEnum", "unknown source '" + std::string(s) + "'");
}

const std::vector<Genre>& generation_genres() {
    static const std::vector<Genre> kGenres = {
        Genre::story, Genre::personal_essay, Genre::blog_post, Genre::review,
        Genre::conversation};
    return kGenres;
}

std::string canonical_id(std::string_view text, std::string_view lang, Script script,
                         Source source) {
    if (text.empty()) fail("EmptyDocument", "cannot derive id from empty text");
    std::string norm = unicode::nfc(text);
    return digest::sha256_fields({norm, lang, to_string(script), to_string(source)});
}

void validate_document(const Document& doc) {
    if (doc.text.empty()) fail("EmptyDocument", "document text is empty");
    if (doc.word_count != text::count_words(doc.text))
        fail("InvalidDocument", "word_count does not match text (id " + doc.id + ")");
    if (doc.id != canonical_id(doc.text, doc.lang, doc.script, doc.source))
        fail("InvalidDocument", "id does not match canonical digest");
    if (doc.source == Source::mt || doc.source == Source::synthetic) {
        if (!doc.provenance.count("template_id") || !doc.provenance.count("teacher_model_id"))
            fail("InvalidDocument",
                 "mt/synthetic document missing template_id or teacher_model_id provenance");
    }
}

Document make_document(std::string text, std::string lang, Script script, Genre genre,
                       Source source, std::map<std::string, std::string> provenance) {
    Document doc;
    doc.text = std::move(text);
    doc.lang = std::move(lang);
    doc.script = script;
    doc.genre = genre;
    doc.source = source;
    doc.provenance = std::move(provenance);
    doc.word_count = text::count_words(doc.text);
    doc.id = canonical_id(doc.text, doc.lang, doc.script, doc.source);
    validate_document(doc);
    return doc;
}

json document_to_json(const Document& doc) {
    json prov = json::object();
    for (const auto& [k, v] : doc.provenance) prov[k] = v;
    return json{{"id", doc.id},
                {"lang", doc.lang},
                {"script", to_string(doc.script)},
                {"genre", to_string(doc.genre)},
                {"source", to_string(doc.source)},
                {"text", doc.text},
                {"word_count", doc.word_count},
                {"provenance", prov}};
}

Document document_from_json(const json& j) {
    Document doc;
    doc.id = j.at("id").get<std::string>();
    doc.lang = j.at("lang").get<std::string>();
    doc.script = script_from_string(j.at("script").get<std::string>());
    doc.genre = genre_from_string(j.at("genre").get<std::string>());
    doc.source = source_from_string(j.at("source").get<std::string>());
    doc.text = j.at("text").get<std::string>();
    doc.word_count = j.at("word_count").get<std::size_t>();
    if (j.contains("provenance"))
        for (auto it = j.at("provenance").begin(); it != j.at("provenance").end(); ++it)
            doc.provenance[it.key()] = it.value().get<std::string>();
    validate_document(doc);
    return doc;
}

std::string_view to_string(LinguisticCue::Kind k) {
    switch (k) {
        case LinguisticCue::Kind::proverb: return "proverb";
        case LinguisticCue::Kind::idiom: return "idiom";
        case LinguisticCue::Kind::utterance: return "utterance";
        case LinguisticCue::Kind::gloss: return "gloss";
    }
    return "proverb";
}

LinguisticCue::Kind cue_kind_from_string(std::string_view s) {
    if (s == "proverb") return LinguisticCue::Kind::proverb;
    if (s == "idiom") return LinguisticCue::Kind::idiom;
    if (s == "utterance") return LinguisticCue::Kind::utterance;
    if (s == "gloss") return LinguisticCue::Kind::gloss;
    fail("InvalidEnum", "unknown cue kind '" + std::string(s) + "'");
}

json cue_to_json(const LinguisticCue& cue) {
    return json{{"kind", to_string(cue.kind)},
                {"text", cue.text},
                {"english_gloss", cue.english_gloss}};
}

LinguisticCue cue_from_json(const json& j) {
    LinguisticCue cue;
    cue.kind = cue_kind_from_string(j.at("kind").get<std::string>());
    cue.text = j.at("text").get<std::string>();
    cue.english_gloss = j.at("english_gloss").get<std::string>();
    if (cue.text.empty()) fail("InvalidCue", "cue text is empty");
    if (cue.english_gloss.empty())
        fail("InvalidCue", "cue english_gloss is empty");
    return cue;
}

const std::vector<std::string>& heritage_categories() {
    static const std::vector<std::string> kCategories = {
        "food",      "clothes",      "landmarks", "festivals_celebrations",
        "geography", "handicrafts",  "architecture", "fauna",
        "flora",     "music"};
    return kCategories;
}

json concept_to_json(const CulturalConcept& c) {
    return json{{"id", c.id}, {"country", c.country}, {"category", c.category}, {"name", c.name}};
}

CulturalConcept concept_from_json(const json& j) {
    CulturalConcept c;
    c.id = j.at("id").get<std::string>();
    c.country = j.at("country").get<std::string>();
    c.category = j.at("category").get<std::string>();
    c.name = j.at("name").get<std::string>();
    const auto& cats = heritage_categories();
    bool ok = false;
    for (const auto& cat : cats) ok = ok || cat == c.category;
    if (!ok) fail("InvalidConcept", "unknown heritage category '" + c.category + "'");
    return c;
}

} // namespace forge
