#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace forge {

enum class Script { arabic, arabizi, latin };
enum class Genre {
    educational,
    story,
    personal_essay,
    blog_post,
    review,
    conversation,
    news,
    wiki,
    web,
    other
};
enum class Source { mt, synthetic, retrieved, native };

std::string_view to_string(Script s);
std::string_view to_string(Genre g);
std::string_view to_string(Source s);
Script script_from_string(std::string_view s);
Genre genre_from_string(std::string_view s);
Source source_from_string(std::string_view s);

// The five genres controlled generation produces.
const std::vector<Genre>& generation_genres();

// One corpus unit; the currency every stage consumes and emits.
struct Document {
    std::string id; // content hash, see canonical_id
    std::string lang;
    Script script = Script::latin;
    Genre genre = Genre::other;
    Source source = Source::native;
    std::string text;
    std::size_t word_count = 0;
    std::map<std::string, std::string> provenance;

    bool operator==(const Document&) const = default;
};

// Stable 256-bit digest over (NFC(text), lang, script, source), hex-encoded.
// Empty text -> EmptyDocument.
std::string canonical_id(std::string_view text, std::string_view lang, Script script,
                         Source source);

// Builds a Document with word_count and id derived from the fields and
// checks the provenance invariant (mt/synthetic need template_id and
// teacher_model_id).
Document make_document(std::string text, std::string lang, Script script, Genre genre,
                       Source source, std::map<std::string, std::string> provenance = {});

void validate_document(const Document& doc);

nlohmann::json document_to_json(const Document& doc);
Document document_from_json(const nlohmann::json& j);

struct LinguisticCue {
    enum class Kind { proverb, idiom, utterance, gloss };
    Kind kind = Kind::proverb;
    std::string text;
    std::string english_gloss;

    bool operator==(const LinguisticCue&) const = default;
};

std::string_view to_string(LinguisticCue::Kind k);
LinguisticCue::Kind cue_kind_from_string(std::string_view s);
nlohmann::json cue_to_json(const LinguisticCue& cue);
LinguisticCue cue_from_json(const nlohmann::json& j);

struct CulturalConcept {
    std::string id;
    std::string country;
    std::string category; // one of the ten heritage categories
    std::string name;

    bool operator==(const CulturalConcept&) const = default;
};

const std::vector<std::string>& heritage_categories();
nlohmann::json concept_to_json(const CulturalConcept& c);
CulturalConcept concept_from_json(const nlohmann::json& j);

} // namespace forge
