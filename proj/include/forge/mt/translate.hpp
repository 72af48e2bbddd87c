#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "forge/core/document.hpp"
#include "forge/corpus/repetition.hpp"
#include "forge/gateway/gateway.hpp"

namespace forge::mt {

// Renders the dialect translation prompt with the document text in the single
// slot. Errors: UnsupportedTargetLang; PreconditionViolation for non-English
// input.
gateway::PromptBundle build_mt_prompt(const Document& doc, std::string_view target_lang);

struct MtOptions {
    // Documents above this many UTF-8 bytes are split on blank-line paragraph
    // boundaries, translated per chunk, and rejoined with the original
    // separators.
    std::size_t max_chunk_bytes = 6000;
    corpus::RepetitionThresholds thresholds;
};

// Translates one document: lang=target, script=arabic, source=mt, genre
// preserved, provenance parent_id/template_id/teacher_model_id. The output
// must pass the repetition filter. Errors: RejectedByFilter (carries the
// filter rule and fragment; empty teacher output counts as rule "empty").
Document translate_document(gateway::Gateway& gw, const Document& doc,
                            std::string_view target_lang, const MtOptions& opts = {});

struct MtStats {
    std::size_t seen = 0;
    std::size_t translated = 0;
    std::size_t rejected = 0;
};

// Whole-corpus translation, input order preserved. Rejected outputs go to the
// quarantine with their verdict instead of being dropped silently (empty
// teacher output quarantines the input document, since no output document can
// be built from it).
MtStats translate_corpus(gateway::Gateway& gw, const std::vector<Document>& docs,
                         std::string_view target_lang, std::vector<Document>& out,
                         corpus::Quarantine& quarantine, const MtOptions& opts = {});

// Which top-level keys of a structured record hold translatable text (strings
// or arrays of strings). Every other key is structural and survives verbatim.
struct StructuredSpec {
    std::vector<std::string> content_keys;
};

// Translates the content keys of one JSON record via the format-preserving
// prompt. The reply must keep the exact key set and content shapes (repaired
// via the gateway, then KeyMismatch); structural keys are copied from the
// input, so they are byte-identical by construction.
nlohmann::json translate_record(gateway::Gateway& gw, const nlohmann::json& item,
                                std::string_view target_lang,
                                const StructuredSpec& spec);

// Record count and order preserved. Errors: KeyMismatch, MalformedOutput.
std::vector<nlohmann::json> translate_structured(gateway::Gateway& gw,
                                                 const std::vector<nlohmann::json>& items,
                                                 std::string_view target_lang,
                                                 const StructuredSpec& spec);

} // namespace forge::mt
