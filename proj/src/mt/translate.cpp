#include "forge/mt/translate.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include <nlohmann/json.hpp>

#include "forge/core/errors.hpp"
#include "forge/core/text.hpp"

namespace forge::mt {

namespace {

// (paragraph, separator-after) pairs; a separator is a maximal run of two or
// more newlines. Concatenating all pairs reconstructs the text exactly.
std::vector<std::pair<std::string, std::string>> split_paragraphs(
    const std::string& text) {
    std::vector<std::pair<std::string, std::string>> parts;
    std::size_t start = 0, i = 0;
    while (i < text.size()) {
        if (text[i] != '\n') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] == '\n') ++j;
        if (j - i >= 2) {
            parts.emplace_back(text.substr(start, i - start), text.substr(i, j - i));
            start = j;
        }
        i = j;
    }
    parts.emplace_back(text.substr(start), "");
    return parts;
}

// Greedy packing of paragraphs into chunks of at most max_bytes (an oversized
// single paragraph travels alone). joins[k] separates chunks[k] and
// chunks[k+1]; the final element of joins is the text's own tail separator
// ("" unless the text ended in a blank line).
void pack_chunks(const std::string& text, std::size_t max_bytes,
                 std::vector<std::string>& chunks, std::vector<std::string>& joins) {
    auto parts = split_paragraphs(text);
    std::string cur;
    std::string pending_sep;
    bool have = false;
    for (auto& [para, sep] : parts) {
        if (!have) {
            cur = para;
            have = true;
        } else if (cur.size() + pending_sep.size() + para.size() > max_bytes) {
            chunks.push_back(std::move(cur));
            joins.push_back(pending_sep);
            cur = para;
        } else {
            cur += pending_sep;
            cur += para;
        }
        pending_sep = sep;
    }
    chunks.push_back(std::move(cur));
    joins.push_back(pending_sep); // tail separator of the whole text
}

struct MtOutcome {
    std::optional<Document> doc;
    corpus::FilterVerdict verdict;
};

MtOutcome translate_impl(gateway::Gateway& gw, const Document& doc,
                         std::string_view target_lang, const MtOptions& opts) {
    std::string translated;
    std::size_t n_chunks = 1;
    if (doc.text.size() <= opts.max_chunk_bytes) {
        translated = gw.complete(build_mt_prompt(doc, target_lang));
    } else {
        std::vector<std::string> chunks, joins;
        pack_chunks(doc.text, opts.max_chunk_bytes, chunks, joins);
        n_chunks = chunks.size();
        const auto& tmpl = gateway::TemplateRegistry::builtin().get(
            gateway::translate_template_id(target_lang));
        for (std::size_t k = 0; k < chunks.size(); ++k) {
            if (k) translated += joins[k - 1];
            translated +=
                gw.complete(gateway::render_prompt(tmpl, {{"English_text", chunks[k]}}));
        }
        translated += joins.back();
    }

    if (text::trim(translated).empty())
        return {std::nullopt, {false, "empty", "teacher returned no text"}};

    std::map<std::string, std::string> prov{
        {"parent_id", doc.id},
        {"template_id", gateway::translate_template_id(target_lang)},
        {"teacher_model_id", gw.config().model_id}};
    if (n_chunks > 1) prov["chunks"] = std::to_string(n_chunks);

    Document out = make_document(std::move(translated), std::string(target_lang),
                                 Script::arabic, doc.genre, Source::mt, std::move(prov));
    auto verdict = corpus::repetition_verdict(out.text, opts.thresholds);
    return {std::move(out), verdict};
}

} // namespace

gateway::PromptBundle build_mt_prompt(const Document& doc, std::string_view target_lang) {
    if (doc.lang != "en")
        fail("PreconditionViolation", "translation input must be English, got " + doc.lang);
    return gateway::render_prompt(gateway::translate_template_id(target_lang),
                                  {{"English_text", doc.text}});
}

Document translate_document(gateway::Gateway& gw, const Document& doc,
                            std::string_view target_lang, const MtOptions& opts) {
    auto r = translate_impl(gw, doc, target_lang, opts);
    if (!r.verdict.accepted)
        fail("RejectedByFilter", r.verdict.rule + ": " + r.verdict.detail);
    return std::move(*r.doc);
}

MtStats translate_corpus(gateway::Gateway& gw, const std::vector<Document>& docs,
                         std::string_view target_lang, std::vector<Document>& out,
                         corpus::Quarantine& quarantine, const MtOptions& opts) {
    MtStats stats;
    for (const auto& doc : docs) {
        ++stats.seen;
        auto r = translate_impl(gw, doc, target_lang, opts);
        if (r.verdict.accepted) {
            ++stats.translated;
            out.push_back(std::move(*r.doc));
        } else {
            ++stats.rejected;
            quarantine.add(r.doc ? *r.doc : doc, r.verdict);
        }
    }
    return stats;
}

nlohmann::json translate_record(gateway::Gateway& gw, const nlohmann::json& item,
                                std::string_view target_lang,
                                const StructuredSpec& spec) {
    if (!item.is_object()) fail("KeyMismatch", "record is not a JSON object");
    for (const auto& key : spec.content_keys) {
        if (!item.contains(key)) fail("KeyMismatch", "content key missing: " + key);
        const auto& v = item.at(key);
        bool ok = v.is_string();
        if (v.is_array()) {
            ok = true;
            for (const auto& e : v) ok = ok && e.is_string();
        }
        if (!ok) fail("KeyMismatch", "content key " + key + " is not text");
    }

    auto check = [&](const nlohmann::json& reply) {
        if (!reply.is_object()) fail("SchemaViolation", "reply is not a JSON object");
        for (const auto& [key, value] : item.items()) {
            (void)value;
            if (!reply.contains(key)) fail("SchemaViolation", "missing key " + key);
        }
        for (const auto& [key, value] : reply.items()) {
            (void)value;
            if (!item.contains(key)) fail("SchemaViolation", "unexpected key " + key);
        }
        for (const auto& key : spec.content_keys) {
            const auto& in = item.at(key);
            const auto& got = reply.at(key);
            if (in.is_string() && !got.is_string())
                fail("SchemaViolation", key + " must stay a string");
            if (in.is_array() &&
                (!got.is_array() || got.size() != in.size() ||
                 !std::all_of(got.begin(), got.end(),
                              [](const nlohmann::json& e) { return e.is_string(); })))
                fail("SchemaViolation", key + " must stay a " +
                                            std::to_string(in.size()) + "-element list");
        }
    };

    nlohmann::json reply;
    try {
        auto bundle =
            gateway::render_prompt(gateway::translate_json_template_id(target_lang),
                                   {{"JSON_OBJECT", item.dump()}});
        reply = gw.complete_json(bundle, check);
    } catch (const Error& e) {
        if (e.code() == "SchemaViolation") fail("KeyMismatch", e.what());
        throw;
    }

    // Adopt translations; everything structural comes from the input, so it
    // is byte-identical no matter what the teacher echoed back.
    nlohmann::json out = item;
    for (const auto& key : spec.content_keys) out[key] = reply.at(key);
    return out;
}

std::vector<nlohmann::json> translate_structured(gateway::Gateway& gw,
                                                 const std::vector<nlohmann::json>& items,
                                                 std::string_view target_lang,
                                                 const StructuredSpec& spec) {
    std::vector<nlohmann::json> out;
    out.reserve(items.size());
    for (const auto& item : items)
        out.push_back(translate_record(gw, item, target_lang, spec));
    return out;
}

} // namespace forge::mt
