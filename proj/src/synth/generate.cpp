#include "forge/synth/generate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "forge/core/digest.hpp"
#include "forge/core/errors.hpp"
#include "forge/core/jsonl.hpp"
#include "forge/core/rng.hpp"
#include "forge/core/text.hpp"
#include "forge/core/unicode.hpp"

namespace forge::synth {

namespace {

// Prompt-facing genre name: underscores in the enum spelling become spaces.
std::string genre_label(Genre g) {
    std::string label{to_string(g)};
    std::replace(label.begin(), label.end(), '_', ' ');
    return label;
}

bool is_generation_genre(Genre g) {
    const auto& gen = generation_genres();
    return std::find(gen.begin(), gen.end(), g) != gen.end();
}

struct GenerationOutcome {
    std::optional<Document> doc; // set whenever the teacher produced text
    corpus::FilterVerdict verdict;
};

GenerationOutcome generate_outcome(gateway::Gateway& gw, const GenerationTask& task,
                                   const persona::PersonaProfile& persona,
                                   const Document& context, const CulturalConcept* concept_ptr,
                                   const corpus::RepetitionThresholds& thresholds) {
    auto bundle = build_generation_prompt(task, persona, context, concept_ptr);
    auto reply = text::trim(gw.complete(bundle));
    if (reply.empty())
        return {std::nullopt,
                {false, "empty",
                 "teacher returned no text (task seed " + std::to_string(task.seed) + ")"}};

    std::map<std::string, std::string> prov{
        {"persona_id", task.persona_id},
        {"context_doc_id", task.context_doc_id},
        {"template_id", bundle.template_id},
        {"teacher_model_id", gw.config().model_id},
        {"task_seed", std::to_string(task.seed)},
    };
    if (task.concept_id) prov["concept_id"] = *task.concept_id;

    Document doc = make_document(std::move(reply), task.target_lang, task.target_script,
                                 task.genre, Source::synthetic, std::move(prov));
    auto verdict = corpus::repetition_verdict(doc.text, thresholds);
    return {std::move(doc), std::move(verdict)};
}

} // namespace

nlohmann::json task_to_json(const GenerationTask& t) {
    nlohmann::json j{
        {"persona_id", t.persona_id},
        {"context_doc_id", t.context_doc_id},
        {"genre", to_string(t.genre)},
        {"target_lang", t.target_lang},
        {"target_script", to_string(t.target_script)},
        {"seed", t.seed},
    };
    if (t.concept_id) j["concept_id"] = *t.concept_id;
    auto cues = nlohmann::json::array();
    for (const auto& cue : t.cues) cues.push_back(cue_to_json(cue));
    j["cues"] = std::move(cues);
    return j;
}

GenerationTask task_from_json(const nlohmann::json& j) {
    GenerationTask t;
    t.persona_id = j.at("persona_id").get<std::string>();
    t.context_doc_id = j.at("context_doc_id").get<std::string>();
    if (j.contains("concept_id")) t.concept_id = j.at("concept_id").get<std::string>();
    for (const auto& c : j.at("cues")) t.cues.push_back(cue_from_json(c));
    t.genre = genre_from_string(j.at("genre").get<std::string>());
    if (!is_generation_genre(t.genre))
        fail("ConfigInvalid",
             "task genre must be a generation genre, got " + std::string(to_string(t.genre)));
    t.target_lang = j.at("target_lang").get<std::string>();
    t.target_script = script_from_string(j.at("target_script").get<std::string>());
    t.seed = j.at("seed").get<std::uint64_t>();
    return t;
}

void save_tasks(const std::string& path, const std::vector<GenerationTask>& tasks) {
    jsonl::Writer w(path);
    for (const auto& t : tasks) w.write(task_to_json(t));
}

std::vector<GenerationTask> load_tasks(const std::string& path) {
    std::vector<GenerationTask> out;
    jsonl::Reader r(path);
    while (auto j = r.next()) out.push_back(task_from_json(*j));
    return out;
}

void save_concepts(const std::string& path, const std::vector<CulturalConcept>& concepts) {
    jsonl::Writer w(path);
    for (const auto& c : concepts) w.write(concept_to_json(c));
}

std::vector<CulturalConcept> load_concepts(const std::string& path) {
    std::vector<CulturalConcept> out;
    jsonl::Reader r(path);
    while (auto j = r.next()) out.push_back(concept_from_json(*j));
    return out;
}

void save_cues(const std::string& path, const std::vector<LinguisticCue>& cues) {
    jsonl::Writer w(path);
    for (const auto& c : cues) w.write(cue_to_json(c));
}

std::vector<LinguisticCue> load_cues(const std::string& path) {
    std::vector<LinguisticCue> out;
    jsonl::Reader r(path);
    while (auto j = r.next()) out.push_back(cue_from_json(*j));
    return out;
}

std::vector<GenerationTask> plan_tasks(const std::vector<persona::PersonaProfile>& personas,
                                       const std::vector<Document>& contexts,
                                       const std::vector<CulturalConcept>& concepts,
                                       const std::vector<LinguisticCue>& cues,
                                       const std::map<Genre, std::size_t>& quotas,
                                       std::uint64_t seed, const PlanOptions& opts) {
    if (!(opts.concept_probability >= 0.0 && opts.concept_probability <= 1.0))
        fail("ConfigInvalid", "concept_probability must be in [0, 1]");
    if (!(opts.cue_probability >= 0.0 && opts.cue_probability <= 1.0))
        fail("ConfigInvalid", "cue_probability must be in [0, 1]");
    if (opts.cue_probability > 0.0 && opts.max_cues == 0)
        fail("ConfigInvalid", "max_cues must be >= 1 when cues can attach");

    std::size_t total = 0;
    for (const auto& [genre, count] : quotas) {
        if (!is_generation_genre(genre))
            fail("ConfigInvalid",
                 "quota names a non-generation genre: " + std::string(to_string(genre)));
        total += count;
    }
    if (total == 0) return {};

    if (personas.empty()) fail("EmptyPool", "personas");
    if (contexts.empty()) fail("EmptyPool", "contexts");
    if (concepts.empty() && opts.concept_probability > 0.0) fail("EmptyPool", "concepts");
    if (cues.empty() && opts.cue_probability > 0.0) fail("EmptyPool", "cues");

    Rng rng(seed);
    std::vector<GenerationTask> out;
    out.reserve(total);
    std::size_t index = 0;
    for (Genre genre : generation_genres()) {
        auto it = quotas.find(genre);
        if (it == quotas.end()) continue;
        for (std::size_t i = 0; i < it->second; ++i) {
            GenerationTask t;
            t.genre = genre;
            t.target_lang = opts.target_lang;
            t.target_script = Script::arabic;
            t.persona_id = personas[rng.bounded(personas.size())].id;
            t.context_doc_id = contexts[rng.bounded(contexts.size())].id;
            if (rng.bernoulli(opts.concept_probability))
                t.concept_id = concepts[rng.bounded(concepts.size())].id;
            if (rng.bernoulli(opts.cue_probability)) {
                std::size_t k = std::min<std::uint64_t>(1 + rng.bounded(opts.max_cues),
                                                        cues.size());
                for (std::size_t pick : rng.sample_without_replacement(cues.size(), k))
                    t.cues.push_back(cues[pick]);
            }
            t.seed = digest::derive_seed(seed, "synth-task-" + std::to_string(index++));
            out.push_back(std::move(t));
        }
    }
    return out;
}

gateway::PromptBundle build_generation_prompt(const GenerationTask& task,
                                              const persona::PersonaProfile& persona,
                                              const Document& context,
                                              const CulturalConcept* concept_ptr) {
    if (persona.id != task.persona_id)
        fail("DanglingReference",
             "task wants persona " + task.persona_id + ", got " + persona.id);
    if (context.id != task.context_doc_id)
        fail("DanglingReference",
             "task wants context " + task.context_doc_id + ", got " + context.id);
    if (task.concept_id) {
        if (!concept_ptr || concept_ptr->id != *task.concept_id)
            fail("DanglingReference", "task wants concept " + *task.concept_id + ", got " +
                                          (concept_ptr ? concept_ptr->id : "none"));
    } else if (concept_ptr) {
        fail("DanglingReference", "concept " + concept_ptr->id + " supplied for a task without one");
    }

    std::string ctx = context.text;
    if (concept_ptr)
        ctx += "\n\nCultural concept to feature: " + concept_ptr->name + " (" +
               concept_ptr->category + ", " + concept_ptr->country + ").";
    if (!task.cues.empty()) {
        ctx += "\n\nTry to naturally use these local expressions:";
        for (const auto& cue : task.cues)
            ctx += "\n- " + cue.text + " (" + std::string(to_string(cue.kind)) +
                   "; English: " + cue.english_gloss + ")";
    }

    return gateway::render_prompt(gateway::generation_template_id(task.target_lang),
                                  {{"persona_description", persona.refined_description},
                                   {"person_Name", persona::display_name(persona)},
                                   {"text_genre", genre_label(task.genre)},
                                   {"context", ctx}});
}

Document generate(gateway::Gateway& gw, const GenerationTask& task,
                  const persona::PersonaProfile& persona, const Document& context,
                  const CulturalConcept* concept_ptr,
                  const corpus::RepetitionThresholds& thresholds) {
    auto r = generate_outcome(gw, task, persona, context, concept_ptr, thresholds);
    if (!r.verdict.accepted)
        fail("RejectedByFilter", r.verdict.rule + ": " + r.verdict.detail);
    return std::move(*r.doc);
}

SynthStats generate_corpus(gateway::Gateway& gw,
                           const std::vector<GenerationTask>& tasks,
                           const std::vector<persona::PersonaProfile>& personas,
                           const std::vector<Document>& contexts,
                           const std::vector<CulturalConcept>& concepts,
                           std::vector<Document>& out, corpus::Quarantine& quarantine,
                           const corpus::RepetitionThresholds& thresholds) {
    std::unordered_map<std::string, const persona::PersonaProfile*> persona_by_id;
    for (const auto& p : personas) persona_by_id[p.id] = &p;
    std::unordered_map<std::string, const Document*> context_by_id;
    for (const auto& d : contexts) context_by_id[d.id] = &d;
    std::unordered_map<std::string, const CulturalConcept*> concept_by_id;
    for (const auto& c : concepts) concept_by_id[c.id] = &c;

    SynthStats stats;
    stats.planned = tasks.size();
    for (const auto& task : tasks) {
        auto p = persona_by_id.find(task.persona_id);
        if (p == persona_by_id.end())
            fail("DanglingReference", "persona " + task.persona_id + " not in pool");
        auto c = context_by_id.find(task.context_doc_id);
        if (c == context_by_id.end())
            fail("DanglingReference", "context " + task.context_doc_id + " not in pool");
        const CulturalConcept* concept_ptr = nullptr;
        if (task.concept_id) {
            auto k = concept_by_id.find(*task.concept_id);
            if (k == concept_by_id.end())
                fail("DanglingReference", "concept " + *task.concept_id + " not in pool");
            concept_ptr = k->second;
        }

        auto r = generate_outcome(gw, task, *p->second, *c->second, concept_ptr, thresholds);
        if (r.verdict.accepted) {
            out.push_back(std::move(*r.doc));
            ++stats.generated;
        } else {
            ++stats.rejected;
            quarantine.add(r.doc ? *r.doc : *c->second, r.verdict);
        }
    }
    return stats;
}

Document to_arabizi(gateway::Gateway& gw, const Document& doc) {
    if (doc.script != Script::arabic)
        fail("PreconditionViolation", "to_arabizi needs an Arabic-script document, got " +
                                          std::string(to_string(doc.script)));

    nlohmann::json wrapper{{"text", doc.text}};
    auto bundle = gateway::render_prompt(gateway::arabizi_template_id(doc.lang),
                                         {{"JSON_OBJECT", wrapper.dump()}});
    auto schema = [](const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("text") || !j.at("text").is_string())
            fail("SchemaViolation", "expected an object with a string \"text\" key");
        if (text::trim(j.at("text").get<std::string>()).empty())
            fail("SchemaViolation", "empty text");
    };

    std::string converted;
    for (int attempt = 0;; ++attempt) {
        auto reply = gw.complete_json(bundle, schema);
        converted = text::trim(reply.at("text").get<std::string>());
        double ratio = unicode::arabic_ratio(converted);
        if (ratio < kArabiziMaxArabicRatio) break;
        if (attempt >= 1) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", ratio);
            fail("ScriptUnchanged",
                 doc.id + ": Arabic-codepoint ratio " + buf + " after repair");
        }
        bundle.rendered_text +=
            "\n\nYour previous output still contained Arabic-script text; rewrite "
            "every word in Latin-letter Arabizi.";
    }

    return make_document(std::move(converted), doc.lang, Script::arabizi, doc.genre,
                         doc.source,
                         {{"parent_id", doc.id},
                          {"template_id", bundle.template_id},
                          {"teacher_model_id", gw.config().model_id}});
}

ArabiziStats convert_fraction(gateway::Gateway& gw, const std::vector<Document>& docs,
                              double fraction, std::uint64_t seed,
                              std::vector<Document>& out,
                              corpus::Quarantine& quarantine) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        fail("ConfigInvalid", "arabizi fraction must be in [0, 1]");

    ArabiziStats stats;
    auto want = static_cast<std::size_t>(
        std::llround(fraction * static_cast<double>(docs.size())));
    if (want == 0) return stats;

    auto picks = Rng(seed).sample_without_replacement(docs.size(), want);
    std::sort(picks.begin(), picks.end()); // emit in corpus order, not draw order
    for (std::size_t i : picks) {
        ++stats.selected;
        try {
            out.push_back(to_arabizi(gw, docs[i]));
            ++stats.converted;
        } catch (const Error& e) {
            if (e.code() != "ScriptUnchanged") throw;
            ++stats.unchanged;
            quarantine.add(docs[i], {false, "script-unchanged", e.what()});
        }
    }
    return stats;
}

} // namespace forge::synth
