#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "forge/core/document.hpp"
#include "forge/corpus/repetition.hpp"
#include "forge/gateway/gateway.hpp"
#include "forge/persona/profile.hpp"

namespace forge::synth {

// One planned generation: which persona writes which genre grounded in which
// local context, optionally featuring a cultural concept and seasoned with
// linguistic cues. Cues are carried by value (they have no ids of their own).
struct GenerationTask {
    std::string persona_id;
    std::string context_doc_id;
    std::optional<std::string> concept_id;
    std::vector<LinguisticCue> cues;
    Genre genre = Genre::story;
    std::string target_lang; // egy / mor
    Script target_script = Script::arabic;
    std::uint64_t seed = 0; // distinct per task; keys provenance joins and any
                            // backend that accepts a sampling seed

    bool operator==(const GenerationTask&) const = default;
};

nlohmann::json task_to_json(const GenerationTask& t);
GenerationTask task_from_json(const nlohmann::json& j);
void save_tasks(const std::string& path, const std::vector<GenerationTask>& tasks);
std::vector<GenerationTask> load_tasks(const std::string& path);

// Pool files for the CLI: one JSON object per line.
void save_concepts(const std::string& path, const std::vector<CulturalConcept>& concepts);
std::vector<CulturalConcept> load_concepts(const std::string& path);
void save_cues(const std::string& path, const std::vector<LinguisticCue>& cues);
std::vector<LinguisticCue> load_cues(const std::string& path);

struct PlanOptions {
    double concept_probability = 0.5; // chance a task features a concept
    double cue_probability = 0.7;     // chance a task carries cues at all
    std::size_t max_cues = 3;         // 1..max_cues drawn when it does
    std::string target_lang = "egy";
};

// Seeded sampling with replacement across the pools, genre by genre, with
// exact quota counts. Pools a task might draw from must be nonempty
// (EmptyPool names the offender); quotas must name generation genres only.
// Every task receives a distinct seed derived from `seed`.
std::vector<GenerationTask> plan_tasks(const std::vector<persona::PersonaProfile>& personas,
                                       const std::vector<Document>& contexts,
                                       const std::vector<CulturalConcept>& concepts,
                                       const std::vector<LinguisticCue>& cues,
                                       const std::map<Genre, std::size_t>& quotas,
                                       std::uint64_t seed, const PlanOptions& opts = {});

// Renders the generation template for one resolved task: persona description
// and stand-in name, genre, and a context slot carrying the context text plus
// concept/cue hints (cues with their English glosses). `concept` is null for
// tasks without one. DanglingReference when the entities do not match the
// ids on the task.
gateway::PromptBundle build_generation_prompt(const GenerationTask& task,
                                              const persona::PersonaProfile& persona,
                                              const Document& context,
                                              const CulturalConcept* concept_ptr);

// Generates one synthetic document (source=synthetic, genre/script/lang from
// the task, provenance joining back to persona/context/concept and the task
// seed). Empty teacher output or a repetition-filter hit -> RejectedByFilter.
Document generate(gateway::Gateway& gw, const GenerationTask& task,
                  const persona::PersonaProfile& persona, const Document& context,
                  const CulturalConcept* concept_ptr,
                  const corpus::RepetitionThresholds& thresholds = {});

struct SynthStats {
    std::size_t planned = 0;
    std::size_t generated = 0;
    std::size_t rejected = 0;
};

// Resolves every task against the pools (DanglingReference on unknown ids),
// generates in task order, and quarantines filter rejects: the offending
// output for repetition hits, the context document for empty replies.
SynthStats generate_corpus(gateway::Gateway& gw,
                           const std::vector<GenerationTask>& tasks,
                           const std::vector<persona::PersonaProfile>& personas,
                           const std::vector<Document>& contexts,
                           const std::vector<CulturalConcept>& concepts,
                           std::vector<Document>& out, corpus::Quarantine& quarantine,
                           const corpus::RepetitionThresholds& thresholds = {});

// A document counts as converted only below this share of Arabic-block
// codepoints among its non-whitespace codepoints.
inline constexpr double kArabiziMaxArabicRatio = 0.05;

// Rewrites one Arabic-script document in Arabizi via the teacher. The reply
// must drop below kArabiziMaxArabicRatio; one corrective re-prompt is allowed
// before ScriptUnchanged. PreconditionViolation unless doc.script == arabic.
// The result keeps lang/genre/source and records parent_id.
Document to_arabizi(gateway::Gateway& gw, const Document& doc);

struct ArabiziStats {
    std::size_t selected = 0;
    std::size_t converted = 0;
    std::size_t unchanged = 0; // teacher kept Arabic script; quarantined
};

// Seeded uniform sample of round(fraction * docs.size()) documents converted
// to Arabizi; conversions that keep Arabic script land in `quarantine` under
// rule "script-unchanged" (the original document is quarantined).
ArabiziStats convert_fraction(gateway::Gateway& gw, const std::vector<Document>& docs,
                              double fraction, std::uint64_t seed,
                              std::vector<Document>& out,
                              corpus::Quarantine& quarantine);

} // namespace forge::synth
