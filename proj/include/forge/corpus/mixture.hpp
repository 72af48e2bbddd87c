#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "forge/core/manifest.hpp"

namespace forge::corpus {

struct MixtureEntryReport {
    std::string label;
    std::uint64_t target_words = 0;
    std::uint64_t emitted_words = 0;
    std::size_t emitted_docs = 0;
    std::size_t source_docs = 0;
    double ratio = 0.0;  // emitted / target
};

struct MixtureReport {
    std::vector<MixtureEntryReport> entries;
    std::uint64_t total_words = 0;
    std::vector<std::uint64_t> shard_words;  // per shard, in file order
};

// Draws each entry's documents by seeded shuffle without replacement,
// repeating the source across epochs only when allow_repeat is set. The
// final draw is truncated at a word boundary so emitted lands exactly on
// target (truncated documents get a fresh id and parent_id provenance).
// Every emitted document carries provenance["mixture_label"]. All entries
// are then interleaved by a second seeded shuffle and written to
// out_dir/shard-NNNNN.jsonl at words_per_shard granularity, with the
// accounting report saved as report.json and report.csv alongside.
// Relative entry paths resolve against base_dir ("" = cwd).
// Errors: UnresolvedPath, InsufficientSource(label).
MixtureReport compose_mixture(const MixtureManifest& manifest, const std::string& out_dir,
                              const std::string& base_dir = "");

nlohmann::json mixture_report_to_json(const MixtureReport& r);
std::string mixture_report_to_csv(const MixtureReport& r);

} // namespace forge::corpus
