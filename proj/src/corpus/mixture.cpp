#include "forge/corpus/mixture.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

#include <nlohmann/json.hpp>

#include "forge/core/digest.hpp"
#include "forge/core/errors.hpp"
#include "forge/core/jsonl.hpp"
#include "forge/core/rng.hpp"
#include "forge/core/text.hpp"

namespace fs = std::filesystem;

namespace forge::corpus {

namespace {

std::string resolve(const std::string& path, const std::string& base_dir) {
    if (base_dir.empty() || fs::path(path).is_absolute()) return path;
    return (fs::path(base_dir) / path).string();
}

std::vector<Document> load_entry_docs(const MixtureManifest::Entry& e,
                                      const std::string& base_dir) {
    auto files = jsonl::expand_glob(resolve(e.path, base_dir));
    if (files.empty())
        fail("UnresolvedPath", "entry '" + e.label + "': no files match " + e.path);
    std::vector<Document> docs;
    for (const auto& f : files)
        for (auto& d : jsonl::read_documents(f)) docs.push_back(std::move(d));
    if (docs.empty())
        fail("InsufficientSource", "entry '" + e.label + "' resolved to zero documents");
    return docs;
}

// Draws documents by seeded shuffle until the target is hit exactly; the
// last draw is word-truncated when it would overshoot.
std::vector<Document> draw_entry(const MixtureManifest::Entry& e,
                                 std::vector<Document> pool, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<Document> out;
    std::uint64_t emitted = 0;
    std::size_t idx = 0;
    while (emitted < e.target_words) {
        if (idx == order.size()) {
            if (!e.allow_repeat)
                fail("InsufficientSource",
                     "entry '" + e.label + "': source exhausted at " +
                         std::to_string(emitted) + "/" + std::to_string(e.target_words) +
                         " words (allow_repeat not set)");
            rng.shuffle(order);  // new epoch, fresh order
            idx = 0;
        }
        const Document& d = pool[order[idx++]];
        std::uint64_t remaining = e.target_words - emitted;
        if (d.word_count <= remaining) {
            Document copy = d;
            copy.provenance["mixture_label"] = e.label;
            emitted += copy.word_count;
            out.push_back(std::move(copy));
        } else {
            auto prov = d.provenance;
            prov["mixture_label"] = e.label;
            prov["parent_id"] = d.id;
            Document cut =
                make_document(text::truncate_words(d.text, remaining), d.lang, d.script,
                              d.genre, d.source, std::move(prov));
            emitted += cut.word_count;
            out.push_back(std::move(cut));
        }
    }
    return out;
}

} // namespace

MixtureReport compose_mixture(const MixtureManifest& manifest, const std::string& out_dir,
                              const std::string& base_dir) {
    manifest.validate();
    fs::create_directories(out_dir);

    MixtureReport report;
    std::vector<Document> all;
    for (const auto& e : manifest.entries) {
        auto pool = load_entry_docs(e, base_dir);
        std::size_t source_docs = pool.size();
        auto drawn =
            draw_entry(e, std::move(pool), digest::derive_seed(manifest.seed, e.label));

        MixtureEntryReport er;
        er.label = e.label;
        er.target_words = e.target_words;
        er.source_docs = source_docs;
        er.emitted_docs = drawn.size();
        for (const auto& d : drawn) er.emitted_words += d.word_count;
        er.ratio = static_cast<double>(er.emitted_words) /
                   static_cast<double>(er.target_words);
        report.total_words += er.emitted_words;
        report.entries.push_back(std::move(er));
        for (auto& d : drawn) all.push_back(std::move(d));
    }

    // Interleave entries before sharding so every shard mixes sources.
    Rng shard_rng(digest::derive_seed(manifest.seed, "shard-order"));
    shard_rng.shuffle(all);

    std::size_t shard_no = 0;
    std::uint64_t shard_sum = 0;
    std::unique_ptr<jsonl::Writer> writer;
    auto open_shard = [&] {
        char name[32];
        std::snprintf(name, sizeof(name), "shard-%05zu.jsonl", shard_no);
        writer = std::make_unique<jsonl::Writer>((fs::path(out_dir) / name).string());
    };
    for (const auto& d : all) {
        if (!writer || (shard_sum > 0 && shard_sum + d.word_count > manifest.words_per_shard)) {
            if (writer) {
                report.shard_words.push_back(shard_sum);
                ++shard_no;
                shard_sum = 0;
            }
            open_shard();
        }
        writer->write(document_to_json(d));
        shard_sum += d.word_count;
    }
    if (writer) report.shard_words.push_back(shard_sum);

    std::ofstream jr(fs::path(out_dir) / "report.json");
    jr << mixture_report_to_json(report).dump(2) << '\n';
    std::ofstream cr(fs::path(out_dir) / "report.csv");
    cr << mixture_report_to_csv(report);
    return report;
}

nlohmann::json mixture_report_to_json(const MixtureReport& r) {
    auto entries = nlohmann::json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"label", e.label},
                           {"target_words", e.target_words},
                           {"emitted_words", e.emitted_words},
                           {"emitted_docs", e.emitted_docs},
                           {"source_docs", e.source_docs},
                           {"ratio", e.ratio}});
    return {{"entries", entries},
            {"total_words", r.total_words},
            {"shard_words", r.shard_words}};
}

std::string mixture_report_to_csv(const MixtureReport& r) {
    std::string out = "label,target_words,emitted_words,emitted_docs,source_docs,ratio\n";
    char line[256];
    for (const auto& e : r.entries) {
        std::snprintf(line, sizeof(line), "%s,%llu,%llu,%zu,%zu,%.6f\n", e.label.c_str(),
                      static_cast<unsigned long long>(e.target_words),
                      static_cast<unsigned long long>(e.emitted_words), e.emitted_docs,
                      e.source_docs, e.ratio);
        out += line;
    }
    std::snprintf(line, sizeof(line), "TOTAL,,%llu,,,\n",
                  static_cast<unsigned long long>(r.total_words));
    out += line;
    return out;
}

} // namespace forge::corpus
