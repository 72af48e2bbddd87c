#include "forge/corpus/repetition.hpp"

#include <map>

#include <nlohmann/json.hpp>

#include "forge/core/jsonl.hpp"
#include "forge/core/text.hpp"
#include "forge/core/unicode.hpp"

namespace forge::corpus {

namespace {

// n-gram keys join words with a separator no word can contain.
std::string gram_key(const std::vector<std::string>& words, std::size_t i, int n) {
    std::string key = words[i];
    for (int k = 1; k < n; ++k) {
        key.push_back('\x1f');
        key += words[i + k];
    }
    return key;
}

std::string gram_pretty(const std::vector<std::string>& words, std::size_t i, int n) {
    std::string out = words[i];
    for (int k = 1; k < n; ++k) {
        out.push_back(' ');
        out += words[i + k];
    }
    return out;
}

} // namespace

FilterVerdict repetition_verdict(std::string_view text, const RepetitionThresholds& t) {
    auto words = text::split_words(text);

    // Rule 1: some word 5-gram occurs >= max_ngram_repeats times.
    if (words.size() >= 5) {
        std::map<std::string, int> counts;
        for (std::size_t i = 0; i + 5 <= words.size(); ++i) ++counts[gram_key(words, i, 5)];
        for (std::size_t i = 0; i + 5 <= words.size(); ++i)
            if (counts[gram_key(words, i, 5)] >= t.max_ngram_repeats)
                return {false, "word-5gram", gram_pretty(words, i, 5)};
    }

    // Rule 2: too many characters sit inside duplicated word 3-grams.
    if (words.size() >= 3) {
        std::map<std::string, int> counts;
        for (std::size_t i = 0; i + 3 <= words.size(); ++i) ++counts[gram_key(words, i, 3)];
        std::vector<bool> marked(words.size(), false);
        for (std::size_t i = 0; i + 3 <= words.size(); ++i)
            if (counts[gram_key(words, i, 3)] >= 2)
                marked[i] = marked[i + 1] = marked[i + 2] = true;
        std::size_t total = 0, dup = 0;
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::size_t len = unicode::count_codepoints(words[i]);
            total += len;
            if (marked[i]) dup += len;
        }
        if (total > 0 &&
            static_cast<double>(dup) / static_cast<double>(total) >
                t.dup_trigram_char_fraction) {
            // Most frequent duplicated 3-gram, first seen wins ties.
            std::size_t best_i = 0;
            int best_n = 0;
            for (std::size_t i = 0; i + 3 <= words.size(); ++i) {
                int n = counts[gram_key(words, i, 3)];
                if (n >= 2 && n > best_n) {
                    best_n = n;
                    best_i = i;
                }
            }
            return {false, "dup-3gram-chars", gram_pretty(words, best_i, 3)};
        }
    }

    // Rule 3: too many duplicate lines.
    std::vector<std::string> lines;
    for (auto& raw : text::split_lines(text)) {
        std::string trimmed = text::trim(raw);
        if (!trimmed.empty()) lines.push_back(std::move(trimmed));
    }
    if (!lines.empty()) {
        std::map<std::string, int> counts;
        for (const auto& ln : lines) ++counts[ln];
        std::size_t dups = 0;
        for (const auto& [ln, n] : counts) dups += static_cast<std::size_t>(n - 1);
        if (static_cast<double>(dups) / static_cast<double>(lines.size()) >
            t.dup_line_fraction) {
            std::size_t best_i = 0;
            int best_n = 0;
            for (std::size_t i = 0; i < lines.size(); ++i)
                if (counts[lines[i]] > best_n) {
                    best_n = counts[lines[i]];
                    best_i = i;
                }
            return {false, "dup-lines", lines[best_i]};
        }
    }

    return {};
}

struct Quarantine::Impl {
    jsonl::Writer writer;
    explicit Impl(const std::string& path) : writer(path) {}
};

Quarantine::Quarantine(const std::string& path)
    : impl_(path.empty() ? nullptr : std::make_unique<Impl>(path)) {}
Quarantine::~Quarantine() = default;
Quarantine::Quarantine(Quarantine&&) noexcept = default;
Quarantine& Quarantine::operator=(Quarantine&&) noexcept = default;

void Quarantine::add(const Document& doc, const FilterVerdict& verdict) {
    ++count_;
    if (!impl_) return;
    nlohmann::json row = document_to_json(doc);
    row["rejection"] = {{"rule", verdict.rule}, {"detail", verdict.detail}};
    impl_->writer.write(row);
    impl_->writer.flush(); // rejects are diagnostics; keep them durable as they land

}

FilterStats filter_documents(const std::vector<Document>& docs,
                             std::vector<Document>& accepted, Quarantine& quarantine,
                             const RepetitionThresholds& t) {
    FilterStats stats;
    for (const auto& doc : docs) {
        ++stats.seen;
        FilterVerdict v = repetition_verdict(doc.text, t);
        if (v.accepted) {
            ++stats.accepted;
            accepted.push_back(doc);
        } else {
            ++stats.rejected;
            quarantine.add(doc, v);
        }
    }
    return stats;
}

} // namespace forge::corpus
