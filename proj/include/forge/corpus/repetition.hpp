#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "forge/core/document.hpp"

namespace forge::corpus {

// Degenerate-generation detector: translations and generations that loop
// show up as repeated n-grams long before a human would need to read them.
struct RepetitionThresholds {
    int max_ngram_repeats = 4;            // reject when a word 5-gram occurs this often
    double dup_trigram_char_fraction = 0.30;  // of characters inside duplicated 3-grams
    double dup_line_fraction = 0.30;          // of lines that repeat an earlier line
};

struct FilterVerdict {
    bool accepted = true;
    std::string rule;    // "word-5gram", "dup-3gram-chars", "dup-lines"
    std::string detail;  // the offending n-gram or line
};

// Pure; rules are checked in the order above and the first hit names the
// verdict. Word n-grams run over the whitespace token stream of the whole
// text (lines included); character fractions count codepoints of words
// covered by a duplicated 3-gram; line duplicates compare trimmed nonempty
// lines.
FilterVerdict repetition_verdict(std::string_view text,
                                 const RepetitionThresholds& t = {});

// Audit sink for rejected documents: one JSONL row per document with the
// machine-readable reason attached.
class Quarantine {
public:
    explicit Quarantine(const std::string& path);  // "" discards silently
    ~Quarantine();
    Quarantine(Quarantine&&) noexcept;
    Quarantine& operator=(Quarantine&&) noexcept;

    void add(const Document& doc, const FilterVerdict& verdict);
    std::size_t count() const { return count_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::size_t count_ = 0;
};

struct FilterStats {
    std::size_t seen = 0;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

// Splits a corpus into accepted documents and quarantined rejects.
FilterStats filter_documents(const std::vector<Document>& docs,
                             std::vector<Document>& accepted, Quarantine& quarantine,
                             const RepetitionThresholds& t = {});

} // namespace forge::corpus
