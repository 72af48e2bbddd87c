#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace forge::eval {

// chrF++: character n-grams (order 6, whitespace removed) plus word n-grams
// (order 2), F-beta with beta = 2, averaged over orders. Orders empty on
// both sides are skipped. Multi-reference picks the best reference per
// segment; the corpus score pools statistics before the F computation.
// Identical texts score exactly 100, an empty hypothesis against a nonempty
// reference scores 0. Errors: EmptyReference.
double chrf_pp(const std::string& hyp, const std::vector<std::string>& refs);
double chrf_pp_corpus(const std::vector<std::string>& hyps,
                      const std::vector<std::vector<std::string>>& refs);

// Greedy longest-match subword segmenter over a plain vocabulary file (one
// subword per line). Vocabularies whose pieces use the U+2581 word-boundary
// marker (SentencePiece convention) are detected and words get the marker
// prepended before matching. Words not covered by the vocabulary fall back
// to per-codepoint pieces. With no vocabulary it degrades to whitespace
// tokens.
class SubwordTokenizer {
public:
    static SubwordTokenizer whitespace();
    static SubwordTokenizer from_file(const std::string& path);  // TokenizerLoadError

    std::vector<std::string> tokenize(std::string_view text) const;

    // Identifies the tokenizer in report fingerprints.
    const std::string& id() const { return id_; }

private:
    std::vector<std::string> vocab_;  // sorted, longest-match via per-word scan
    std::string id_;
    bool word_marker_ = false;
};

// Corpus BLEU over 1..4-gram precisions of the tokenized text, numerator
// floor 0.01 on zero matches, brevity penalty against the closest reference
// length (ties broken toward the shorter). Identical corpora score exactly
// 100; disjoint ones land in (0,1). Errors: EmptyReference.
double spbleu(const std::string& hyp, const std::vector<std::string>& refs,
              const SubwordTokenizer& tok = SubwordTokenizer::whitespace());
double spbleu_corpus(const std::vector<std::string>& hyps,
                     const std::vector<std::vector<std::string>>& refs,
                     const SubwordTokenizer& tok = SubwordTokenizer::whitespace());

} // namespace forge::eval
