#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "forge/core/document.hpp"

namespace forge::corpus {

// Wire interface to a dialectness classifier: text in, [0,1] score out.
// Kept as a service boundary so the toolkit stays model-free.
class DialectnessScorer {
public:
    virtual ~DialectnessScorer() = default;
    virtual double score(const std::string& text) = 0;  // throws ScorerUnavailable
    virtual std::string name() const = 0;
};

// Offline stand-in: the Arabic-codepoint fraction of the text. Fully dialect
// MT output scores 1.0, untouched Latin input 0.0.
class MockDialectnessScorer : public DialectnessScorer {
public:
    double score(const std::string& text) override;
    std::string name() const override { return "mock-arabic-ratio"; }
};

// POSTs <endpoint>/score with {"text": ...} and expects {"score": f}.
class HttpDialectnessScorer : public DialectnessScorer {
public:
    explicit HttpDialectnessScorer(std::string endpoint, int timeout_s = 30);

    double score(const std::string& text) override;
    std::string name() const override { return "http:" + host_; }

private:
    std::string host_;
    std::string path_prefix_;
    int timeout_s_;
};

struct DialectnessSummary {
    std::size_t scored = 0;
    std::size_t missing = 0;  // docs whose scorer call failed
    double mean = 0.0;        // over scored docs
};

// Writes each score into provenance["dialectness"] ("missing" when the
// scorer failed for that document) and reports the corpus mean.
// Errors: EmptyCorpus; ScorerUnavailable when no document could be scored.
DialectnessSummary score_dialectness(std::vector<Document>& docs,
                                     DialectnessScorer& scorer);

} // namespace forge::corpus
