#include <doctest/doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "forge/core/errors.hpp"
#include "forge/core/rng.hpp"
#include "forge/corpus/dedup.hpp"
#include "forge/corpus/repetition.hpp"

using namespace forge;
using namespace forge::corpus;
namespace fs = std::filesystem;

namespace {

struct FixtureDoc {
    std::string id;
    std::string text;
};

std::vector<FixtureDoc> load_fixture(const std::string& name) {
    std::ifstream in(std::string(FORGE_FIXTURE_DIR) + "/repetition/" + name);
    REQUIRE(in.good());
    std::vector<FixtureDoc> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        out.push_back({j["id"].get<std::string>(), j["text"].get<std::string>()});
    }
    return out;
}

// Oracle rule letters map to the implementation's rule names.
const std::map<std::string, std::string> kRuleNames{
    {"a", "word-5gram"}, {"b", "dup-3gram-chars"}, {"c", "dup-lines"}};

} // namespace

TEST_CASE("repetition_verdict accepts plain text") {
    CHECK(repetition_verdict("a b c d e f g").accepted);
    CHECK(repetition_verdict("").accepted);
    CHECK(repetition_verdict("one").accepted);
    CHECK(repetition_verdict("line one\nline two\nline three").accepted);
}

TEST_CASE("repetition_verdict rejects a planted 5-gram loop") {
    std::string text;
    for (int i = 0; i < 10; ++i) text += "x y z w v ";
    auto v = repetition_verdict(text);
    CHECK(!v.accepted);
    CHECK(v.rule == "word-5gram");
    CHECK(v.detail == "x y z w v");
}

TEST_CASE("500-doc fixture: rejected set equals the brute-force oracle exactly") {
    auto docs = load_fixture("docs.jsonl");
    REQUIRE(docs.size() == 500);
    std::ifstream in(std::string(FORGE_FIXTURE_DIR) + "/repetition/expected.json");
    REQUIRE(in.good());
    auto expected = nlohmann::json::parse(in);
    REQUIRE(expected.size() == 20);

    std::size_t rejected = 0;
    for (const auto& d : docs) {
        auto v = repetition_verdict(d.text);
        INFO("doc ", d.id);
        if (expected.contains(d.id)) {
            ++rejected;
            CHECK(!v.accepted);
            CHECK(v.rule == kRuleNames.at(expected[d.id]["rule"].get<std::string>()));
            CHECK(v.detail == expected[d.id]["detail"].get<std::string>());
        } else {
            CHECK(v.accepted);
        }
    }
    CHECK(rejected == 20);
}

TEST_CASE("clean 10k corpus: rejection rate stays at the frozen oracle value") {
    auto docs = load_fixture("clean10k.jsonl");
    REQUIRE(docs.size() == 10000);
    std::ifstream in(std::string(FORGE_FIXTURE_DIR) + "/repetition/clean10k.json");
    auto frozen = nlohmann::json::parse(in);

    std::size_t rejected = 0;
    for (const auto& d : docs)
        if (!repetition_verdict(d.text).accepted) ++rejected;
    CHECK(rejected == frozen["oracle_rejected"].get<std::size_t>());
    CHECK(static_cast<double>(rejected) / static_cast<double>(docs.size()) <= 0.05);
}

TEST_CASE("rejection is monotone under stricter thresholds") {
    RepetitionThresholds strict;
    strict.max_ngram_repeats = 3;
    strict.dup_trigram_char_fraction = 0.20;
    strict.dup_line_fraction = 0.20;
    for (const auto& d : load_fixture("docs.jsonl")) {
        if (!repetition_verdict(d.text).accepted) {
            INFO("doc ", d.id);
            CHECK(!repetition_verdict(d.text, strict).accepted);
        }
    }
}

TEST_CASE("filter_documents splits a corpus and quarantines rejects with reasons") {
    auto dir = fs::temp_directory_path() / "forge_filter_test";
    fs::create_directories(dir);
    auto qpath = (dir / "quarantine.jsonl").string();

    std::string looping;
    for (int i = 0; i < 12; ++i) looping += "one two three four five ";
    std::vector<Document> docs{
        make_document("an ordinary sentence about rivers and markets", "en",
                      Script::latin, Genre::web, Source::native),
        make_document(looping, "en", Script::latin, Genre::web, Source::native),
    };
    std::vector<Document> accepted;
    Quarantine q(qpath);
    auto stats = filter_documents(docs, accepted, q);
    CHECK(stats.seen == 2);
    CHECK(stats.accepted == 1);
    CHECK(stats.rejected == 1);
    CHECK(accepted.size() == 1);
    CHECK(q.count() == 1);

    std::ifstream in(qpath);
    std::string line;
    REQUIRE(std::getline(in, line));
    auto row = nlohmann::json::parse(line);
    CHECK(row["id"] == docs[1].id);
    CHECK(row["rejection"]["rule"] == "word-5gram");
    CHECK(row["rejection"]["detail"] == "one two three four five");
    fs::remove_all(dir);
}

TEST_CASE("dedup keeps first occurrences and logs later duplicates") {
    auto dir = fs::temp_directory_path() / "forge_dedup_test";
    fs::create_directories(dir);
    auto log_path = (dir / "drops.jsonl").string();

    auto a = make_document("first text", "en", Script::latin, Genre::web, Source::native);
    auto b = make_document("second text", "en", Script::latin, Genre::web, Source::native);
    std::vector<Document> stream{a, b, a};
    std::vector<Document> kept;
    auto stats = dedup_exact(stream, kept, log_path);
    CHECK(stats.kept == 2);
    CHECK(stats.dropped == 1);
    CHECK(kept.size() == 2);
    CHECK(kept[0].id == a.id);
    CHECK(kept[1].id == b.id);

    std::ifstream in(log_path);
    std::string line;
    REQUIRE(std::getline(in, line));
    auto row = nlohmann::json::parse(line);
    CHECK(row["id"] == a.id);
    CHECK(row["position"] == 2);
    fs::remove_all(dir);
}

TEST_CASE("dedup leaves an all-unique stream untouched and is idempotent") {
    std::vector<Document> docs;
    for (int i = 0; i < 50; ++i)
        docs.push_back(make_document("unique text number " + std::to_string(i), "en",
                                     Script::latin, Genre::web, Source::native));
    std::vector<Document> once;
    auto s1 = dedup_exact(docs, once);
    CHECK(s1.dropped == 0);
    CHECK(once == docs);

    std::vector<Document> twice;
    auto s2 = dedup_exact(once, twice);
    CHECK(s2.dropped == 0);
    CHECK(twice == once);
}

TEST_CASE("same text in a different language is not a duplicate") {
    auto en = make_document("shared words", "en", Script::latin, Genre::web, Source::native);
    auto fr = make_document("shared words", "fr", Script::latin, Genre::web, Source::native);
    std::vector<Document> kept;
    auto stats = dedup_exact({en, fr}, kept);
    CHECK(stats.dropped == 0);
    CHECK(kept.size() == 2);
}

TEST_CASE("10k-doc stream with 1,234 planted duplicates drops exactly those") {
    Rng rng(86021);
    std::vector<Document> unique;
    for (int i = 0; i < 8766; ++i) {
        std::string text = "document " + std::to_string(i) + " body";
        for (int w = 0; w < 3; ++w) text += " w" + std::to_string(rng.bounded(1000));
        unique.push_back(
            make_document(text, "en", Script::latin, Genre::web, Source::native));
    }
    std::vector<Document> stream = unique;
    for (int i = 0; i < 1234; ++i)
        stream.push_back(unique[rng.bounded(unique.size())]);
    rng.shuffle(stream);

    // Independent set-based oracle over the constructed stream.
    std::set<std::string> distinct;
    for (const auto& d : stream) distinct.insert(d.id);
    REQUIRE(distinct.size() == 8766);

    std::vector<Document> kept;
    auto stats = dedup_exact(stream, kept);
    CHECK(stats.kept == 8766);
    CHECK(stats.dropped == 1234);
    CHECK(kept.size() + stats.dropped == stream.size());
}

TEST_CASE("SeenIds is a linearized first-occurrence gate") {
    SeenIds seen;
    CHECK(seen.insert("x"));
    CHECK(!seen.insert("x"));
    CHECK(seen.insert("y"));
    CHECK(seen.size() == 2);
}
