#include <doctest/doctest.h>

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "forge/core/errors.hpp"
#include "forge/corpus/dialectness.hpp"

using namespace forge;
using namespace forge::corpus;

namespace {

struct ScriptedScorer : DialectnessScorer {
    std::vector<double> scores;
    std::size_t i = 0;
    double score(const std::string&) override { return scores[i++ % scores.size()]; }
    std::string name() const override { return "scripted"; }
};

struct FailingScorer : DialectnessScorer {
    // Fails on texts containing the marker, succeeds otherwise.
    double score(const std::string& text) override {
        if (text.find("bad") != std::string::npos)
            fail("ScorerUnavailable", "scripted failure");
        return 0.5;
    }
    std::string name() const override { return "failing"; }
};

Document doc(const std::string& text) {
    return make_document(text, "egy", Script::latin, Genre::web, Source::native);
}

} // namespace

TEST_CASE("score_dialectness records per-doc scores and the corpus mean") {
    ScriptedScorer scorer;
    scorer.scores = {0.2, 0.4, 0.9};
    std::vector<Document> docs{doc("one"), doc("two"), doc("three")};
    auto s = score_dialectness(docs, scorer);
    CHECK(s.scored == 3);
    CHECK(s.missing == 0);
    CHECK(s.mean == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(docs[0].provenance.at("dialectness") == "0.2000");
    CHECK(docs[2].provenance.at("dialectness") == "0.9000");
}

TEST_CASE("constant scorer gives mean equal to the constant") {
    ScriptedScorer scorer;
    scorer.scores = {1.0};
    std::vector<Document> docs{doc("a"), doc("b")};
    CHECK(score_dialectness(docs, scorer).mean == 1.0);
}

TEST_CASE("empty corpus is rejected") {
    ScriptedScorer scorer;
    scorer.scores = {1.0};
    std::vector<Document> none;
    CHECK_THROWS_WITH_AS(score_dialectness(none, scorer), doctest::Contains("EmptyCorpus"),
                         Error);
}

TEST_CASE("per-doc scorer failures become missing markers, not fabricated scores") {
    FailingScorer scorer;
    std::vector<Document> docs{doc("fine text"), doc("bad text"), doc("more fine")};
    auto s = score_dialectness(docs, scorer);
    CHECK(s.scored == 2);
    CHECK(s.missing == 1);
    CHECK(s.mean == doctest::Approx(0.5));
    CHECK(docs[1].provenance.at("dialectness") == "missing");
}

TEST_CASE("scorer failing on every document raises ScorerUnavailable") {
    FailingScorer scorer;
    std::vector<Document> docs{doc("bad one"), doc("bad two")};
    CHECK_THROWS_WITH_AS(score_dialectness(docs, scorer),
                         doctest::Contains("ScorerUnavailable"), Error);
}

TEST_CASE("mock scorer tracks the Arabic-codepoint fraction") {
    MockDialectnessScorer scorer;
    CHECK(scorer.score("مرحبا بالعالم") == 1.0);
    CHECK(scorer.score("hello world") == 0.0);
    auto mixed = scorer.score("hi مرحبا");
    CHECK(mixed > 0.0);
    CHECK(mixed < 1.0);
}

TEST_CASE("out-of-range scorer outputs are clamped into [0,1]") {
    ScriptedScorer scorer;
    scorer.scores = {1.7, -0.3};
    std::vector<Document> docs{doc("a"), doc("b")};
    auto s = score_dialectness(docs, scorer);
    CHECK(docs[0].provenance.at("dialectness") == "1.0000");
    CHECK(docs[1].provenance.at("dialectness") == "0.0000");
    CHECK(s.mean == doctest::Approx(0.5));
}

TEST_CASE("http scorer speaks the POST /score wire format") {
    httplib::Server server;
    std::atomic<int> requests{0};
    server.Post("/aldi/score", [&](const httplib::Request& req, httplib::Response& res) {
        ++requests;
        auto j = nlohmann::json::parse(req.body);
        // Score encodes the text length so the test can see the round trip.
        double score = j.at("text").get<std::string>().size() >= 10 ? 0.9 : 0.1;
        res.set_content(nlohmann::json{{"score", score}}.dump(), "application/json");
    });
    int port = server.bind_to_any_port("127.0.0.1");
    std::thread t([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    HttpDialectnessScorer scorer("http://127.0.0.1:" + std::to_string(port) + "/aldi");
    CHECK(scorer.score("a brief note of many chars") == 0.9);
    CHECK(scorer.score("short") == 0.1);
    CHECK(requests == 2);

    server.stop();
    t.join();
}

TEST_CASE("unreachable scorer endpoint surfaces ScorerUnavailable") {
    HttpDialectnessScorer scorer("http://127.0.0.1:9", 1);  // discard port, refused
    CHECK_THROWS_WITH_AS(scorer.score("text"), doctest::Contains("ScorerUnavailable"),
                         Error);
}

TEST_CASE("malformed scorer responses surface ScorerUnavailable") {
    httplib::Server server;
    server.Post("/score", [](const httplib::Request&, httplib::Response& res) {
        res.set_content("not json", "text/plain");
    });
    int port = server.bind_to_any_port("127.0.0.1");
    std::thread t([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    HttpDialectnessScorer scorer("http://127.0.0.1:" + std::to_string(port));
    CHECK_THROWS_WITH_AS(scorer.score("text"), doctest::Contains("ScorerUnavailable"),
                         Error);
    server.stop();
    t.join();
}
