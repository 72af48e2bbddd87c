#include <doctest/doctest.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "forge/core/errors.hpp"
#include "forge/core/text.hpp"
#include "forge/gateway/mock_backend.hpp"
#include "forge/persona/profile.hpp"
#include "forge/persona/survey.hpp"

using namespace forge;
using namespace forge::persona;
namespace fs = std::filesystem;

namespace {

const QuestionRegistry& default_registry() {
    static const QuestionRegistry reg =
        QuestionRegistry::from_file(FORGE_CONFIG_DIR "/wvs_questions.json");
    return reg;
}

std::vector<SurveyRecord> fixture_records() {
    return load_survey(std::string(FORGE_FIXTURE_DIR) + "/persona/survey5000.csv",
                       default_registry());
}

nlohmann::json load_json(const std::string& rel) {
    std::ifstream in(std::string(FORGE_FIXTURE_DIR) + "/persona/" + rel);
    REQUIRE(in);
    return nlohmann::json::parse(in);
}

QuestionRegistry tiny_registry() {
    return QuestionRegistry::from_json(nlohmann::json{
        {"version", 1},
        {"questions",
         {{{"id", "Q1"},
           {"group", "moral_values"},
           {"dimension", "SVNS"},
           {"statements", {{"1", "Family is very important in their life."}}}},
          {{"id", "Q260"},
           {"group", "demographics"},
           {"statements", {{"1", "This person is a man."}}}},
          {{"id", "Q279"},
           {"group", "socioeconomic"},
           {"statements", {{"1", "They work full time."}}}}}}});
}

} // namespace

TEST_CASE("default registry is versioned and covers all 13 value dimensions") {
    const auto& reg = default_registry();
    CHECK(reg.version() == 1);
    CHECK(reg.questions().size() >= 20);

    auto want = wvs_dimensions();
    REQUIRE(want.size() == 13);
    std::sort(want.begin(), want.end());
    CHECK(reg.dimensions() == want);

    for (auto g : attribute_groups()) {
        auto n = std::count_if(reg.questions().begin(), reg.questions().end(),
                               [&](const Question& q) { return q.group == g; });
        CHECK(n >= 1);
    }
    REQUIRE(reg.find("Q260") != nullptr);
    CHECK(reg.find("Q260")->statements.at(2) == "This person is a woman.");
    CHECK(reg.find("nope") == nullptr);
    // Dimensions tag only the value questions.
    for (const auto& q : reg.questions())
        CHECK((q.group == AttributeGroup::moral_values) == !q.dimension.empty());
}

TEST_CASE("registry config errors are named") {
    auto base = nlohmann::json{
        {"version", 1},
        {"questions",
         {{{"id", "Q1"}, {"group", "moral_values"}, {"statements", {{"1", "s"}}}}}}};

    auto no_version = base;
    no_version.erase("version");
    CHECK_THROWS_WITH_AS(QuestionRegistry::from_json(no_version),
                         doctest::Contains("ConfigInvalid"), Error);

    auto bad_group = base;
    bad_group["questions"][0]["group"] = "vibes";
    CHECK_THROWS_WITH_AS(QuestionRegistry::from_json(bad_group),
                         doctest::Contains("ConfigInvalid"), Error);

    auto negative_code = base;
    negative_code["questions"][0]["statements"] = {{"-1", "s"}};
    CHECK_THROWS_WITH_AS(QuestionRegistry::from_json(negative_code),
                         doctest::Contains("ConfigInvalid"), Error);

    auto dup = base;
    dup["questions"].push_back(base["questions"][0]);
    CHECK_THROWS_WITH_AS(QuestionRegistry::from_json(dup),
                         doctest::Contains("ConfigInvalid"), Error);
}

TEST_CASE("survey CSV loads with weights, blanks, and non-answers intact") {
    auto records = fixture_records();
    REQUIRE(records.size() == 5000);

    std::set<std::string> ids;
    for (const auto& r : records) {
        ids.insert(r.respondent_id);
        CHECK((r.country == "Egypt" || r.country == "Morocco"));
        REQUIRE(r.weight.has_value());
    }
    CHECK(ids.size() == 5000);

    const auto& first = records[0];
    CHECK(first.respondent_id == "R00001");
    CHECK(first.country == "Morocco");
    CHECK(*first.weight == doctest::Approx(1.6773));
    CHECK(first.answers.at("Q260") == 2);
    CHECK(first.answers.count("Q121") == 0); // blank cell = not asked
}

TEST_CASE("TSV variant parses identically to the CSV head") {
    auto csv = fixture_records();
    auto tsv = load_survey(std::string(FORGE_FIXTURE_DIR) + "/persona/survey20.tsv",
                           default_registry());
    REQUIRE(tsv.size() == 20);
    for (std::size_t i = 0; i < tsv.size(); ++i) {
        CHECK(tsv[i].respondent_id == csv[i].respondent_id);
        CHECK(tsv[i].country == csv[i].country);
        CHECK(tsv[i].answers == csv[i].answers);
        CHECK(*tsv[i].weight == doctest::Approx(*csv[i].weight));
    }
}

TEST_CASE("survey files with structural problems are rejected by name") {
    auto dir = fs::temp_directory_path() / "forge_survey_test";
    fs::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& body) {
        std::ofstream out(dir / name);
        out << body;
        return (dir / name).string();
    };

    auto unknown = write("unknown.csv", "respondent_id,country,weight,QX\nR1,Egypt,1.0,1\n");
    CHECK_THROWS_WITH_AS(load_survey(unknown, default_registry()),
                         doctest::Contains("UnknownQuestion"), Error);

    auto bad_code = write("code.csv", "respondent_id,country,weight,Q260\nR1,Egypt,1.0,9\n");
    CHECK_THROWS_WITH_AS(load_survey(bad_code, default_registry()),
                         doctest::Contains("UnknownAnswerCode"), Error);

    auto ragged = write("ragged.csv", "respondent_id,country,weight,Q260\nR1,Egypt,1.0\n");
    CHECK_THROWS_WITH_AS(load_survey(ragged, default_registry()),
                         doctest::Contains("MalformedSurvey"), Error);

    auto text_code =
        write("text.csv", "respondent_id,country,weight,Q260\nR1,Egypt,1.0,maybe\n");
    CHECK_THROWS_WITH_AS(load_survey(text_code, default_registry()),
                         doctest::Contains("MalformedSurvey"), Error);

    auto bad_header = write("header.csv", "who,where\nR1,Egypt\n");
    CHECK_THROWS_WITH_AS(load_survey(bad_header, default_registry()),
                         doctest::Contains("MalformedSurvey"), Error);
    fs::remove_all(dir);
}

TEST_CASE("single-template record textualizes to exactly that statement") {
    auto reg = tiny_registry();
    SurveyRecord rec;
    rec.respondent_id = "R1";
    rec.country = "Egypt";
    rec.answers = {{"Q1", 1}};
    CHECK(textualize(rec, reg) == "Family is very important in their life.");
    CHECK(textualize(rec, reg) == textualize(rec, reg));
}

TEST_CASE("non-answers are skipped, never templated") {
    auto reg = default_registry();
    SurveyRecord rec;
    rec.respondent_id = "R1";
    rec.country = "Egypt";
    rec.answers = {{"Q260", 1}, {"Q279", 7}, {"Q1", 1}, {"Q164", -1}};
    auto groups = collect_statements(rec, reg);
    CHECK(groups.at("demographics").size() == 1);
    CHECK(groups.at("socioeconomic").size() == 1);
    CHECK(groups.at("moral_values").size() == 1);
    CHECK(textualize(rec, reg).find("God") == std::string::npos);
}

TEST_CASE("answer codes without a statement are named errors") {
    auto reg = default_registry();
    SurveyRecord rec;
    rec.respondent_id = "R1";
    rec.country = "Egypt";
    rec.answers = {{"Q260", 9}};
    CHECK_THROWS_WITH_AS(collect_statements(rec, reg),
                         doctest::Contains("UnknownAnswerCode"), Error);

    auto empty_templates = QuestionRegistry::from_json(nlohmann::json{
        {"version", 1},
        {"questions",
         {{{"id", "Q9"}, {"group", "demographics"},
           {"statements", nlohmann::json::object()}}}}});
    SurveyRecord rec2;
    rec2.respondent_id = "R2";
    rec2.country = "Egypt";
    rec2.answers = {{"Q9", 1}};
    CHECK_THROWS_WITH_AS(collect_statements(rec2, empty_templates),
                         doctest::Contains("MissingTemplate"), Error);
}

TEST_CASE("textualization matches the independently generated transcripts") {
    auto records = fixture_records();
    const auto& reg = default_registry();

    auto texts = load_json("expected_texts.json");
    REQUIRE(texts.size() == 3);
    for (std::size_t i = 0; i < texts.size(); ++i) {
        const auto& t = texts[i];
        CHECK(records[i].respondent_id == t.at("respondent_id").get<std::string>());
        CHECK(textualize(records[i], reg) == t.at("long_description").get<std::string>());
        auto want = t.at("attributes")
                        .get<std::map<std::string, std::vector<std::string>>>();
        CHECK(collect_statements(records[i], reg) == want);
    }
}

TEST_CASE("every answered selected question yields exactly one statement") {
    auto records = fixture_records();
    const auto& reg = default_registry();
    auto counts = load_json("expected_counts.json");
    REQUIRE(counts.size() == 5000);

    for (const auto& rec : records) {
        auto groups = collect_statements(rec, reg);
        std::size_t n = 0;
        for (const auto& [g, statements] : groups) n += statements.size();
        CHECK(n == counts.at(rec.respondent_id).get<std::size_t>());

        auto text = textualize(rec, reg);
        for (const auto& [g, statements] : groups)
            for (const auto& s : statements)
                CHECK(text.find(s) != std::string::npos);
    }
}

TEST_CASE("refine returns the mock teacher's 30-word summary") {
    auto gw = gateway::make_mock_gateway();
    auto records = fixture_records();
    auto long_desc = textualize(records[0], default_registry());
    auto refined = refine(*gw, long_desc);
    CHECK(!refined.empty());
    CHECK(text::count_words(refined) == 30);
    CHECK(text::count_words(refined) < text::count_words(long_desc));
}

TEST_CASE("identity summaries are rejected after one retry") {
    auto backend = std::make_shared<gateway::MockBackend>();
    std::atomic<int> calls{0};
    backend->set_handler("persona.refine", [&](const gateway::PromptBundle& b) {
        ++calls;
        return gateway::CompletionResult{b.slots.at("PERSONA_DESCRIPTION"), false};
    });
    gateway::Gateway gw(backend, {});
    CHECK_THROWS_WITH_AS(refine(gw, "a handful of words to summarize"),
                         doctest::Contains("DegenerateSummary"), Error);
    CHECK(calls == 2);
}

TEST_CASE("an empty first reply is retried once and can succeed") {
    auto backend = std::make_shared<gateway::MockBackend>();
    std::atomic<int> calls{0};
    backend->set_handler("persona.refine", [&](const gateway::PromptBundle& b) {
        ++calls;
        if (b.rendered_text.find("previous summary") == std::string::npos)
            return gateway::CompletionResult{"", false};
        return gateway::CompletionResult{"a compact persona sketch", false};
    });
    gateway::Gateway gw(backend, {});
    CHECK(refine(gw, "one two three four five six seven eight") ==
          "a compact persona sketch");
    CHECK(calls == 2);
}

TEST_CASE("recorded teacher summaries all pass the refine contract") {
    std::ifstream in(std::string(FORGE_FIXTURE_DIR) + "/persona/refine_transcript.jsonl");
    REQUIRE(in);
    std::map<std::string, std::string> recorded;
    std::string line;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        recorded[j.at("long").get<std::string>()] = j.at("refined").get<std::string>();
    }
    REQUIRE(recorded.size() == 10);

    auto backend = std::make_shared<gateway::MockBackend>();
    backend->set_handler("persona.refine", [&](const gateway::PromptBundle& b) {
        return gateway::CompletionResult{recorded.at(b.slots.at("PERSONA_DESCRIPTION")),
                                         false};
    });
    gateway::Gateway gw(backend, {});
    for (const auto& [long_desc, refined] : recorded) {
        auto got = refine(gw, long_desc);
        CHECK(got == refined);
        CHECK(!got.empty());
        CHECK(text::count_words(got) < text::count_words(long_desc));
    }
}

TEST_CASE("build_persona_set draws 1200 distinct respondents of one country") {
    auto records = fixture_records();
    auto gw = gateway::make_mock_gateway();
    auto personas =
        build_persona_set(records, default_registry(), *gw, "Egypt", 1200, 515093);

    REQUIRE(personas.size() == 1200);
    std::set<std::string> respondents;
    for (const auto& p : personas) {
        respondents.insert(p.respondent_id);
        CHECK(p.country == "Egypt");
        CHECK_NOTHROW(validate_profile(p));
        CHECK(display_name(p) == "Persona " + p.id.substr(0, 8));
        // No raw survey coordinates leak into the description.
        for (const auto& q : default_registry().questions())
            CHECK(p.long_description.find(q.id) == std::string::npos);
    }
    CHECK(respondents.size() == 1200);
}

TEST_CASE("persona sets are seed-deterministic") {
    auto records = fixture_records();
    const auto& reg = default_registry();
    auto gw1 = gateway::make_mock_gateway();
    auto gw2 = gateway::make_mock_gateway();
    auto a = build_persona_set(records, reg, *gw1, "Morocco", 50, 7);
    auto b = build_persona_set(records, reg, *gw2, "Morocco", 50, 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

    auto gw3 = gateway::make_mock_gateway();
    auto c = build_persona_set(records, reg, *gw3, "Morocco", 50, 8);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].respondent_id != c[i].respondent_id) differs = true;
    CHECK(differs);
}

TEST_CASE("exhaustive sample covers every respondent exactly once") {
    auto tsv = load_survey(std::string(FORGE_FIXTURE_DIR) + "/persona/survey20.tsv",
                           default_registry());
    std::size_t egy =
        std::count_if(tsv.begin(), tsv.end(),
                      [](const SurveyRecord& r) { return r.country == "Egypt"; });
    REQUIRE(egy > 0);

    auto gw = gateway::make_mock_gateway();
    auto personas = build_persona_set(tsv, default_registry(), *gw, "Egypt", egy, 3);
    REQUIRE(personas.size() == egy);
    std::set<std::string> seen;
    for (const auto& p : personas) seen.insert(p.respondent_id);
    CHECK(seen.size() == egy);

    CHECK_THROWS_WITH_AS(
        build_persona_set(tsv, default_registry(), *gw, "Egypt", egy + 1, 3),
        doctest::Contains("InsufficientRecords"), Error);
}

TEST_CASE("personas round-trip through JSONL") {
    auto tsv = load_survey(std::string(FORGE_FIXTURE_DIR) + "/persona/survey20.tsv",
                           default_registry());
    auto gw = gateway::make_mock_gateway();
    auto personas = build_persona_set(tsv, default_registry(), *gw, "Morocco", 5, 99);

    auto dir = fs::temp_directory_path() / "forge_persona_roundtrip";
    fs::create_directories(dir);
    auto path = (dir / "personas.jsonl").string();
    save_personas(path, personas);
    auto loaded = load_personas(path);
    REQUIRE(loaded.size() == personas.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) CHECK(loaded[i] == personas[i]);
    fs::remove_all(dir);
}
