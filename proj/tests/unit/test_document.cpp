#include <doctest/doctest.h>

#include <nlohmann/json.hpp>

#include "forge/core/document.hpp"
#include "forge/core/errors.hpp"

using namespace forge;

TEST_CASE("enum round trips") {
    for (auto s : {Script::arabic, Script::arabizi, Script::latin})
        CHECK(script_from_string(to_string(s)) == s);
    for (auto g : {Genre::educational, Genre::story, Genre::personal_essay,
                   Genre::blog_post, Genre::review, Genre::conversation, Genre::news,
                   Genre::wiki, Genre::web, Genre::other})
        CHECK(genre_from_string(to_string(g)) == g);
    for (auto s : {Source::mt, Source::synthetic, Source::retrieved, Source::native})
        CHECK(source_from_string(to_string(s)) == s);

    CHECK_THROWS_WITH_AS(script_from_string("klingon"),
                         doctest::Contains("InvalidEnum"), Error);
    CHECK_THROWS_WITH_AS(genre_from_string(""), doctest::Contains("InvalidEnum"), Error);
}

TEST_CASE("generation genres are the five controlled-output kinds") {
    auto g = generation_genres();
    REQUIRE(g.size() == 5);
    CHECK(g == std::vector<Genre>{Genre::story, Genre::personal_essay, Genre::blog_post,
                                  Genre::review, Genre::conversation});
}

TEST_CASE("heritage categories") {
    auto& cats = heritage_categories();
    CHECK(cats.size() == 10);
    for (auto name : {"food", "clothes", "landmarks", "festivals_celebrations",
                      "geography", "handicrafts", "architecture", "fauna", "flora",
                      "music"}) {
        CAPTURE(name);
        CHECK(std::find(cats.begin(), cats.end(), name) != cats.end());
    }
}

TEST_CASE("canonical_id is stable and NFC-insensitive") {
    // Frozen from the Python reference over the same field framing.
    CHECK(canonical_id("hello world", "en", Script::latin, Source::native) ==
          "b24f4cba67df109dda69b6954c37962793b97ab57144c72ede6b114b0d003edc");

    // NFD and NFC spellings of the same text get the same id.
    CHECK(canonical_id("cafe\xcc\x81", "fr", Script::latin, Source::native) ==
          canonical_id("caf\xc3\xa9", "fr", Script::latin, Source::native));

    // Any field change changes the id.
    auto base = canonical_id("x", "egy", Script::arabic, Source::mt);
    CHECK(base != canonical_id("x", "mor", Script::arabic, Source::mt));
    CHECK(base != canonical_id("x", "egy", Script::arabizi, Source::mt));
    CHECK(base != canonical_id("x", "egy", Script::arabic, Source::synthetic));

    CHECK_THROWS_WITH_AS(canonical_id("", "egy", Script::arabic, Source::mt),
                         doctest::Contains("EmptyDocument"), Error);
}

TEST_CASE("make_document fills derived fields and validates") {
    auto d = make_document("one two three", "egy", Script::arabic, Genre::story,
                           Source::synthetic,
                           {{"template_id", "gen.story"}, {"teacher_model_id", "mock"}});
    CHECK(d.word_count == 3);
    CHECK(d.id == canonical_id("one two three", "egy", Script::arabic, Source::synthetic));
    validate_document(d);  // must not throw

    SUBCASE("mt and synthetic sources require generation provenance") {
        CHECK_THROWS_WITH_AS(
            make_document("x", "egy", Script::arabic, Genre::story, Source::synthetic),
            doctest::Contains("InvalidDocument"), Error);
        CHECK_THROWS_WITH_AS(
            make_document("x", "egy", Script::arabic, Genre::educational, Source::mt,
                          {{"template_id", "t"}}),
            doctest::Contains("InvalidDocument"), Error);
        // Native documents carry no such requirement.
        auto n = make_document("x", "egy", Script::arabic, Genre::web, Source::native);
        validate_document(n);
    }

    SUBCASE("validate_document catches tampering") {
        auto bad = d;
        bad.word_count = 99;
        CHECK_THROWS_WITH_AS(validate_document(bad), doctest::Contains("InvalidDocument"),
                             Error);
        bad = d;
        bad.text += " oops";
        CHECK_THROWS_WITH_AS(validate_document(bad), doctest::Contains("InvalidDocument"),
                             Error);
    }
}

TEST_CASE("document json round trip preserves every field") {
    auto d = make_document("sample text here", "mor", Script::latin, Genre::review,
                           Source::mt,
                           {{"template_id", "mt.translate"},
                            {"teacher_model_id", "mock"},
                            {"origin_id", "abc"}});
    auto j = document_to_json(d);
    auto back = document_from_json(j);
    CHECK(back == d);

    // Field order in the serialized object is fixed for byte-stable outputs.
    std::string s = j.dump();
    CHECK(s.find("\"id\"") < s.find("\"lang\""));
    CHECK(s.find("\"lang\"") < s.find("\"script\""));
    CHECK(s.find("\"text\"") < s.find("\"word_count\""));
}

TEST_CASE("cue and concept json round trips") {
    LinguisticCue cue{LinguisticCue::Kind::proverb, "\xd8\xa7\xd9\x84\xd9\x82\xd8\xb1\xd8\xaf",
                      "the monkey"};
    auto j = cue_to_json(cue);
    CHECK(cue_from_json(j) == cue);
    CHECK(cue_kind_from_string("idiom") == LinguisticCue::Kind::idiom);
    CHECK_THROWS_AS(cue_kind_from_string("limerick"), Error);

    CulturalConcept c{"egy/food/0001", "Egypt", "food", "koshari"};
    CHECK(concept_from_json(concept_to_json(c)) == c);

    auto bad = concept_to_json(c);
    bad["category"] = "spaceships";
    CHECK_THROWS_AS(concept_from_json(bad), Error);
}
