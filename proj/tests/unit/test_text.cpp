#include <doctest/doctest.h>

#include <fstream>

#include <nlohmann/json.hpp>

#include "forge/core/text.hpp"

using namespace forge;

TEST_CASE("count_words matches frozen whitespace-split fixtures") {
    std::ifstream in(FORGE_FIXTURE_DIR "/unicode/wordcount_cases.jsonl");
    REQUIRE(in.good());
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        CAPTURE(j["text"].get<std::string>());
        CHECK(text::count_words(j["text"].get<std::string>()) ==
              j["expected_words"].get<std::size_t>());
        ++n;
    }
    CHECK(n == 50);
}

TEST_CASE("count_words basics") {
    CHECK(text::count_words("") == 0);
    CHECK(text::count_words("   \t\n ") == 0);
    CHECK(text::count_words("one") == 1);
    CHECK(text::count_words("one two  three") == 3);
    CHECK(text::count_words(" leading and trailing ") == 3);
    // Arabic text with mixed separators.
    CHECK(text::count_words("\xd9\x85\xd8\xb1\xd8\xad\xd8\xa8\xd8\xa7 \xd8\xa8\xd9\x83") == 2);
    // NBSP separates words too (Unicode White_Space).
    CHECK(text::count_words("a\xc2\xa0where") == 2);
}

TEST_CASE("split_words returns NFC tokens in order") {
    auto w = text::split_words("  alpha beta\tgamma\n");
    CHECK(w == std::vector<std::string>{"alpha", "beta", "gamma"});
    // NFC applied: decomposed é comes back composed.
    auto w2 = text::split_words("cafe\xcc\x81 bar");
    CHECK(w2[0] == "caf\xc3\xa9");
}

TEST_CASE("truncate_words keeps the first max_words tokens") {
    CHECK(text::truncate_words("a b c d e", 3) == "a b c");
    CHECK(text::truncate_words("a b", 5) == "a b");
    CHECK(text::truncate_words("  a   b  ", 2) == "a b");
    CHECK(text::truncate_words("a b c", 0) == "");
    CHECK(text::truncate_words("", 3) == "");
}

TEST_CASE("trim and to_lower_ascii") {
    CHECK(text::trim("  x  ") == "x");
    CHECK(text::trim("\t\n") == "");
    CHECK(text::trim("") == "");
    CHECK(text::to_lower_ascii("AbC-9") == "abc-9");
    // Non-ASCII bytes pass through untouched.
    CHECK(text::to_lower_ascii("\xc3\x89") == "\xc3\x89");
}

TEST_CASE("split_lines") {
    CHECK(text::split_lines("a\nb\nc") == std::vector<std::string>{"a", "b", "c"});
    CHECK(text::split_lines("a\n\nb") == std::vector<std::string>{"a", "", "b"});
    // A trailing newline terminates the last line rather than opening an
    // empty one, and empty input has no lines.
    CHECK(text::split_lines("") == std::vector<std::string>{});
    CHECK(text::split_lines("a\n") == std::vector<std::string>{"a"});
}
