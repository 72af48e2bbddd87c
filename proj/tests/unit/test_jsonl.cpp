#include <doctest/doctest.h>

#include <filesystem>
#include <fstream>

#include "forge/core/document.hpp"
#include "forge/core/errors.hpp"
#include "forge/core/jsonl.hpp"
#include "forge/core/manifest.hpp"

using namespace forge;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("forge_jsonl_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("documents round trip through jsonl files") {
    TempDir tmp;
    auto p = (tmp.path / "docs.jsonl").string();

    std::vector<Document> docs;
    docs.push_back(make_document("first doc text", "egy", Script::arabic, Genre::web,
                                 Source::native));
    docs.push_back(make_document("second one", "egy", Script::arabizi, Genre::story,
                                 Source::synthetic,
                                 {{"template_id", "t"}, {"teacher_model_id", "m"}}));
    jsonl::write_documents(p, docs);

    auto back = jsonl::read_documents(p);
    CHECK(back == docs);

    std::size_t n = 0;
    jsonl::for_each_document(p, [&](Document&& d) {
        CHECK(d == docs[n]);
        ++n;
    });
    CHECK(n == 2);
}

TEST_CASE("reader skips blank lines and flags malformed ones") {
    TempDir tmp;
    auto p = (tmp.path / "mixed.jsonl").string();
    {
        std::ofstream out(p);
        out << "{\"a\":1}\n\n{\"b\":2}\n";
    }
    jsonl::Reader r(p);
    CHECK(r.next().value()["a"] == 1);
    CHECK(r.next().value()["b"] == 2);
    CHECK_FALSE(r.next().has_value());

    auto bad = (tmp.path / "bad.jsonl").string();
    {
        std::ofstream out(bad);
        out << "{\"a\":1}\nnot json\n";
    }
    jsonl::Reader rb(bad);
    rb.next();
    CHECK_THROWS_WITH_AS(rb.next(), doctest::Contains("MalformedJsonl"), Error);
    // The error names the offending line.
    try {
        jsonl::Reader rc(bad);
        rc.next();
        rc.next();
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }

    CHECK_THROWS_WITH_AS(jsonl::Reader((tmp.path / "absent.jsonl").string()),
                         doctest::Contains("UnresolvedPath"), Error);
}

TEST_CASE("expand_glob matches filename patterns in sorted order") {
    TempDir tmp;
    for (auto name : {"shard_002.jsonl", "shard_000.jsonl", "shard_010.jsonl", "other.txt"})
        std::ofstream((tmp.path / name).string()) << "{}\n";

    auto hits = jsonl::expand_glob((tmp.path / "shard_*.jsonl").string());
    REQUIRE(hits.size() == 3);
    CHECK(hits[0] < hits[1]);
    CHECK(hits[1] < hits[2]);
    CHECK(hits[0].find("shard_000") != std::string::npos);

    auto one = jsonl::expand_glob((tmp.path / "other.txt").string());
    CHECK(one.size() == 1);

    CHECK(jsonl::expand_glob((tmp.path / "shard_00?.jsonl").string()).size() == 2);

    CHECK_THROWS_WITH_AS(jsonl::expand_glob((tmp.path / "nope_*.jsonl").string()),
                         doctest::Contains("UnresolvedPath"), Error);
}

TEST_CASE("manifest round trips and validates") {
    TempDir tmp;
    MixtureManifest m;
    m.seed = 11;
    m.words_per_shard = 500;
    m.entries.push_back({"wiki", "egy", MixtureManifest::Nature::real, 1000,
                         "data/wiki.jsonl", false});
    m.entries.push_back({"mt_edu", "egy", MixtureManifest::Nature::synthetic, 2000,
                         "data/mt_*.jsonl", true});
    m.validate();

    auto p = (tmp.path / "mix.json").string();
    save_manifest(m, p);
    auto back = load_manifest(p);
    CHECK(back.seed == m.seed);
    CHECK(back.words_per_shard == m.words_per_shard);
    REQUIRE(back.entries.size() == 2);
    CHECK(back.entries[1].label == "mt_edu");
    CHECK(back.entries[1].nature == MixtureManifest::Nature::synthetic);
    CHECK(back.entries[1].allow_repeat);

    SUBCASE("duplicate labels rejected") {
        auto dup = m;
        dup.entries.push_back(dup.entries[0]);
        CHECK_THROWS_WITH_AS(dup.validate(), doctest::Contains("InvalidManifest"), Error);
    }
    SUBCASE("zero target rejected") {
        auto z = m;
        z.entries[0].target_words = 0;
        CHECK_THROWS_WITH_AS(z.validate(), doctest::Contains("InvalidManifest"), Error);
    }
}
