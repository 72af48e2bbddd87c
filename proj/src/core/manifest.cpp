#include "forge/core/manifest.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "forge/core/errors.hpp"

namespace forge {

using nlohmann::json;

void MixtureManifest::validate() const {
    std::set<std::string> labels;
    for (const auto& e : entries) {
        if (e.target_words == 0)
            fail("InvalidManifest", "entry '" + e.label + "' has target_words 0");
        if (e.label.empty()) fail("InvalidManifest", "entry with empty label");
        if (e.path.empty()) fail("InvalidManifest", "entry '" + e.label + "' has no path");
        if (!labels.insert(e.label).second)
            fail("InvalidManifest", "duplicate label '" + e.label + "'");
    }
    if (words_per_shard == 0) fail("InvalidManifest", "words_per_shard must be positive");
}

std::string_view nature_to_string(MixtureManifest::Nature n) {
    return n == MixtureManifest::Nature::real ? "real" : "synthetic";
}

MixtureManifest::Nature nature_from_string(std::string_view s) {
    if (s == "real") return MixtureManifest::Nature::real;
    if (s == "synthetic") return MixtureManifest::Nature::synthetic;
    fail("InvalidManifest", "unknown nature '" + std::string(s) + "'");
}

MixtureManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("UnresolvedPath", "cannot open manifest " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) fail("InvalidManifest", "manifest is not valid JSON: " + path);

    MixtureManifest m;
    m.seed = j.value("seed", std::uint64_t{0});
    m.words_per_shard = j.value("words_per_shard", std::uint64_t{1'000'000});
    for (const auto& je : j.at("entries")) {
        MixtureManifest::Entry e;
        e.label = je.at("label").get<std::string>();
        e.lang = je.value("lang", std::string{});
        e.nature = nature_from_string(je.value("nature", std::string{"real"}));
        e.target_words = je.at("target_words").get<std::uint64_t>();
        e.path = je.at("path").get<std::string>();
        e.allow_repeat = je.value("allow_repeat", false);
        m.entries.push_back(std::move(e));
    }
    m.validate();
    return m;
}

void save_manifest(const MixtureManifest& m, const std::string& path) {
    json entries = json::array();
    for (const auto& e : m.entries) {
        entries.push_back(json{{"label", e.label},
                               {"lang", e.lang},
                               {"nature", nature_to_string(e.nature)},
                               {"target_words", e.target_words},
                               {"path", e.path},
                               {"allow_repeat", e.allow_repeat}});
    }
    json j{{"seed", m.seed}, {"words_per_shard", m.words_per_shard}, {"entries", entries}};
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail("UnresolvedPath", "cannot write manifest " + path);
    out << j.dump(2) << '\n';
}

} // namespace forge
