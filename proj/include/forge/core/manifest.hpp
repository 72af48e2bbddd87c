#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace forge {

// Declarative word-count targets per (label, lang, nature) used to compose
// the final corpus mixture.
struct MixtureManifest {
    enum class Nature { real, synthetic };

    struct Entry {
        std::string label;
        std::string lang;
        Nature nature = Nature::real;
        std::uint64_t target_words = 0;
        std::string path; // file path or glob
        bool allow_repeat = false;
    };

    std::vector<Entry> entries;
    std::uint64_t seed = 0;
    std::uint64_t words_per_shard = 1'000'000;

    void validate() const;
};

std::string_view nature_to_string(MixtureManifest::Nature n);
MixtureManifest::Nature nature_from_string(std::string_view s);

MixtureManifest load_manifest(const std::string& path);
void save_manifest(const MixtureManifest& m, const std::string& path);

} // namespace forge
