#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "forge/core/document.hpp"
#include "forge/core/errors.hpp"

namespace forge::jsonl {

// One JSON object per line, UTF-8. Readers tolerate a trailing newline.
class Reader {
public:
    explicit Reader(const std::string& path) : path_(path), in_(path) {
        if (!in_) fail("UnresolvedPath", "cannot open " + path);
    }

    std::optional<nlohmann::json> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (line.empty()) continue;
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded())
                fail("MalformedJsonl", path_ + ":" + std::to_string(line_no_));
            return j;
        }
        return std::nullopt;
    }

private:
    std::string path_;
    std::ifstream in_;
    std::size_t line_no_ = 0;
};

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::trunc) {
        if (!out_) fail("UnresolvedPath", "cannot open " + path + " for writing");
    }

    void write(const nlohmann::json& j) { out_ << j.dump() << '\n'; }
    void flush() { out_.flush(); }

private:
    std::ofstream out_;
};

std::vector<Document> read_documents(const std::string& path);
void write_documents(const std::string& path, const std::vector<Document>& docs);

// Applies fn to every document in the file, streaming.
void for_each_document(const std::string& path, const std::function<void(Document&&)>& fn);

// Expands a path or glob ('*' and '?' in the filename component only) to an
// ordered list of files.
std::vector<std::string> expand_glob(const std::string& pattern);

} // namespace forge::jsonl
