#include "forge/core/jsonl.hpp"

#include <algorithm>

namespace forge::jsonl {

namespace fs = std::filesystem;

std::vector<Document> read_documents(const std::string& path) {
    std::vector<Document> docs;
    for_each_document(path, [&](Document&& d) { docs.push_back(std::move(d)); });
    return docs;
}

void write_documents(const std::string& path, const std::vector<Document>& docs) {
    Writer w(path);
    for (const auto& d : docs) w.write(document_to_json(d));
}

void for_each_document(const std::string& path, const std::function<void(Document&&)>& fn) {
    Reader r(path);
    while (auto j = r.next()) fn(document_from_json(*j));
}

namespace {

bool glob_match(std::string_view pattern, std::string_view name) {
    std::size_t p = 0, n = 0, star_p = std::string_view::npos, star_n = 0;
    while (n < name.size()) {
        if (p < pattern.size() && (pattern[p] == name[n] || pattern[p] == '?')) {
            ++p;
            ++n;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star_p = p++;
            star_n = n;
        } else if (star_p != std::string_view::npos) {
            p = star_p + 1;
            n = ++star_n;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

} // namespace

std::vector<std::string> expand_glob(const std::string& pattern) {
    fs::path pat(pattern);
    std::string fname = pat.filename().string();
    if (fname.find('*') == std::string::npos && fname.find('?') == std::string::npos) {
        if (!fs::exists(pat)) fail("UnresolvedPath", pattern + " does not exist");
        return {pattern};
    }
    fs::path dir = pat.parent_path();
    if (dir.empty()) dir = ".";
    if (!fs::is_directory(dir)) fail("UnresolvedPath", dir.string() + " is not a directory");
    std::vector<std::string> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (glob_match(fname, entry.path().filename().string()))
            out.push_back(entry.path().string());
    }
    std::sort(out.begin(), out.end());
    if (out.empty()) fail("UnresolvedPath", "glob " + pattern + " matched nothing");
    return out;
}

} // namespace jsonl
