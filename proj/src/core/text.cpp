#include "forge/core/text.hpp"

#include <cctype>

#include "forge/core/unicode.hpp"

namespace forge::text {

std::size_t count_words(std::string_view utf8) {
    std::string norm = unicode::nfc(utf8);
    std::size_t words = 0;
    bool in_word = false;
    for (std::size_t i = 0; i < norm.size();) {
        char32_t cp = unicode::decode_utf8(norm, i);
        bool ws = unicode::is_whitespace(cp);
        if (!ws && !in_word) ++words;
        in_word = !ws;
    }
    return words;
}

std::vector<std::string> split_words(std::string_view utf8) {
    std::string norm = unicode::nfc(utf8);
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 0; i < norm.size();) {
        std::size_t start = i;
        char32_t cp = unicode::decode_utf8(norm, i);
        if (unicode::is_whitespace(cp)) {
            if (!cur.empty()) {
                out.push_back(std::move(cur));
                cur.clear();
            }
        } else {
            cur.append(norm, start, i - start);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string truncate_words(std::string_view utf8, std::size_t max_words) {
    auto words = split_words(utf8);
    if (words.size() > max_words) words.resize(max_words);
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out.push_back(' ');
        out += words[i];
    }
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> split_lines(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '\n') {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    if (!out.empty() && out.back().empty() && !s.empty() && s.back() == '\n') out.pop_back();
    if (s.empty()) out.clear();
    return out;
}

} // namespace forge::text
