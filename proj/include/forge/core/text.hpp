#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace forge::text {

// Number of maximal runs of non-whitespace codepoints after NFC
// normalization. Empty text counts 0.
std::size_t count_words(std::string_view utf8);

// Whitespace-delimited tokens of the NFC-normalized text, in order.
std::vector<std::string> split_words(std::string_view utf8);

// Words of `utf8` truncated to the first `max_words` tokens, single-space
// joined. Used when a mixture draw must land exactly on a word target.
std::string truncate_words(std::string_view utf8, std::size_t max_words);

std::string trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

// Splits on '\n'; does not include the separators.
std::vector<std::string> split_lines(std::string_view s);

} // namespace forge::text
