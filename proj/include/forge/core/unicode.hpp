#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace forge::unicode {

// Canonical composition (NFC) of a UTF-8 string. Invalid byte sequences are
// replaced with U+FFFD before normalization.
std::string nfc(std::string_view utf8);

// Unicode White_Space property.
bool is_whitespace(char32_t cp);

// Codepoints in the Arabic blocks (0600-06FF, 0750-077F, 08A0-08FF,
// FB50-FDFF, FE70-FEFF).
bool is_arabic(char32_t cp);

// Decodes one codepoint starting at byte offset `i`, advancing `i`.
// Malformed sequences yield U+FFFD and advance one byte.
char32_t decode_utf8(std::string_view s, std::size_t& i);

void append_utf8(std::string& out, char32_t cp);

std::size_t count_codepoints(std::string_view utf8);

// Fraction of non-whitespace codepoints that are in the Arabic blocks.
// Empty (or all-whitespace) input yields 0.
double arabic_ratio(std::string_view utf8);

} // namespace forge::unicode
