#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 handling for the character classes this pipeline needs:
// ASCII plus the Russian Cyrillic block (А-Я, а-я, Ё, ё). Anything else is
// passed through untouched and classified as non-letter.
namespace abbrev::utf8 {

// Decodes UTF-8 into code points. Invalid bytes are kept as single code
// points (their byte value) so decoding never fails on noisy scanned text;
// re-encoding such a code point produces its proper UTF-8 form.
std::vector<char32_t> decode(std::string_view text);

std::string encode(const std::vector<char32_t>& cps);
void append(std::string& out, char32_t cp);

std::size_t length(std::string_view text);  // in code points

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_upper(char32_t cp);
bool is_whitespace(char32_t cp);

char32_t to_lower(char32_t cp);
std::string lower_copy(std::string_view text);

}  // namespace abbrev::utf8
