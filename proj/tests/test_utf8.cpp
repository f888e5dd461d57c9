#include "abbrev/utf8.hpp"

#include <string>

#include "doctest.h"

using namespace abbrev;

TEST_CASE("decode/encode round-trips ASCII and Cyrillic") {
  const std::string text = "Сахарный диабет (СД) 2-го типа, ALT";
  CHECK(utf8::encode(utf8::decode(text)) == text);
}

TEST_CASE("length counts code points, not bytes") {
  CHECK(utf8::length("СД") == 2);
  CHECK(utf8::length("сд-2") == 4);
  CHECK(utf8::length("ALT") == 3);
  CHECK(utf8::length("") == 0);
}

TEST_CASE("letter and digit classes cover both alphabets") {
  CHECK(utf8::is_letter(U'Ф'));
  CHECK(utf8::is_letter(U'ё'));
  CHECK(utf8::is_letter(U'z'));
  CHECK_FALSE(utf8::is_letter(U'7'));
  CHECK_FALSE(utf8::is_letter(U'-'));
  CHECK(utf8::is_digit(U'0'));
  CHECK_FALSE(utf8::is_digit(U'д'));
}

TEST_CASE("uppercase detection and lowering, including the Ё edge") {
  CHECK(utf8::is_upper(U'Д'));
  CHECK(utf8::is_upper(U'Ё'));
  CHECK(utf8::is_upper(U'A'));
  CHECK_FALSE(utf8::is_upper(U'д'));
  CHECK(utf8::to_lower(U'Д') == U'д');
  CHECK(utf8::to_lower(U'Ё') == U'ё');
  CHECK(utf8::to_lower(U'X') == U'x');
  CHECK(utf8::to_lower(U'-') == U'-');
  CHECK(utf8::lower_copy("СД-2 Go") == "сд-2 go");
}

TEST_CASE("invalid bytes decode to their byte value instead of failing") {
  const std::string broken = std::string("ab") + char(0xFF) + "cd";
  const std::vector<char32_t> cps = utf8::decode(broken);
  REQUIRE(cps.size() == 5);
  CHECK(cps[2] == 0xFF);
  // Re-encoding normalizes: the byte comes back as the UTF-8 form of U+00FF.
  CHECK(utf8::encode(cps) == "abÿcd");
  // A truncated multi-byte lead is handled the same way.
  const std::string cut = std::string("x") + char(0xD0);
  CHECK(utf8::decode(cut) == std::vector<char32_t>{U'x', 0xD0});
}

TEST_CASE("whitespace covers space, tab, newline, CR") {
  for (char32_t cp : {U' ', U'\t', U'\n', U'\r'}) CHECK(utf8::is_whitespace(cp));
  CHECK_FALSE(utf8::is_whitespace(U'.'));
}
