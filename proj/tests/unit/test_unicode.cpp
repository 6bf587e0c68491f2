#include <doctest.h>

#include "awn/unicode.hpp"

using namespace awn;

TEST_CASE("normalize_form composes and collapses whitespace") {
  // ALEF + HAMZA ABOVE composes to ALEF WITH HAMZA ABOVE under NFC.
  CHECK(normalize_form("أ") == "أ");
  CHECK(normalize_form("  بشكل   \t معبر ") == "بشكل معبر");
  CHECK(normalize_form("") == "");
  CHECK(normalize_form("word") == "word");
}

TEST_CASE("skeleton_form strips harakat and tatweel") {
  CHECK(skeleton_form("جِسْم") == "جسم");
  CHECK(skeleton_form("يوماً ما") == "يوما ما");
  CHECK(skeleton_form("مِقْيَاس") == "مقياس");
  CHECK(skeleton_form("كـتـاب") == "كتاب");
  CHECK(skeleton_form("جسم") == "جسم");
}

TEST_CASE("diacritic classification") {
  CHECK(is_arabic_diacritic(U'َ'));  // fatha
  CHECK(is_arabic_diacritic(U'ّ'));  // shadda
  CHECK(is_arabic_diacritic(U'ٰ'));  // superscript alef
  CHECK_FALSE(is_arabic_diacritic(U'ب'));
  CHECK_FALSE(is_arabic_diacritic(U'a'));
}

TEST_CASE("utf8 round trip and invalid bytes") {
  std::string s = "ضجيج؛ ضوضاء";
  CHECK(utf8_encode(utf8_decode(s)) == s);
  CHECK(utf8_decode("\xff") == std::u32string(1, U'�'));
  CHECK(utf8_decode("a\xc3") == std::u32string{U'a', U'�'});
}

TEST_CASE("tokens split normalized forms") {
  CHECK(tokens(" سهواً   بدون قصد ") == std::vector<std::string>{"سهواً", "بدون", "قصد"});
  CHECK(tokens("").empty());
  CHECK(tokens("جسم") == std::vector<std::string>{"جسم"});
}

TEST_CASE("trim") {
  CHECK(trim("  a b \n") == "a b");
  CHECK(trim("   ") == "");
}
