#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace awn {

// Canonical form used for identity of written forms: NFC composition,
// outer whitespace stripped, inner whitespace runs collapsed to one space.
std::string normalize_form(std::string_view form);

// normalize_form followed by removal of Arabic diacritic marks (harakat,
// tanween, shadda, sukun, superscript alef, Quranic marks) and tatweel.
// Used only to warn about near-duplicates.
std::string skeleton_form(std::string_view form);

bool is_arabic_diacritic(char32_t cp);

// UTF-8 helpers. Invalid sequences decode to U+FFFD.
std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(std::u32string_view text);

// Splits on single spaces after normalization.
std::vector<std::string> tokens(std::string_view form);

std::string trim(std::string_view text);

}  // namespace awn
