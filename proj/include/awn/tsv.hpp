#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace awn::tsv {

// Delimiter between values inside one multi-valued cell (Arabic semicolon).
inline constexpr std::string_view kListDelimiter = "\xD8\x9B";  // U+061B

struct Line {
  std::size_t number = 0;  // 1-based line number in the file
  std::vector<std::string> cells;  // raw (still escaped) cell text
};

// Splits on LF (a trailing CR is dropped) and TAB. Blank lines are skipped.
std::vector<Line> read(std::string_view bytes);

// Backslash escaping: "\\", "\t", "\n", "\r", and in list items "\؛".
std::string escape(std::string_view text, bool list_item = false);
std::string unescape(std::string_view raw);

std::vector<std::string> split_list(std::string_view raw);
std::string join_list(const std::vector<std::string>& items);

std::string write_row(const std::vector<std::string>& escaped_cells);

}  // namespace awn::tsv
