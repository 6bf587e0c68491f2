#include "awn/tsv.hpp"

#include "awn/unicode.hpp"

namespace awn::tsv {

std::vector<Line> read(std::string_view bytes) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    Line parsed;
    parsed.number = number;
    std::size_t cell_start = 0;
    while (true) {
      std::size_t tab = line.find('\t', cell_start);
      if (tab == std::string_view::npos) {
        parsed.cells.emplace_back(line.substr(cell_start));
        break;
      }
      parsed.cells.emplace_back(line.substr(cell_start, tab - cell_start));
      cell_start = tab + 1;
    }
    lines.push_back(std::move(parsed));
  }
  return lines;
}

std::string escape(std::string_view text, bool list_item) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default:
        if (list_item && text.substr(i, kListDelimiter.size()) == kListDelimiter) {
          out += '\\';
          out += kListDelimiter;
          i += kListDelimiter.size() - 1;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string unescape(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != '\\' || i + 1 == raw.size()) {
      out += raw[i];
      continue;
    }
    char next = raw[++i];
    switch (next) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default: out += next;  // "\\" and the first byte of an escaped delimiter
    }
  }
  return out;
}

std::vector<std::string> split_list(std::string_view raw) {
  std::vector<std::string> items;
  std::string current;
  auto flush = [&] {
    std::string item = trim(unescape(current));
    if (!item.empty()) items.push_back(std::move(item));
    current.clear();
  };
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\\' && i + 1 < raw.size()) {
      current += raw[i];
      current += raw[i + 1];
      ++i;
      continue;
    }
    if (raw.substr(i, kListDelimiter.size()) == kListDelimiter) {
      flush();
      i += kListDelimiter.size() - 1;
      continue;
    }
    current += raw[i];
  }
  flush();
  return items;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += kListDelimiter;
    out += escape(items[i], true);
  }
  return out;
}

std::string write_row(const std::vector<std::string>& escaped_cells) {
  std::string out;
  for (std::size_t i = 0; i < escaped_cells.size(); ++i) {
    if (i) out += '\t';
    out += escaped_cells[i];
  }
  out += '\n';
  return out;
}

}  // namespace awn::tsv
