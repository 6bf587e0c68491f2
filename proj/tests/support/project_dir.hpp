#pragma once

// A throwaway project directory with small input files and a config.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "awn/project.hpp"

namespace awn::testing {

namespace fs = std::filesystem;

class TempDir {
public:
  TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "awn-test-XXXXXX").string();
    if (!::mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

private:
  fs::path path_;
};

inline void write_text(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Three pivot synsets, their V1 counterparts, an entity filter excluding the
// verb, and the adverb result sheets. Returns the config path.
inline fs::path write_sample_project(const fs::path& dir, const std::string& clock = "logical",
                                     int port = 0) {
  fs::copy_file(fs::path(AWN_TEST_DATA) / "pivot.tsv", dir / "pivot.tsv");
  fs::create_directories(dir / "sheets");
  for (const char* name : {"adverb.final.tsv", "adverb.delta.tsv"}) {
    fs::copy_file(fs::path(AWN_TEST_DATA) / name, dir / "sheets" / name);
  }
  write_text(dir / "v1.tsv",
             "id\tpos\tlemmas\tgloss\texamples\tpivot_id\n"
             "awn:n:00000001\tn\tضجيج؛ ضوضاء؛ ضجج؛ ضوض\t\t\tpwn:n:00000001\n"
             "awn:n:00000002\tn\tمِقْدَار؛ قَدْر؛ كَمّ؛ كَمِّيَّة\t\t\tpwn:n:00000002\n"
             "awn:v:00000003\tv\tجرب\t\t\tpwn:v:00000003\n");
  write_text(dir / "entities.txt", "# excluded\nawn:v:00000003\n");
  write_text(dir / "config.json", R"({
  "language": "ar",
  "pivot_lexicon": "pivot.tsv",
  "v1_lexicon": ["v1.tsv"],
  "ne_filter": "entities.txt",
  "result_sheets": {"adverb": {"final": "sheets/adverb.final.tsv", "delta": "sheets/adverb.delta.tsv"}},
  "actors": [{"id": "t1", "role": "translator"}, {"id": "t2", "role": "translator"},
             {"id": "t3", "role": "translator"}, {"id": "e", "role": "expert"}],
  "storage": "store",
  "port": )" + std::to_string(port) + R"(,
  "clock": ")" + clock + R"("
})");
  return dir / "config.json";
}

}  // namespace awn::testing
