#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "awn/ingest.hpp"
#include "awn/lexicon.hpp"
#include "awn/metrics.hpp"
#include "awn/workflow.hpp"

namespace awn::project {

namespace fs = std::filesystem;

struct ResultSheetPaths {
  fs::path final_sheet;
  fs::path delta_sheet;
};

// Loaded from a JSON file; relative paths resolve against its directory.
//
//   {
//     "language": "ar",
//     "pivot_lexicon": ["pivot.tsv"],          // string or list
//     "v1_lexicon": ["v1_noun.tsv", ...],      // string or list
//     "ne_filter": "named_entities.txt",
//     "result_sheets": {"noun": {"final": "...", "delta": "..."}},
//     "column_mappings": {"pivot_lexicon": "...", "v1_lexicon": "...",
//                         "final": "...", "delta": "...", "final.noun": "..."},
//     "actors": [{"id": "t1", "role": "translator"}, ...],
//     "storage": "store",
//     "port": 8080,
//     "clock": "system"                        // or "logical"
//   }
struct ProjectConfig {
  fs::path origin;  // the config file itself
  std::string language = "ar";
  std::string pivot_tag = "pwn";
  std::string v1_tag = "awn";
  std::vector<fs::path> pivot_lexicon;
  std::vector<fs::path> v1_lexicon;
  std::optional<fs::path> ne_filter;
  std::map<PartOfSpeech, ResultSheetPaths> result_sheets;
  std::map<std::string, fs::path> column_mappings;
  std::vector<workflow::Actor> actors;
  fs::path storage;
  int port = 8080;
  std::string clock = "system";

  // Throws invalid-config for schema problems, io for missing files.
  static ProjectConfig load(const fs::path& file);
  static ProjectConfig parse(std::string_view json_text, const fs::path& base_dir);

  workflow::Roster roster() const;
  workflow::Clock make_clock() const;
  // invalid-config unless the roster has >= 2 translators and >= 1 expert.
  void require_workflow_roster() const;
  // Mapping registered for `key` ("final.noun" falls back to "final").
  ingest::ColumnMapping mapping(const std::string& key) const;
};

// Storage directory layout.
inline constexpr const char* kPivotFile = "pivot.json";
inline constexpr const char* kV1File = "v1.json";
inline constexpr const char* kBaseFile = "base.json";      // target as imported from result sheets
inline constexpr const char* kTargetFile = "target.json";  // snapshot of the current target
inline constexpr const char* kLogFile = "audit.log";

std::string read_file(const fs::path& path);  // throws io naming the path
// Writes via a temporary file and rename, fsynced.
void write_file(const fs::path& path, std::string_view bytes);

struct FileReport {
  std::string file;
  ingest::ParseReport report;
};

struct IngestSummary {
  std::vector<FileReport> files;
  std::map<PartOfSpeech, std::size_t> tasks_per_pos;
  std::vector<std::string> unresolved;
  std::size_t excluded = 0;
  std::map<PartOfSpeech, std::size_t> imported_synsets;
  std::size_t imported_changes = 0;

  bool has_rejections() const;
};

// Parses every configured input and rewrites the storage directory. Events
// carry logical timestamps so the same inputs give the same bytes. Refuses
// (invalid-config) to discard workflow activity unless `force` is set.
IngestSummary ingest(const ProjectConfig& config, bool force = false);

namespace detail {
struct Loaded;
}

// A project opened from its storage directory. The audit log is replayed in
// full on open.
class Project {
public:
  explicit Project(const ProjectConfig& config);  // throws no-project, storage-corruption

  const ProjectConfig& config() const { return config_; }
  const Lexicon& pivot() const { return pivot_; }
  const Lexicon& v1() const { return v1_; }
  const Lexicon& base() const { return base_; }
  workflow::Engine& engine() { return engine_; }
  const workflow::Engine& engine() const { return engine_; }

  // Appends events the engine recorded since the last call and fsyncs.
  void persist();
  // Writes target.json from the current state.
  void snapshot() const;

  // Synset by id from target, else V1, else pivot.
  const Synset* find_synset(const SynsetId& id, std::string* source = nullptr) const;
  metrics::InputStats input_stats() const;

private:
  Project(const ProjectConfig& config, detail::Loaded loaded);

  ProjectConfig config_;
  Lexicon pivot_;
  Lexicon v1_;
  Lexicon base_;
  workflow::Engine engine_;
  std::size_t persisted_ = 0;
};

enum class ExportFormat { canonical, result_sheets, task_sheets };
ExportFormat parse_export_format(std::string_view text);

// Returns the written file paths, in write order.
std::vector<fs::path> export_project(const Project& project, ExportFormat format,
                                     const fs::path& out_dir);

}  // namespace awn::project
