#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "awn/change.hpp"
#include "awn/error.hpp"
#include "awn/lexicon.hpp"

namespace awn::ingest {

// Column roles of the task sheet, in file order.
inline const std::vector<std::string> kTaskSheetColumns = {
    "synset_id",   "pos",          "en_lemmas",      "en_gloss",         "en_examples",
    "ar_lemmas_v1", "new_lemmas",  "deleted_lemmas", "deletion_reasons", "ar_gloss",
    "ar_examples", "gap_flag",     "phrasets",       "translator_comment", "validation"};

// Pivot (and V1) lexicon: the five required roles plus an optional pivot_id.
inline const std::vector<std::string> kLexiconColumns = {"id", "pos", "lemmas", "gloss", "examples"};
inline const std::string kLexiconPivotColumn = "pivot_id";

inline const std::vector<std::string> kFinalSheetColumns = {
    "synset_id", "pos", "pivot_id", "gap_flag", "lemmas", "gloss", "examples", "phrasets",
    "phraset_examples"};

inline const std::vector<std::string> kDeltaSheetColumns = {"synset_id", "pos",   "action",
                                                            "component", "value", "detail"};

struct RowError {
  std::size_t row = 0;
  ErrorCode kind = ErrorCode::malformed_cell;
  std::string message;

  bool operator==(const RowError&) const = default;
};

struct ParseReport {
  std::size_t accepted = 0;
  std::vector<RowError> rejected;
  std::vector<std::string> warnings;

  std::size_t total() const { return accepted + rejected.size(); }
};

// Maps external header names to the roles above. Loaded from a small JSON
// object, e.g. {"Synset ID": "synset_id", "Arabic lemmas": "ar_lemmas_v1"}.
struct ColumnMapping {
  std::map<std::string, std::string> to_role;

  static ColumnMapping parse(std::string_view json_text);
  bool empty() const { return to_role.empty(); }
};

struct TaskRecord {
  std::size_t row = 0;
  SynsetId synset_id;
  PartOfSpeech pos = PartOfSpeech::noun;
  std::vector<std::string> pivot_lemmas;
  std::string pivot_gloss;
  std::vector<std::string> pivot_examples;
  std::vector<std::string> target_lemmas_v1;
  // Contribution slots; empty in freshly generated sheets.
  std::vector<std::string> new_lemmas;
  std::vector<std::string> deleted_lemmas;
  std::vector<std::string> deletion_reasons;
  std::string target_gloss;
  std::vector<std::string> target_examples;
  bool gap_flag = false;
  std::vector<std::string> phrasets;
  std::string translator_comment;
  std::string validation_status;
  std::string validator_comment;

  bool operator==(const TaskRecord&) const = default;
};

struct TaskSheet {
  std::vector<TaskRecord> records;
  ParseReport report;
};

// Throws header-mismatch; every other problem is a rejected row.
TaskSheet parse_task_sheet(std::string_view bytes, PartOfSpeech pos,
                           const ColumnMapping& mapping = {});
std::string emit_task_sheet(const std::vector<TaskRecord>& records);

struct NamedEntityFilter {
  std::set<SynsetId> ids;

  // One id per line; blank lines and lines starting with '#' are ignored.
  static NamedEntityFilter parse(std::string_view bytes);
  bool excludes(const SynsetId& id) const { return ids.count(id) != 0; }
};

struct FilterResult {
  std::vector<TaskRecord> kept;
  std::size_t excluded = 0;
};

FilterResult apply_named_entity_filter(std::vector<TaskRecord> records,
                                       const NamedEntityFilter& filter);

struct LexiconParse {
  Lexicon lexicon;
  ParseReport report;
};

// All synsets come out lexicalized with imported-v1 provenance; lemma order
// becomes rank order. Examples may carry a "<rank>:" prefix naming the sense
// they illustrate (default: the preferred term).
LexiconParse parse_pivot_lexicon(std::string_view bytes, std::string language,
                                 std::string tag = {}, const ColumnMapping& mapping = {});
std::string emit_pivot_lexicon(const Lexicon& lexicon);

struct ResultParse {
  std::vector<Synset> synsets;
  std::vector<Change> changes;  // one per accepted delta row, in file order
  ParseReport final_report;
  ParseReport delta_report;
};

ResultParse parse_result_files(std::string_view final_sheet, std::string_view delta_sheet,
                               PartOfSpeech pos, std::string language = "ar",
                               const ColumnMapping& final_mapping = {},
                               const ColumnMapping& delta_mapping = {});

struct ResultSheets {
  std::string final_sheet;
  std::string delta_sheet;
};

// Synsets of one POS, in id order. The delta lists every component marked
// `added`, every deleted sense and every gap.
ResultSheets emit_result_files(const std::vector<const Synset*>& synsets);

// Task sheet row for a task pairing a pivot synset with its V1 synset.
TaskRecord make_task_record(const Synset& pivot, const Synset& v1);

}  // namespace awn::ingest
