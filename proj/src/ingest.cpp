#include "awn/ingest.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "awn/tsv.hpp"
#include "awn/unicode.hpp"

namespace awn::ingest {

namespace {

class Columns {
public:
  Columns(const tsv::Line& header, const std::vector<std::string>& required,
          const std::vector<std::string>& optional, const ColumnMapping& mapping) {
    std::vector<std::string> names;
    for (const auto& raw : header.cells) names.push_back(trim(tsv::unescape(raw)));

    if (mapping.empty()) {
      auto matches = [&](std::size_t extra) {
        if (names.size() != required.size() + extra) return false;
        for (std::size_t i = 0; i < required.size(); ++i) {
          if (names[i] != required[i]) return false;
        }
        for (std::size_t i = 0; i < extra; ++i) {
          if (names[required.size() + i] != optional[i]) return false;
        }
        return true;
      };
      bool ok = false;
      for (std::size_t extra = 0; extra <= optional.size() && !ok; ++extra) ok = matches(extra);
      if (!ok) throw mismatch(names, required);
      for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = i;
      width_ = names.size();
      strict_ = true;
      return;
    }

    for (std::size_t i = 0; i < names.size(); ++i) {
      auto it = mapping.to_role.find(names[i]);
      std::string role = it != mapping.to_role.end() ? it->second : names[i];
      bool known = std::find(required.begin(), required.end(), role) != required.end() ||
                   std::find(optional.begin(), optional.end(), role) != optional.end();
      if (!known) continue;
      if (!index_.emplace(role, i).second) {
        throw Error(ErrorCode::header_mismatch, "column role '" + role + "' mapped twice", "header");
      }
    }
    for (const auto& role : required) {
      if (!index_.count(role)) {
        throw Error(ErrorCode::header_mismatch, "no column for role '" + role + "'", "header");
      }
    }
    width_ = names.size();
  }

  bool has(const std::string& role) const { return index_.count(role) != 0; }

  // Raw cell; missing trailing cells read as empty.
  std::string_view raw(const tsv::Line& line, const std::string& role) const {
    auto it = index_.find(role);
    if (it == index_.end() || it->second >= line.cells.size()) return {};
    return line.cells[it->second];
  }
  std::string text(const tsv::Line& line, const std::string& role) const {
    return trim(tsv::unescape(raw(line, role)));
  }
  std::vector<std::string> list(const tsv::Line& line, const std::string& role) const {
    return tsv::split_list(raw(line, role));
  }

  void check_width(const tsv::Line& line) const {
    if (strict_ && line.cells.size() > width_) {
      throw Error(ErrorCode::malformed_cell,
                  "row has " + std::to_string(line.cells.size()) + " cells, header has " +
                      std::to_string(width_));
    }
  }

private:
  static Error mismatch(const std::vector<std::string>& names,
                        const std::vector<std::string>& required) {
    std::string got;
    for (const auto& n : names) got += (got.empty() ? "" : ",") + n;
    std::string want;
    for (const auto& n : required) want += (want.empty() ? "" : ",") + n;
    return Error(ErrorCode::header_mismatch, "header [" + got + "] does not match [" + want + "]",
                 "header");
  }

  std::map<std::string, std::size_t> index_;
  std::size_t width_ = 0;
  bool strict_ = false;
};

std::vector<tsv::Line> data_lines(std::string_view bytes, const char* what) {
  auto lines = tsv::read(bytes);
  if (lines.empty()) {
    throw Error(ErrorCode::header_mismatch, std::string(what) + ": header row missing", "header");
  }
  return lines;
}

bool parse_flag(std::string_view text) {
  std::string t = trim(text);
  if (t.empty() || t == "0") return false;
  if (t == "1") return true;
  throw Error(ErrorCode::malformed_cell, "gap_flag must be 0 or 1, got '" + t + "'", "gap_flag");
}

PartOfSpeech row_pos(std::string_view cell, PartOfSpeech sheet_pos) {
  auto pos = try_parse_pos(cell);
  if (!pos) throw Error(ErrorCode::bad_pos, "bad pos '" + std::string(cell) + "'", "pos");
  if (*pos != sheet_pos) {
    throw Error(ErrorCode::bad_pos,
                "row pos " + std::string(to_string(*pos)) + " in " +
                    std::string(to_string(sheet_pos)) + " sheet",
                "pos");
  }
  return *pos;
}

// "<n>:text" -> (n, text); plain text -> (nullopt, text).
std::pair<std::optional<std::size_t>, std::string> split_numbered(const std::string& item) {
  std::size_t i = 0;
  while (i < item.size() && std::isdigit(static_cast<unsigned char>(item[i]))) ++i;
  if (i == 0 || i >= item.size() || item[i] != ':') return {std::nullopt, item};
  return {std::stoul(item.substr(0, i)), trim(item.substr(i + 1))};
}

std::string numbered(std::size_t n, const std::string& text) {
  return std::to_string(n) + ":" + text;
}

template <typename RowFn>
ParseReport for_each_row(const std::vector<tsv::Line>& lines, const Columns& columns, RowFn&& fn) {
  ParseReport report;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    try {
      columns.check_width(line);
      fn(line, report);
      ++report.accepted;
    } catch (const Error& e) {
      report.rejected.push_back({line.number, e.code(), e.what()});
    }
  }
  return report;
}

}  // namespace

ColumnMapping ColumnMapping::parse(std::string_view json_text) {
  ColumnMapping mapping;
  try {
    auto j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw Error(ErrorCode::invalid_config, "column mapping must be an object");
    for (const auto& [name, role] : j.items()) mapping.to_role[name] = role.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_config, std::string("column mapping: ") + e.what());
  }
  return mapping;
}

TaskSheet parse_task_sheet(std::string_view bytes, PartOfSpeech pos, const ColumnMapping& mapping) {
  auto lines = data_lines(bytes, "task sheet");
  Columns cols(lines.front(), kTaskSheetColumns, {}, mapping);
  TaskSheet sheet;
  std::set<SynsetId> seen;
  sheet.report = for_each_row(lines, cols, [&](const tsv::Line& line, ParseReport&) {
    TaskRecord r;
    r.row = line.number;
    r.synset_id = SynsetId(cols.text(line, "synset_id"));
    if (r.synset_id.empty()) throw Error(ErrorCode::missing_id, "synset_id is empty", "synset_id");
    r.pos = row_pos(cols.text(line, "pos"), pos);
    r.pivot_lemmas = cols.list(line, "en_lemmas");
    r.pivot_gloss = cols.text(line, "en_gloss");
    if (r.pivot_lemmas.empty() && r.pivot_gloss.empty()) {
      throw Error(ErrorCode::empty_pivot_synset, "pivot synset has neither lemmas nor gloss",
                  "en_lemmas");
    }
    r.pivot_examples = cols.list(line, "en_examples");
    r.target_lemmas_v1 = cols.list(line, "ar_lemmas_v1");
    r.new_lemmas = cols.list(line, "new_lemmas");
    r.deleted_lemmas = cols.list(line, "deleted_lemmas");
    r.deletion_reasons = cols.list(line, "deletion_reasons");
    for (const auto& reason : r.deletion_reasons) parse_deletion_reason(reason);
    r.target_gloss = cols.text(line, "ar_gloss");
    r.target_examples = cols.list(line, "ar_examples");
    r.gap_flag = parse_flag(cols.text(line, "gap_flag"));
    r.phrasets = cols.list(line, "phrasets");
    r.translator_comment = cols.text(line, "translator_comment");
    auto validation = cols.list(line, "validation");
    if (!validation.empty()) r.validation_status = validation[0];
    if (validation.size() > 1) r.validator_comment = validation[1];
    if (!seen.insert(r.synset_id).second) {
      throw Error(ErrorCode::duplicate_id, "synset id repeated: " + r.synset_id.value, "synset_id");
    }
    sheet.records.push_back(std::move(r));
  });
  return sheet;
}

std::string emit_task_sheet(const std::vector<TaskRecord>& records) {
  std::string out = tsv::write_row(kTaskSheetColumns);
  for (const auto& r : records) {
    std::vector<std::string> validation;
    if (!r.validation_status.empty() || !r.validator_comment.empty()) {
      validation.push_back(r.validation_status);
      if (!r.validator_comment.empty()) validation.push_back(r.validator_comment);
    }
    out += tsv::write_row({
        tsv::escape(r.synset_id.value),
        std::string(to_string(r.pos)),
        tsv::join_list(r.pivot_lemmas),
        tsv::escape(r.pivot_gloss),
        tsv::join_list(r.pivot_examples),
        tsv::join_list(r.target_lemmas_v1),
        tsv::join_list(r.new_lemmas),
        tsv::join_list(r.deleted_lemmas),
        tsv::join_list(r.deletion_reasons),
        tsv::escape(r.target_gloss),
        tsv::join_list(r.target_examples),
        r.gap_flag ? "1" : "0",
        tsv::join_list(r.phrasets),
        tsv::escape(r.translator_comment),
        tsv::join_list(validation),
    });
  }
  return out;
}

NamedEntityFilter NamedEntityFilter::parse(std::string_view bytes) {
  NamedEntityFilter filter;
  std::size_t start = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string line = trim(bytes.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line[0] == '#') continue;
    filter.ids.insert(SynsetId(line));
  }
  return filter;
}

FilterResult apply_named_entity_filter(std::vector<TaskRecord> records,
                                       const NamedEntityFilter& filter) {
  FilterResult result;
  result.kept.reserve(records.size());
  for (auto& r : records) {
    if (filter.excludes(r.synset_id)) {
      ++result.excluded;
    } else {
      result.kept.push_back(std::move(r));
    }
  }
  return result;
}

LexiconParse parse_pivot_lexicon(std::string_view bytes, std::string language, std::string tag,
                                 const ColumnMapping& mapping) {
  auto lines = data_lines(bytes, "lexicon");
  Columns cols(lines.front(), kLexiconColumns, {kLexiconPivotColumn}, mapping);
  LexiconParse out{Lexicon(language, std::move(tag)), {}};
  out.report = for_each_row(lines, cols, [&](const tsv::Line& line, ParseReport& report) {
    Synset s;
    s.id = SynsetId(cols.text(line, "id"));
    if (s.id.empty()) throw Error(ErrorCode::missing_id, "id is empty", "id");
    auto pos = try_parse_pos(cols.text(line, "pos"));
    if (!pos) throw Error(ErrorCode::bad_pos, "bad pos '" + cols.text(line, "pos") + "'", "pos");
    s.pos = *pos;
    if (out.lexicon.contains(s.id)) {
      throw Error(ErrorCode::duplicate_id, "synset id repeated: " + s.id.value, "id");
    }
    auto lemmas = cols.list(line, "lemmas");
    if (lemmas.empty()) throw Error(ErrorCode::empty_pivot_synset, "no lemmas", "lemmas");
    int rank = 1;
    for (auto& form : lemmas) {
      Sense sense;
      sense.written_form = std::move(form);
      sense.rank = rank++;
      sense.provenance = Provenance::imported_v1;
      s.senses.push_back(std::move(sense));
    }
    std::string gloss = cols.text(line, "gloss");
    if (!gloss.empty()) s.gloss = Gloss{gloss, language, Provenance::imported_v1};
    for (const auto& item : cols.list(line, "examples")) {
      auto [n, text] = split_numbered(item);
      std::size_t target = n.value_or(1);
      if (target == 0 || target > s.senses.size()) {
        throw Error(ErrorCode::malformed_cell, "example refers to lemma " + std::to_string(target),
                    "examples");
      }
      s.senses[target - 1].examples.push_back({text, language, Provenance::imported_v1});
    }
    if (cols.has(kLexiconPivotColumn)) {
      std::string pivot = cols.text(line, kLexiconPivotColumn);
      if (!pivot.empty()) s.pivot = SynsetId(pivot);
    }
    s.status = LexicalizationStatus::lexicalized;
    for (auto& w : diacritic_duplicate_warnings(s)) {
      report.warnings.push_back("row " + std::to_string(line.number) + ": " + w);
    }
    out.lexicon.add(std::move(s));
  });
  return out;
}

std::string emit_pivot_lexicon(const Lexicon& lexicon) {
  bool with_pivot = std::any_of(lexicon.synsets().begin(), lexicon.synsets().end(),
                                [](const auto& kv) { return kv.second.pivot.has_value(); });
  std::vector<std::string> header = kLexiconColumns;
  if (with_pivot) header.push_back(kLexiconPivotColumn);
  std::string out = tsv::write_row(header);
  for (const auto& [id, s] : lexicon.synsets()) {
    std::vector<std::string> lemmas;
    std::vector<std::string> examples;
    for (const Sense* sense : s.active_senses()) {
      lemmas.push_back(sense->written_form);
      for (const auto& ex : sense->examples) {
        examples.push_back(numbered(static_cast<std::size_t>(sense->rank), ex.text));
      }
    }
    std::vector<std::string> row = {tsv::escape(id.value), std::string(to_string(s.pos)),
                                     tsv::join_list(lemmas),
                                     tsv::escape(s.gloss ? s.gloss->text : std::string{}),
                                     tsv::join_list(examples)};
    if (with_pivot) row.push_back(tsv::escape(s.pivot ? s.pivot->value : std::string{}));
    out += tsv::write_row(row);
  }
  return out;
}

ResultParse parse_result_files(std::string_view final_sheet, std::string_view delta_sheet,
                               PartOfSpeech pos, std::string language,
                               const ColumnMapping& final_mapping,
                               const ColumnMapping& delta_mapping) {
  ResultParse out;
  std::map<SynsetId, Synset> synsets;
  std::vector<SynsetId> order;

  auto final_lines = data_lines(final_sheet, "final sheet");
  Columns fcols(final_lines.front(), kFinalSheetColumns, {}, final_mapping);
  out.final_report = for_each_row(final_lines, fcols, [&](const tsv::Line& line, ParseReport& report) {
    Synset s;
    s.id = SynsetId(fcols.text(line, "synset_id"));
    if (s.id.empty()) throw Error(ErrorCode::missing_id, "synset_id is empty", "synset_id");
    s.pos = row_pos(fcols.text(line, "pos"), pos);
    if (synsets.count(s.id)) {
      throw Error(ErrorCode::duplicate_id, "synset id repeated: " + s.id.value, "synset_id");
    }
    std::string pivot = fcols.text(line, "pivot_id");
    if (!pivot.empty()) s.pivot = SynsetId(pivot);
    bool gap = parse_flag(fcols.text(line, "gap_flag"));
    auto lemmas = fcols.list(line, "lemmas");
    if (gap && !lemmas.empty()) {
      throw Error(ErrorCode::conflicting_gap_flag, "gap-flagged synset " + s.id.value + " has lemmas",
                  "lemmas");
    }
    s.status = gap ? LexicalizationStatus::gap : LexicalizationStatus::lexicalized;
    int rank = 1;
    for (auto& form : lemmas) {
      Sense sense;
      sense.written_form = std::move(form);
      sense.rank = rank++;
      sense.provenance = Provenance::imported_v1;
      s.senses.push_back(std::move(sense));
    }
    std::string gloss = fcols.text(line, "gloss");
    if (!gloss.empty()) s.gloss = Gloss{gloss, language, Provenance::imported_v1};
    for (const auto& item : fcols.list(line, "examples")) {
      auto [n, text] = split_numbered(item);
      std::size_t target = n.value_or(1);
      if (target == 0 || target > s.senses.size()) {
        throw Error(ErrorCode::malformed_cell, "example refers to lemma " + std::to_string(target),
                    "examples");
      }
      s.senses[target - 1].examples.push_back({text, language, Provenance::imported_v1});
    }
    for (const auto& text : fcols.list(line, "phrasets")) {
      s.phrasets.push_back({text, language, {}, Provenance::imported_v1});
    }
    for (const auto& item : fcols.list(line, "phraset_examples")) {
      auto [n, text] = split_numbered(item);
      std::size_t target = n.value_or(1);
      if (target == 0 || target > s.phrasets.size()) {
        throw Error(ErrorCode::malformed_cell, "example refers to phraset " + std::to_string(target),
                    "phraset_examples");
      }
      s.phrasets[target - 1].examples.push_back({text, language, Provenance::imported_v1});
    }
    require_valid(s);
    for (auto& w : diacritic_duplicate_warnings(s)) {
      report.warnings.push_back("row " + std::to_string(line.number) + ": " + w);
    }
    order.push_back(s.id);
    synsets.emplace(s.id, std::move(s));
  });

  auto delta_lines = data_lines(delta_sheet, "delta sheet");
  Columns dcols(delta_lines.front(), kDeltaSheetColumns, {}, delta_mapping);
  out.delta_report = for_each_row(delta_lines, dcols, [&](const tsv::Line& line, ParseReport&) {
    SynsetId id(dcols.text(line, "synset_id"));
    if (id.empty()) throw Error(ErrorCode::missing_id, "synset_id is empty", "synset_id");
    PartOfSpeech row_p = row_pos(dcols.text(line, "pos"), pos);
    auto it = synsets.find(id);
    if (it == synsets.end()) {
      throw Error(ErrorCode::id_in_delta_missing_from_final,
                  "delta refers to " + id.value + " which is not in the final sheet", "synset_id");
    }
    Synset& s = it->second;
    std::string action = dcols.text(line, "action");
    std::string component = dcols.text(line, "component");
    std::string value = dcols.text(line, "value");
    std::string detail = dcols.text(line, "detail");
    auto not_in_final = [&](const std::string& what) {
      return Error(ErrorCode::invariant_violation,
                   "added " + what + " '" + value + "' is not in the final sheet for " + id.value,
                   "value");
    };

    Change change{ChangeKind::lemma_added, id, row_p, value, detail};
    if (action == "delete") {
      if (component != "lemma") {
        throw Error(ErrorCode::malformed_cell, "only lemmas can be deleted", "component");
      }
      if (s.find_active(value)) {
        throw Error(ErrorCode::invariant_violation,
                    "deleted lemma '" + value + "' is still present in " + id.value, "value");
      }
      Sense gone;
      gone.written_form = value;
      gone.provenance = Provenance::imported_v1;
      gone.deleted = parse_deletion_reason(detail.empty() ? "not-covered-by-gloss" : detail);
      gone.rank = static_cast<int>(s.senses.size()) + 1;
      change.kind = ChangeKind::lemma_deleted;
      change.detail = to_string(*gone.deleted);
      s.senses.push_back(std::move(gone));
    } else if (action == "add") {
      if (component == "lemma") {
        auto sense = std::find_if(s.senses.begin(), s.senses.end(), [&](const Sense& x) {
          return x.active() && x.provenance == Provenance::imported_v1 &&
                 normalize_form(x.written_form) == normalize_form(value);
        });
        if (sense == s.senses.end()) throw not_in_final("lemma");
        sense->provenance = Provenance::added;
        change.kind = ChangeKind::lemma_added;
      } else if (component == "gloss") {
        if (!s.gloss || normalize_form(s.gloss->text) != normalize_form(value)) {
          throw not_in_final("gloss");
        }
        s.gloss->provenance = Provenance::added;
        change.kind = ChangeKind::gloss_added;
      } else if (component == "example") {
        std::vector<Example>* examples = nullptr;
        if (detail.rfind(kPhrasetOwnerPrefix, 0) == 0) {
          std::string owner = normalize_form(detail.substr(kPhrasetOwnerPrefix.size()));
          for (auto& p : s.phrasets) {
            if (normalize_form(p.text) == owner) examples = &p.examples;
          }
        } else {
          for (auto& sense : s.senses) {
            if (sense.active() && normalize_form(sense.written_form) == normalize_form(detail)) {
              examples = &sense.examples;
            }
          }
        }
        if (!examples) throw not_in_final("example owner");
        auto ex = std::find_if(examples->begin(), examples->end(), [&](const Example& e) {
          return e.provenance == Provenance::imported_v1 &&
                 normalize_form(e.text) == normalize_form(value);
        });
        if (ex == examples->end()) throw not_in_final("example");
        ex->provenance = Provenance::added;
        change.kind = ChangeKind::example_added;
      } else if (component == "gap") {
        if (s.status != LexicalizationStatus::gap) {
          throw Error(ErrorCode::conflicting_gap_flag,
                      "delta marks " + id.value + " as a gap but the final sheet does not", "component");
        }
        change.kind = ChangeKind::gap_marked;
        change.value.clear();
      } else if (component == "phraset") {
        auto p = std::find_if(s.phrasets.begin(), s.phrasets.end(), [&](const Phraset& x) {
          return x.provenance == Provenance::imported_v1 &&
                 normalize_form(x.text) == normalize_form(value);
        });
        if (p == s.phrasets.end()) throw not_in_final("phraset");
        p->provenance = Provenance::added;
        change.kind = ChangeKind::phraset_added;
      } else {
        throw Error(ErrorCode::malformed_cell, "unknown component '" + component + "'", "component");
      }
    } else {
      throw Error(ErrorCode::malformed_cell, "action must be add or delete, got '" + action + "'",
                  "action");
    }
    out.changes.push_back(std::move(change));
  });

  out.synsets.reserve(order.size());
  for (const auto& id : order) out.synsets.push_back(std::move(synsets.at(id)));
  return out;
}

ResultSheets emit_result_files(const std::vector<const Synset*>& synsets) {
  ResultSheets out{tsv::write_row(kFinalSheetColumns), tsv::write_row(kDeltaSheetColumns)};
  auto delta = [&](const Synset& s, std::string_view action, std::string_view component,
                   const std::string& value, const std::string& detail) {
    out.delta_sheet += tsv::write_row({tsv::escape(s.id.value), std::string(to_string(s.pos)),
                                       std::string(action), std::string(component),
                                       tsv::escape(value), tsv::escape(detail)});
  };

  for (const Synset* sp : synsets) {
    const Synset& s = *sp;
    auto active = s.active_senses();
    std::vector<std::string> lemmas;
    std::vector<std::string> examples;
    for (std::size_t i = 0; i < active.size(); ++i) {
      lemmas.push_back(active[i]->written_form);
      for (const auto& ex : active[i]->examples) examples.push_back(numbered(i + 1, ex.text));
    }
    std::vector<std::string> phrasets;
    std::vector<std::string> phraset_examples;
    for (std::size_t i = 0; i < s.phrasets.size(); ++i) {
      phrasets.push_back(s.phrasets[i].text);
      for (const auto& ex : s.phrasets[i].examples) {
        phraset_examples.push_back(numbered(i + 1, ex.text));
      }
    }
    out.final_sheet += tsv::write_row({
        tsv::escape(s.id.value), std::string(to_string(s.pos)),
        tsv::escape(s.pivot ? s.pivot->value : std::string{}),
        s.status == LexicalizationStatus::gap ? "1" : "0", tsv::join_list(lemmas),
        tsv::escape(s.gloss ? s.gloss->text : std::string{}), tsv::join_list(examples),
        tsv::join_list(phrasets), tsv::join_list(phraset_examples)});

    if (s.status == LexicalizationStatus::gap) delta(s, "add", "gap", {}, {});
    for (const Sense* sense : active) {
      if (sense->provenance == Provenance::added) delta(s, "add", "lemma", sense->written_form, {});
    }
    for (const auto& sense : s.senses) {
      if (!sense.active()) delta(s, "delete", "lemma", sense.written_form, to_string(*sense.deleted));
    }
    if (s.gloss && s.gloss->provenance == Provenance::added) delta(s, "add", "gloss", s.gloss->text, {});
    for (const Sense* sense : active) {
      for (const auto& ex : sense->examples) {
        if (ex.provenance == Provenance::added) delta(s, "add", "example", ex.text, sense->written_form);
      }
    }
    for (const auto& p : s.phrasets) {
      if (p.provenance == Provenance::added) delta(s, "add", "phraset", p.text, {});
    }
    for (const auto& p : s.phrasets) {
      for (const auto& ex : p.examples) {
        if (ex.provenance == Provenance::added) {
          delta(s, "add", "example", ex.text, std::string(kPhrasetOwnerPrefix) + p.text);
        }
      }
    }
  }
  return out;
}

TaskRecord make_task_record(const Synset& pivot, const Synset& v1) {
  TaskRecord r;
  r.synset_id = v1.id;
  r.pos = v1.pos;
  for (const Sense* s : pivot.active_senses()) {
    r.pivot_lemmas.push_back(s->written_form);
    for (const auto& ex : s->examples) r.pivot_examples.push_back(ex.text);
  }
  if (pivot.gloss) r.pivot_gloss = pivot.gloss->text;
  for (const Sense* s : v1.active_senses()) r.target_lemmas_v1.push_back(s->written_form);
  return r;
}

}  // namespace awn::ingest
