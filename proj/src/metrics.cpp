#include "awn/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <utility>

#include "awn/error.hpp"
#include "awn/unicode.hpp"

namespace awn::metrics {

using workflow::AuditEvent;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t pos_index(PartOfSpeech pos) { return static_cast<std::size_t>(pos); }

void check_sequence(std::span<const AuditEvent> log) {
  std::uint64_t expected = 1;
  for (const auto& e : log) {
    if (e.seq != expected) {
      throw Error(ErrorCode::illegal_log,
                  "expected seq " + std::to_string(expected) + ", got " + std::to_string(e.seq),
                  "seq");
    }
    ++expected;
  }
}

void tally(StatsRow& row, ChangeKind kind) {
  switch (kind) {
    case ChangeKind::lemma_added: ++row.new_lemmas; break;
    case ChangeKind::lemma_deleted: ++row.deleted_lemmas; break;
    case ChangeKind::gloss_added: ++row.new_glosses; break;
    case ChangeKind::example_added: ++row.new_examples; break;
    case ChangeKind::gap_marked: ++row.gaps; break;
    case ChangeKind::phraset_added: ++row.phrasets; break;
  }
}

std::string pos_heading(PartOfSpeech pos) {
  std::string s(to_string(pos));
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::vector<std::string> pos_header(std::string first) {
  std::vector<std::string> h{std::move(first)};
  for (PartOfSpeech pos : kAllPos) h.push_back(pos_heading(pos));
  h.push_back("Total");
  return h;
}

bool is_integer_cell(const std::string& cell) {
  return !cell.empty() && std::all_of(cell.begin(), cell.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::size_t display_width(const std::string& cell) {
  std::size_t n = 0;
  for (char32_t cp : utf8_decode(cell)) {
    if (!is_arabic_diacritic(cp)) ++n;
  }
  return n;
}

ordered_json ratio_json(const Ratio& r) {
  ordered_json j;
  j["correct"] = r.correct;
  j["total"] = r.total;
  auto v = r.value();
  j["ratio"] = v ? ordered_json(*v) : ordered_json(nullptr);
  j["percent"] = percent(v);
  return j;
}

}  // namespace

std::string_view to_string(Scope scope) {
  return scope == Scope::all ? "all" : "approved-only";
}

Scope parse_scope(std::string_view text) {
  if (text == "approved-only" || text == "approved") return Scope::approved_only;
  if (text == "all") return Scope::all;
  throw Error(ErrorCode::bad_request, "scope must be approved-only or all", "scope");
}

std::string_view to_string(UpdatedRule rule) {
  return rule == UpdatedRule::any_component ? "any-component" : "lemma-or-gap";
}

UpdatedRule parse_updated_rule(std::string_view text) {
  if (text == "lemma-or-gap") return UpdatedRule::lemma_or_gap;
  if (text == "any-component") return UpdatedRule::any_component;
  throw Error(ErrorCode::bad_request, "updated rule must be lemma-or-gap or any-component",
              "updated");
}

bool counts_as_update(ChangeKind kind, UpdatedRule rule) {
  if (rule == UpdatedRule::any_component) return true;
  return kind == ChangeKind::lemma_added || kind == ChangeKind::lemma_deleted ||
         kind == ChangeKind::gap_marked;
}

StatsRow& StatsRow::operator+=(const StatsRow& o) {
  updated_synsets += o.updated_synsets;
  new_lemmas += o.new_lemmas;
  deleted_lemmas += o.deleted_lemmas;
  new_glosses += o.new_glosses;
  new_examples += o.new_examples;
  gaps += o.gaps;
  phrasets += o.phrasets;
  return *this;
}

ContributionStats compute_contribution_stats(std::span<const AuditEvent> log, Scope scope,
                                             UpdatedRule rule) {
  check_sequence(log);
  ContributionStats stats;
  std::array<std::set<SynsetId>, 4> updated;
  auto count = [&](const Change& c) {
    tally(stats.per_pos[pos_index(c.pos)], c.kind);
    if (counts_as_update(c.kind, rule)) updated[pos_index(c.pos)].insert(c.synset);
  };
  for (const auto& e : log) {
    std::visit(overloaded{
                   [&](const workflow::ChangeCommitted& p) {
                     if (scope == Scope::approved_only || p.source == workflow::ChangeSource::import) {
                       count(p.change);
                     }
                   },
                   [&](const workflow::ContributionSubmitted& p) {
                     if (scope == Scope::all) {
                       for (const auto& c : p.changes) count(c);
                     }
                   },
                   [](const auto&) {},
               },
               e.payload);
  }
  for (PartOfSpeech pos : kAllPos) {
    StatsRow& row = stats.per_pos[pos_index(pos)];
    row.updated_synsets = updated[pos_index(pos)].size();
    stats.total += row;
  }
  return stats;
}

std::optional<double> CorrectnessReport::macro_average() const {
  double sum = 0;
  int n = 0;
  for (const auto& r : per_kind) {
    if (auto v = r.value()) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

CorrectnessReport compute_correctness(std::span<const AuditEvent> log) {
  check_sequence(log);
  CorrectnessReport report;
  // Changes of each task's latest submission not yet judged by the expert.
  std::map<std::string, std::vector<Change>> open;
  for (const auto& e : log) {
    if (const auto* sub = std::get_if<workflow::ContributionSubmitted>(&e.payload)) {
      if (open.count(e.task)) ++report.superseded;
      open.erase(e.task);
      if (!std::holds_alternative<workflow::Skip>(sub->contribution)) open[e.task] = sub->changes;
    } else if (const auto* review = std::get_if<workflow::ReviewRecorded>(&e.payload)) {
      if (review->phase != workflow::ReviewPhase::expert) continue;
      auto it = open.find(e.task);
      if (it == open.end()) continue;
      for (std::size_t i = 0; i < it->second.size(); ++i) {
        ChangeKind kind = it->second[i].kind;
        Ratio& r = report.per_kind[static_cast<std::size_t>(kind)];
        ++r.total;
        if (!workflow::judged_wrong(review->decision, i, kind)) ++r.correct;
      }
      open.erase(it);
    }
  }
  report.undecided = open.size();
  for (const auto& r : report.per_kind) {
    report.overall.correct += r.correct;
    report.overall.total += r.total;
  }
  return report;
}

std::string_view to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::missing_gloss: return "missing-gloss";
    case FindingKind::sense_without_example: return "sense-without-example";
    case FindingKind::gap_without_phraset: return "gap-without-phraset";
    case FindingKind::empty_lexicalized: return "empty-lexicalized";
  }
  return "missing-gloss";
}

std::vector<Finding> completeness_audit(const Lexicon& lexicon) {
  std::vector<Finding> out;
  for (const auto& [id, s] : lexicon.synsets()) {
    auto add = [&](FindingKind kind, std::string locator, std::string message) {
      out.push_back({kind, id, s.pos, std::move(locator), std::move(message)});
    };
    if (s.status == LexicalizationStatus::gap) {
      if (s.phrasets.empty()) add(FindingKind::gap_without_phraset, id.value, "gap has no phraset");
      continue;
    }
    if (s.status != LexicalizationStatus::lexicalized) continue;
    if (s.active_sense_count() == 0) {
      add(FindingKind::empty_lexicalized, id.value, "lexicalized synset has no active sense");
    }
    if (!s.gloss) add(FindingKind::missing_gloss, id.value, "synset has no gloss");
    for (const Sense* sense : s.active_senses()) {
      if (sense->examples.empty()) {
        add(FindingKind::sense_without_example, id.value + "#" + std::to_string(sense->rank),
            "sense '" + sense->written_form + "' has no example");
      }
    }
  }
  return out;
}

std::size_t PolysemyReport::pair_count() const {
  std::size_t n = 0;
  for (const auto& [form, degree] : histogram) n += degree;
  return n;
}

PolysemyReport polysemy_report(const Lexicon& lexicon, std::size_t k) {
  if (k < 2) throw Error(ErrorCode::bad_request, "polysemy threshold must be at least 2", "k");
  std::map<std::string, std::set<SynsetId>> owners;
  std::map<std::string, std::set<SynsetId>> inside_compounds;
  for (const auto& [id, s] : lexicon.synsets()) {
    for (const Sense* sense : s.active_senses()) {
      std::string form = normalize_form(sense->written_form);
      owners[form].insert(id);
      auto parts = tokens(form);
      if (parts.size() >= 2) {
        for (const auto& part : parts) inside_compounds[part].insert(id);
      }
    }
  }
  PolysemyReport report;
  report.threshold = k;
  for (const auto& [form, ids] : owners) {
    report.histogram[form] = ids.size();
    if (ids.size() < k) continue;
    PolysemyCandidate c{form, ids.size(), {ids.begin(), ids.end()}, std::nullopt};
    if (auto it = inside_compounds.find(form); it != inside_compounds.end()) {
      std::size_t others = 0;
      for (const auto& id : it->second) {
        if (!ids.count(id)) ++others;
      }
      if (others >= 2) c.tag = "compound-noun";
    }
    report.candidates.push_back(std::move(c));
  }
  std::stable_sort(report.candidates.begin(), report.candidates.end(),
                   [](const auto& a, const auto& b) { return a.degree > b.degree; });
  return report;
}

InputStats compute_input_stats(const Lexicon& lexicon) {
  InputStats stats;
  for (const auto& [id, s] : lexicon.synsets()) {
    InputRow& row = stats.per_pos[pos_index(s.pos)];
    ++row.synsets;
    for (const auto& sense : s.senses) {
      if (sense.provenance == Provenance::imported_v1) ++row.words;
    }
  }
  for (const auto& row : stats.per_pos) {
    stats.total.synsets += row.synsets;
    stats.total.words += row.words;
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Output

Table contribution_table(const ContributionStats& stats) {
  Table t;
  t.header = pos_header("");
  auto row = [&](const char* label, std::size_t StatsRow::*field) {
    std::vector<std::string> r{label};
    for (const auto& p : stats.per_pos) r.push_back(std::to_string(p.*field));
    r.push_back(std::to_string(stats.total.*field));
    t.rows.push_back(std::move(r));
  };
  row("Updated synsets", &StatsRow::updated_synsets);
  row("New lemmas", &StatsRow::new_lemmas);
  row("Deleted lemmas", &StatsRow::deleted_lemmas);
  row("New glosses", &StatsRow::new_glosses);
  row("New examples", &StatsRow::new_examples);
  row("Gaps", &StatsRow::gaps);
  row("Phrasets", &StatsRow::phrasets);
  return t;
}

Table input_table(const InputStats& stats) {
  Table t;
  t.header = pos_header("");
  std::vector<std::string> synsets{"Synsets"};
  std::vector<std::string> words{"Words"};
  for (const auto& p : stats.per_pos) {
    synsets.push_back(std::to_string(p.synsets));
    words.push_back(std::to_string(p.words));
  }
  synsets.push_back(std::to_string(stats.total.synsets));
  words.push_back(std::to_string(stats.total.words));
  t.rows = {std::move(synsets), std::move(words)};
  return t;
}

Table correctness_table(const CorrectnessReport& report) {
  static constexpr const char* kLabels[] = {"New lemmas", "Deleted lemmas", "New glosses",
                                            "New examples", "Gaps", "Phrasets"};
  Table t;
  t.header = {"Contribution", "Correct", "Total", "Correctness"};
  for (ChangeKind kind : kAllChangeKinds) {
    const Ratio& r = report.of(kind);
    t.rows.push_back({kLabels[static_cast<std::size_t>(kind)], std::to_string(r.correct),
                      std::to_string(r.total), percent(r.value())});
  }
  t.rows.push_back({"Total", std::to_string(report.overall.correct),
                    std::to_string(report.overall.total), percent(report.overall.value())});
  return t;
}

Table findings_table(const std::vector<Finding>& findings) {
  Table t;
  t.header = {"locator", "pos", "kind", "message"};
  for (const auto& f : findings) {
    t.rows.push_back({f.locator, std::string(to_string(f.pos)), std::string(to_string(f.kind)),
                      f.message});
  }
  return t;
}

std::string render_tsv(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += '\t';
      out += cells[i];
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  return out;
}

std::string render_text(const Table& table) {
  auto shown = [](const std::string& cell) {
    return is_integer_cell(cell) ? with_thousands(std::stoull(cell)) : cell;
  };
  std::vector<std::size_t> widths(table.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], display_width(shown(cells[i])));
    }
  };
  measure(table.header);
  for (const auto& r : table.rows) measure(r);

  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < widths.size(); ++i) {
      std::string cell = shown(cells[i]);
      std::string pad(widths[i] - display_width(cell), ' ');
      if (i) out += "  ";
      // First column left-aligned, numbers right-aligned.
      out += i == 0 ? cell + pad : pad + cell;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  };
  line(table.header);
  std::size_t rule = std::accumulate(widths.begin(), widths.end(), std::size_t{0}) +
                     2 * (widths.empty() ? 0 : widths.size() - 1);
  out += std::string(rule, '-') + "\n";
  for (const auto& r : table.rows) line(r);
  return out;
}

std::string with_thousands(std::size_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

std::string percent(std::optional<double> ratio) {
  if (!ratio) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", *ratio * 100.0);
  return buf;
}

ordered_json to_json(const StatsRow& row) {
  ordered_json j;
  j["updated_synsets"] = row.updated_synsets;
  j["new_lemmas"] = row.new_lemmas;
  j["deleted_lemmas"] = row.deleted_lemmas;
  j["new_glosses"] = row.new_glosses;
  j["new_examples"] = row.new_examples;
  j["gaps"] = row.gaps;
  j["phrasets"] = row.phrasets;
  return j;
}

ordered_json to_json(const ContributionStats& stats) {
  ordered_json j;
  for (PartOfSpeech pos : kAllPos) j[std::string(to_string(pos))] = to_json(stats.of(pos));
  j["total"] = to_json(stats.total);
  return j;
}

ordered_json to_json(const CorrectnessReport& report) {
  ordered_json j;
  ordered_json categories;
  for (ChangeKind kind : kAllChangeKinds) categories[std::string(to_string(kind))] = ratio_json(report.of(kind));
  j["categories"] = std::move(categories);
  j["overall"] = ratio_json(report.overall);
  auto macro = report.macro_average();
  j["macro_average"] = macro ? ordered_json(*macro) : ordered_json(nullptr);
  j["undecided"] = report.undecided;
  j["superseded"] = report.superseded;
  return j;
}

ordered_json to_json(const Finding& f) {
  ordered_json j;
  j["kind"] = to_string(f.kind);
  j["synset"] = f.synset.value;
  j["pos"] = to_string(f.pos);
  j["locator"] = f.locator;
  j["message"] = f.message;
  return j;
}

ordered_json to_json(const std::vector<Finding>& findings) {
  ordered_json arr = ordered_json::array();
  for (const auto& f : findings) arr.push_back(to_json(f));
  return arr;
}

ordered_json to_json(const PolysemyReport& report) {
  ordered_json j;
  j["threshold"] = report.threshold;
  j["pairs"] = report.pair_count();
  ordered_json candidates = ordered_json::array();
  for (const auto& c : report.candidates) {
    ordered_json cj;
    cj["form"] = c.form;
    cj["degree"] = c.degree;
    ordered_json ids = ordered_json::array();
    for (const auto& id : c.synsets) ids.push_back(id.value);
    cj["synsets"] = std::move(ids);
    cj["tag"] = c.tag ? ordered_json(*c.tag) : ordered_json(nullptr);
    candidates.push_back(std::move(cj));
  }
  j["candidates"] = std::move(candidates);
  return j;
}

ordered_json to_json(const InputStats& stats) {
  ordered_json j;
  auto row = [](const InputRow& r) {
    ordered_json rj;
    rj["synsets"] = r.synsets;
    rj["words"] = r.words;
    return rj;
  };
  for (PartOfSpeech pos : kAllPos) j[std::string(to_string(pos))] = row(stats.of(pos));
  j["total"] = row(stats.total);
  return j;
}

}  // namespace awn::metrics
