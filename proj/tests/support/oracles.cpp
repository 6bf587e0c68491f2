#include "oracles.hpp"

#include <set>

#include <json.hpp>

#include "awn/unicode.hpp"

namespace awn::testing {

using nlohmann::json;

namespace {

std::vector<json> as_json(std::span<const workflow::AuditEvent> log) {
  std::vector<json> out;
  for (const auto& e : log) out.push_back(json::parse(workflow::to_line(e)));
  return out;
}

std::size_t pos_slot(const std::string& pos) {
  if (pos == "noun") return 0;
  if (pos == "verb") return 1;
  if (pos == "adjective") return 2;
  return 3;
}

std::size_t kind_slot(const std::string& kind) {
  static const std::vector<std::string> order = {"lemma-added",   "lemma-deleted", "gloss-added",
                                                 "example-added", "gap-marked",    "phraset-added"};
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == kind) return i;
  }
  throw std::runtime_error("unknown kind " + kind);
}

std::string criterion(const std::string& kind) {
  if (kind == "lemma-added" || kind == "lemma-deleted") return "lemmas";
  if (kind == "gloss-added") return "gloss";
  if (kind == "example-added") return "examples";
  return "gap";
}

}  // namespace

std::vector<SynsetId> linear_lookup(const Lexicon& lexicon, const std::string& form,
                                    std::optional<PartOfSpeech> pos) {
  std::vector<SynsetId> out;
  const std::string key = normalize_form(form);
  for (const auto& [id, s] : lexicon.synsets()) {
    if (pos && s.pos != *pos) continue;
    for (const auto& sense : s.senses) {
      if (sense.active() && normalize_form(sense.written_form) == key) {
        out.push_back(id);
        break;
      }
    }
  }
  return out;
}

metrics::ContributionStats oracle_stats(std::span<const workflow::AuditEvent> log, bool all_scope,
                                        bool any_component) {
  metrics::ContributionStats stats;
  std::set<std::pair<std::size_t, std::string>> updated;
  auto count = [&](const json& c) {
    std::string kind = c["kind"];
    std::size_t p = pos_slot(c["pos"]);
    auto& row = stats.per_pos[p];
    if (kind == "lemma-added") ++row.new_lemmas;
    if (kind == "lemma-deleted") ++row.deleted_lemmas;
    if (kind == "gloss-added") ++row.new_glosses;
    if (kind == "example-added") ++row.new_examples;
    if (kind == "gap-marked") ++row.gaps;
    if (kind == "phraset-added") ++row.phrasets;
    bool lemma_or_gap = kind == "lemma-added" || kind == "lemma-deleted" || kind == "gap-marked";
    if (any_component || lemma_or_gap) updated.insert({p, c["synset"]});
  };
  for (const auto& e : as_json(log)) {
    const std::string type = e["type"];
    if (type == "change-committed") {
      if (!all_scope || e["payload"]["source"] == "import") count(e["payload"]["change"]);
    } else if (type == "contribution-submitted" && all_scope) {
      for (const auto& c : e["payload"]["changes"]) count(c);
    }
  }
  for (const auto& [p, id] : updated) ++stats.per_pos[p].updated_synsets;
  for (const auto& row : stats.per_pos) stats.total += row;
  return stats;
}

metrics::CorrectnessReport oracle_correctness(std::span<const workflow::AuditEvent> log) {
  metrics::CorrectnessReport report;
  const auto events = as_json(log);
  auto is_submission = [](const json& e) { return e["type"] == "contribution-submitted"; };
  auto is_expert = [](const json& e) {
    return e["type"] == "review-recorded" && e["payload"]["phase"] == "expert";
  };
  auto is_skip = [](const json& e) { return e["payload"]["contribution"]["type"] == "skip"; };

  for (std::size_t i = 0; i < events.size(); ++i) {
    const json& e = events[i];
    if (is_submission(e) && !is_skip(e)) {
      // Fate of this submission: the next submission or expert review on the task.
      std::optional<std::size_t> next;
      for (std::size_t k = i + 1; k < events.size(); ++k) {
        if (events[k]["task"] == e["task"] && (is_submission(events[k]) || is_expert(events[k]))) {
          next = k;
          break;
        }
      }
      if (!next) {
        ++report.undecided;
      } else if (is_submission(events[*next])) {
        ++report.superseded;
      }
    }
    if (!is_expert(e)) continue;
    // The submission this review judges: the latest one before it, unless an
    // earlier expert review already judged it.
    std::optional<std::size_t> sub;
    for (std::size_t k = i; k-- > 0;) {
      if (events[k]["task"] != e["task"]) continue;
      if (is_expert(events[k])) break;
      if (is_submission(events[k])) {
        sub = k;
        break;
      }
    }
    if (!sub || is_skip(events[*sub])) continue;
    const json& d = e["payload"]["decision"];
    const bool reject = d["verdict"] == "reject";
    std::set<std::size_t> items;
    for (const auto& n : d["rejected_items"]) items.insert(n.get<std::size_t>());
    const auto& changes = events[*sub]["payload"]["changes"];
    for (std::size_t n = 0; n < changes.size(); ++n) {
      std::string kind = changes[n]["kind"];
      bool wrong = false;
      if (reject) wrong = items.empty() ? !d["checklist"][criterion(kind)].get<bool>() : items.count(n) > 0;
      auto& r = report.per_kind[kind_slot(kind)];
      ++r.total;
      if (!wrong) ++r.correct;
    }
  }
  for (const auto& r : report.per_kind) {
    report.overall.correct += r.correct;
    report.overall.total += r.total;
  }
  return report;
}

std::vector<std::pair<std::string, std::string>> oracle_findings(const Lexicon& lexicon) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [id, s] : lexicon.synsets()) {
    if (s.status == LexicalizationStatus::pending) continue;
    if (s.status == LexicalizationStatus::gap) {
      if (s.phrasets.empty()) out.emplace_back("gap-without-phraset", id.value);
      continue;
    }
    std::size_t active = 0;
    for (const auto& sense : s.senses) active += sense.active() ? 1 : 0;
    if (active == 0) out.emplace_back("empty-lexicalized", id.value);
    if (!s.gloss) out.emplace_back("missing-gloss", id.value);
    for (const auto& sense : s.senses) {
      if (sense.active() && sense.examples.empty()) {
        out.emplace_back("sense-without-example", id.value + "#" + std::to_string(sense.rank));
      }
    }
  }
  return out;
}

std::map<std::string, std::size_t> oracle_degrees(const Lexicon& lexicon) {
  std::map<std::string, std::set<std::string>> owners;
  for (const auto& [id, s] : lexicon.synsets()) {
    for (const auto& sense : s.senses) {
      if (sense.active()) owners[normalize_form(sense.written_form)].insert(id.value);
    }
  }
  std::map<std::string, std::size_t> out;
  for (const auto& [form, ids] : owners) out[form] = ids.size();
  return out;
}

}  // namespace awn::testing
