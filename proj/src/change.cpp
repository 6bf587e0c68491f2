#include "awn/change.hpp"

#include <set>

#include "awn/error.hpp"
#include "awn/unicode.hpp"

namespace awn {

std::string_view to_string(ChangeKind kind) {
  switch (kind) {
    case ChangeKind::lemma_added: return "lemma-added";
    case ChangeKind::lemma_deleted: return "lemma-deleted";
    case ChangeKind::gloss_added: return "gloss-added";
    case ChangeKind::example_added: return "example-added";
    case ChangeKind::gap_marked: return "gap-marked";
    case ChangeKind::phraset_added: return "phraset-added";
  }
  return "lemma-added";
}

ChangeKind parse_change_kind(std::string_view text) {
  for (ChangeKind k : kAllChangeKinds) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::malformed_cell, "unknown change kind: " + std::string(text));
}

ordered_json to_json(const Change& change) {
  ordered_json j;
  j["kind"] = to_string(change.kind);
  j["synset"] = change.synset.value;
  j["pos"] = to_string(change.pos);
  j["value"] = change.value;
  j["detail"] = change.detail;
  return j;
}

Change change_from_json(const nlohmann::json& j) {
  return {parse_change_kind(j.at("kind").get<std::string>()),
          SynsetId(j.at("synset").get<std::string>()), parse_pos(j.at("pos").get<std::string>()),
          j.value("value", ""), j.value("detail", "")};
}

std::vector<Change> diff_synsets(const Synset& before, const Synset& after) {
  std::vector<Change> out;
  auto emit = [&](ChangeKind kind, std::string value, std::string detail = {}) {
    out.push_back({kind, after.id, after.pos, std::move(value), std::move(detail)});
  };

  if (after.status == LexicalizationStatus::gap && before.status != LexicalizationStatus::gap) {
    emit(ChangeKind::gap_marked, {});
  }

  std::set<std::string> before_active;
  for (const Sense* s : before.active_senses()) before_active.insert(normalize_form(s->written_form));
  std::set<std::string> after_active;
  for (const Sense* s : after.active_senses()) {
    std::string form = normalize_form(s->written_form);
    after_active.insert(form);
    if (!before_active.count(form)) emit(ChangeKind::lemma_added, s->written_form);
  }
  for (const Sense* s : before.active_senses()) {
    std::string form = normalize_form(s->written_form);
    if (after_active.count(form)) continue;
    std::string reason = to_string(DeletionReason{DeletionKind::not_covered_by_gloss, {}});
    for (const auto& a : after.senses) {
      if (!a.active() && normalize_form(a.written_form) == form) {
        reason = to_string(*a.deleted);
        break;
      }
    }
    emit(ChangeKind::lemma_deleted, s->written_form, reason);
  }

  if (after.gloss && (!before.gloss || normalize_form(before.gloss->text) !=
                                           normalize_form(after.gloss->text))) {
    emit(ChangeKind::gloss_added, after.gloss->text);
  }

  auto known_examples = [&](std::string_view owner_form) {
    std::set<std::string> known;
    if (const Sense* s = before.find_active(owner_form)) {
      for (const auto& ex : s->examples) known.insert(normalize_form(ex.text));
    }
    return known;
  };
  for (const Sense* s : after.active_senses()) {
    auto known = known_examples(s->written_form);
    for (const auto& ex : s->examples) {
      if (!known.count(normalize_form(ex.text))) {
        emit(ChangeKind::example_added, ex.text, s->written_form);
      }
    }
  }

  std::map<std::string, std::set<std::string>> before_phrasets;
  for (const auto& p : before.phrasets) {
    auto& known = before_phrasets[normalize_form(p.text)];
    for (const auto& ex : p.examples) known.insert(normalize_form(ex.text));
  }
  for (const auto& p : after.phrasets) {
    auto it = before_phrasets.find(normalize_form(p.text));
    if (it == before_phrasets.end()) emit(ChangeKind::phraset_added, p.text);
    for (const auto& ex : p.examples) {
      if (it == before_phrasets.end() || !it->second.count(normalize_form(ex.text))) {
        emit(ChangeKind::example_added, ex.text, std::string(kPhrasetOwnerPrefix) + p.text);
      }
    }
  }
  return out;
}

}  // namespace awn
