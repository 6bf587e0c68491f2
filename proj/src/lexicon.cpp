#include "awn/lexicon.hpp"

#include <algorithm>
#include <cstdio>

#include "awn/error.hpp"
#include "awn/unicode.hpp"

namespace awn {

std::string_view to_string(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::noun: return "noun";
    case PartOfSpeech::verb: return "verb";
    case PartOfSpeech::adjective: return "adjective";
    case PartOfSpeech::adverb: return "adverb";
  }
  return "noun";
}

char pos_letter(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::noun: return 'n';
    case PartOfSpeech::verb: return 'v';
    case PartOfSpeech::adjective: return 'a';
    case PartOfSpeech::adverb: return 'r';
  }
  return 'n';
}

std::optional<PartOfSpeech> try_parse_pos(std::string_view text) {
  std::string t = trim(text);
  if (t == "noun" || t == "n") return PartOfSpeech::noun;
  if (t == "verb" || t == "v") return PartOfSpeech::verb;
  if (t == "adjective" || t == "a" || t == "adj" || t == "s") return PartOfSpeech::adjective;
  if (t == "adverb" || t == "r" || t == "adv") return PartOfSpeech::adverb;
  return std::nullopt;
}

PartOfSpeech parse_pos(std::string_view text) {
  if (auto pos = try_parse_pos(text)) return *pos;
  throw Error(ErrorCode::bad_pos, "not a part of speech: '" + std::string(text) + "'", "pos");
}

SynsetId make_synset_id(std::string_view lexicon_tag, PartOfSpeech pos, std::size_t serial) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%08zu", serial);
  return SynsetId(std::string(lexicon_tag) + ":" + pos_letter(pos) + ":" + buf);
}

std::string_view to_string(Provenance p) {
  return p == Provenance::added ? "added" : "imported-v1";
}

Provenance parse_provenance(std::string_view text) {
  if (text == "added") return Provenance::added;
  if (text == "imported-v1") return Provenance::imported_v1;
  throw Error(ErrorCode::malformed_cell, "unknown provenance: " + std::string(text));
}

namespace {

constexpr std::pair<DeletionKind, std::string_view> kReasonNames[] = {
    {DeletionKind::not_covered_by_gloss, "not-covered-by-gloss"},
    {DeletionKind::wrong_word_form, "wrong-word-form"},
    {DeletionKind::duplicate, "duplicate"},
    {DeletionKind::specialization_polysemy, "specialization-polysemy"},
    {DeletionKind::compound_noun_polysemy, "compound-noun-polysemy"},
    {DeletionKind::other, "other"},
};

}  // namespace

std::string to_string(const DeletionReason& reason) {
  for (const auto& [kind, name] : kReasonNames) {
    if (kind == reason.kind) {
      if (kind == DeletionKind::other) return "other:" + reason.comment;
      return std::string(name);
    }
  }
  return "other:" + reason.comment;
}

DeletionReason parse_deletion_reason(std::string_view text) {
  std::string t = trim(text);
  if (t.rfind("other", 0) == 0) {
    std::string comment = t.size() > 5 && t[5] == ':' ? trim(t.substr(6)) : std::string{};
    return {DeletionKind::other, comment};
  }
  for (const auto& [kind, name] : kReasonNames) {
    if (name == t) return {kind, {}};
  }
  throw Error(ErrorCode::malformed_cell, "unknown deletion reason: '" + t + "'");
}

std::string_view to_string(LexicalizationStatus s) {
  switch (s) {
    case LexicalizationStatus::lexicalized: return "lexicalized";
    case LexicalizationStatus::gap: return "gap";
    case LexicalizationStatus::pending: return "pending";
  }
  return "pending";
}

LexicalizationStatus parse_status(std::string_view text) {
  if (text == "lexicalized") return LexicalizationStatus::lexicalized;
  if (text == "gap") return LexicalizationStatus::gap;
  if (text == "pending") return LexicalizationStatus::pending;
  throw Error(ErrorCode::malformed_cell, "unknown lexicalization status: " + std::string(text));
}

std::string_view to_string(CrossStatus s) {
  switch (s) {
    case CrossStatus::lexicalized: return "lexicalized";
    case CrossStatus::gap: return "gap";
    case CrossStatus::unprocessed: return "unprocessed";
  }
  return "unprocessed";
}

std::size_t Synset::active_sense_count() const {
  return static_cast<std::size_t>(
      std::count_if(senses.begin(), senses.end(), [](const Sense& s) { return s.active(); }));
}

std::vector<const Sense*> Synset::active_senses() const {
  std::vector<const Sense*> out;
  for (const auto& s : senses) {
    if (s.active()) out.push_back(&s);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Sense* a, const Sense* b) { return a->rank < b->rank; });
  return out;
}

const Sense* Synset::find_active(std::string_view form) const {
  std::string key = normalize_form(form);
  for (const auto& s : senses) {
    if (s.active() && normalize_form(s.written_form) == key) return &s;
  }
  return nullptr;
}

std::vector<Violation> check_synset(const Synset& synset) {
  std::vector<Violation> out;
  auto fail = [&](std::string invariant, std::string message) {
    out.push_back({std::move(invariant), std::move(message)});
  };

  if (synset.id.empty()) fail("id-nonempty", "synset id is empty");
  if (synset.gloss && trim(synset.gloss->text).empty()) {
    fail("gloss-nonempty", "gloss is empty after trimming");
  }

  std::set<std::string> seen;
  int expected_rank = 1;
  std::size_t active = 0;
  for (const auto& sense : synset.senses) {
    std::string form = normalize_form(sense.written_form);
    if (form.empty()) fail("sense-form-nonempty", "sense with empty written form");
    for (const auto& ex : sense.examples) {
      if (trim(ex.text).empty()) fail("example-nonempty", "empty example on '" + form + "'");
    }
    if (!sense.active()) continue;
    ++active;
    if (sense.rank != expected_rank) {
      fail("rank-contiguous", "active sense '" + form + "' has rank " +
                                  std::to_string(sense.rank) + ", expected " +
                                  std::to_string(expected_rank));
    }
    ++expected_rank;
    if (!form.empty() && !seen.insert(form).second) {
      fail("duplicate-form", "duplicate active written form '" + form + "'");
    }
  }

  for (const auto& phraset : synset.phrasets) {
    std::string text = normalize_form(phraset.text);
    if (text.find(' ') == std::string::npos) {
      fail("phraset-multiword", "phraset '" + text + "' is not a combination of words");
    }
    for (const auto& ex : phraset.examples) {
      if (trim(ex.text).empty()) fail("example-nonempty", "empty example on phraset '" + text + "'");
    }
  }

  if (synset.status == LexicalizationStatus::gap) {
    if (active != 0) fail("gap-no-senses", "gap synset has active senses");
    if (synset.phrasets.empty()) fail("gap-has-phraset", "gap synset has no phraset");
  }

  if (synset.approved) {
    if (synset.status == LexicalizationStatus::pending) {
      fail("approved-not-pending", "approved synset is still pending");
    }
    if (synset.status == LexicalizationStatus::lexicalized) {
      if (active == 0) fail("approved-has-sense", "approved lexicalized synset has no sense");
      if (!synset.gloss) fail("approved-has-gloss", "approved lexicalized synset has no gloss");
      for (const auto& sense : synset.senses) {
        if (sense.active() && sense.examples.empty()) {
          fail("approved-sense-exampled", "sense '" + sense.written_form + "' has no example");
        }
      }
    }
  }
  return out;
}

void require_valid(const Synset& synset) {
  auto violations = check_synset(synset);
  if (!violations.empty()) {
    throw Error(ErrorCode::invariant_violation,
                violations.front().invariant + ": " + violations.front().message,
                synset.id.value);
  }
}

std::vector<std::string> diacritic_duplicate_warnings(const Synset& synset) {
  std::vector<std::string> out;
  std::map<std::string, std::string> by_skeleton;
  for (const auto* sense : synset.active_senses()) {
    std::string canonical = normalize_form(sense->written_form);
    auto [it, inserted] = by_skeleton.emplace(skeleton_form(canonical), canonical);
    if (!inserted && it->second != canonical) {
      out.push_back("'" + it->second + "' and '" + canonical + "' differ only in diacritics");
    }
  }
  return out;
}

void compact_ranks(Synset& synset) {
  std::stable_partition(synset.senses.begin(), synset.senses.end(),
                        [](const Sense& s) { return s.active(); });
  auto active_end = std::find_if(synset.senses.begin(), synset.senses.end(),
                                 [](const Sense& s) { return !s.active(); });
  std::stable_sort(synset.senses.begin(), active_end,
                   [](const Sense& a, const Sense& b) { return a.rank < b.rank; });
  int rank = 1;
  for (auto it = synset.senses.begin(); it != active_end; ++it) it->rank = rank++;
}

Lexicon::Lexicon(std::string language, std::string tag)
    : language_(std::move(language)), tag_(std::move(tag)) {}

SynsetId Lexicon::add(Synset synset) {
  if (contains(synset.id)) {
    throw Error(ErrorCode::duplicate_id, "synset id already present: " + synset.id.value,
                synset.id.value);
  }
  require_valid(synset);
  SynsetId id = synset.id;
  index_synset(synset);
  synsets_.emplace(id, std::move(synset));
  return id;
}

void Lexicon::put(Synset synset) {
  require_valid(synset);
  auto it = synsets_.find(synset.id);
  if (it != synsets_.end()) {
    unindex_synset(it->second);
    index_synset(synset);
    it->second = std::move(synset);
    return;
  }
  index_synset(synset);
  SynsetId id = synset.id;
  synsets_.emplace(id, std::move(synset));
}

const Synset* Lexicon::find(const SynsetId& id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

const Synset& Lexicon::at(const SynsetId& id) const {
  if (const Synset* s = find(id)) return *s;
  throw Error(ErrorCode::unknown_synset, "no synset " + id.value, id.value);
}

std::vector<const Synset*> Lexicon::lookup(std::string_view form,
                                           std::optional<PartOfSpeech> pos) const {
  std::vector<const Synset*> out;
  auto it = index_.find(normalize_form(form));
  if (it == index_.end()) return out;
  for (const auto& id : it->second) {
    const Synset& s = synsets_.at(id);
    if (!pos || s.pos == *pos) out.push_back(&s);
  }
  return out;
}

std::vector<const Synset*> Lexicon::aligned_to(const SynsetId& pivot_id) const {
  std::vector<const Synset*> out;
  auto it = alignment_.find(pivot_id);
  if (it == alignment_.end()) return out;
  for (const auto& id : it->second) out.push_back(&synsets_.at(id));
  return out;
}

const Synset& Lexicon::delete_sense(const SynsetId& id, int rank, DeletionReason reason,
                                    std::optional<LexicalizationStatus> new_status) {
  auto it = synsets_.find(id);
  if (it == synsets_.end()) throw Error(ErrorCode::unknown_synset, "no synset " + id.value, id.value);

  Synset updated = it->second;
  auto target = std::find_if(updated.senses.begin(), updated.senses.end(),
                             [&](const Sense& s) { return s.rank == rank; });
  auto active_target = std::find_if(updated.senses.begin(), updated.senses.end(),
                                    [&](const Sense& s) { return s.active() && s.rank == rank; });
  if (active_target == updated.senses.end()) {
    if (target != updated.senses.end()) {
      throw Error(ErrorCode::already_deleted,
                  "sense at rank " + std::to_string(rank) + " is already deleted", id.value);
    }
    throw Error(ErrorCode::unknown_rank, "no sense at rank " + std::to_string(rank), id.value);
  }
  active_target->deleted = std::move(reason);
  compact_ranks(updated);
  if (new_status) updated.status = *new_status;
  require_valid(updated);

  unindex_synset(it->second);
  index_synset(updated);
  it->second = std::move(updated);
  return it->second;
}

ReverseIndex Lexicon::rebuild_index() const {
  ReverseIndex index;
  for (const auto& [id, synset] : synsets_) {
    for (const auto& sense : synset.senses) {
      if (sense.active()) index[normalize_form(sense.written_form)].insert(id);
    }
  }
  return index;
}

void Lexicon::index_synset(const Synset& synset) {
  for (const auto& sense : synset.senses) {
    if (sense.active()) index_[normalize_form(sense.written_form)].insert(synset.id);
  }
  if (synset.pivot) alignment_[*synset.pivot].insert(synset.id);
}

void Lexicon::unindex_synset(const Synset& synset) {
  for (const auto& sense : synset.senses) {
    if (!sense.active()) continue;
    auto it = index_.find(normalize_form(sense.written_form));
    if (it == index_.end()) continue;
    it->second.erase(synset.id);
    if (it->second.empty()) index_.erase(it);
  }
  if (synset.pivot) {
    auto it = alignment_.find(*synset.pivot);
    if (it != alignment_.end()) {
      it->second.erase(synset.id);
      if (it->second.empty()) alignment_.erase(it);
    }
  }
}

std::vector<CrossLingualHit> cross_lingual_lookup(const Lexicon& target, const Lexicon& pivot,
                                                  std::string_view form,
                                                  std::optional<PartOfSpeech> pos) {
  std::vector<CrossLingualHit> hits;
  for (const Synset* pivot_synset : pivot.lookup(form, pos)) {
    auto aligned = target.aligned_to(pivot_synset->id);
    if (aligned.empty()) {
      hits.push_back({pivot_synset->id, std::nullopt, CrossStatus::unprocessed, {}, {}});
      continue;
    }
    for (const Synset* t : aligned) {
      CrossLingualHit hit{pivot_synset->id, t->id, CrossStatus::unprocessed, {}, {}};
      switch (t->status) {
        case LexicalizationStatus::lexicalized: hit.status = CrossStatus::lexicalized; break;
        case LexicalizationStatus::gap: hit.status = CrossStatus::gap; break;
        case LexicalizationStatus::pending: hit.status = CrossStatus::unprocessed; break;
      }
      if (hit.status != CrossStatus::unprocessed) {
        for (const Sense* s : t->active_senses()) hit.lemmas.push_back(s->written_form);
        for (const auto& p : t->phrasets) hit.phrasets.push_back(p.text);
      }
      hits.push_back(std::move(hit));
    }
  }
  return hits;
}

}  // namespace awn
