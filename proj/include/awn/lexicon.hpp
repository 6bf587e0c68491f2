#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace awn {

enum class PartOfSpeech { noun, verb, adjective, adverb };

inline constexpr PartOfSpeech kAllPos[] = {PartOfSpeech::noun, PartOfSpeech::verb,
                                           PartOfSpeech::adjective, PartOfSpeech::adverb};

std::string_view to_string(PartOfSpeech pos);
char pos_letter(PartOfSpeech pos);
// Accepts the full name or the single letter (n, v, a, r); throws bad-pos.
PartOfSpeech parse_pos(std::string_view text);
std::optional<PartOfSpeech> try_parse_pos(std::string_view text);

// Opaque identifier; generated ids follow "<lexicon-tag>:<pos-letter>:<serial>".
struct SynsetId {
  std::string value;

  SynsetId() = default;
  explicit SynsetId(std::string v) : value(std::move(v)) {}

  bool empty() const { return value.empty(); }
  auto operator<=>(const SynsetId&) const = default;
};

SynsetId make_synset_id(std::string_view lexicon_tag, PartOfSpeech pos, std::size_t serial);

enum class Provenance { imported_v1, added };
std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

struct Gloss {
  std::string text;
  std::string language;
  Provenance provenance = Provenance::added;

  bool operator==(const Gloss&) const = default;
};

struct Example {
  std::string text;
  std::string language;
  Provenance provenance = Provenance::added;

  bool operator==(const Example&) const = default;
};

enum class DeletionKind {
  not_covered_by_gloss,
  wrong_word_form,
  duplicate,
  specialization_polysemy,
  compound_noun_polysemy,
  other,
};

struct DeletionReason {
  DeletionKind kind = DeletionKind::not_covered_by_gloss;
  std::string comment;  // only meaningful for `other`

  bool operator==(const DeletionReason&) const = default;
};

// "other:<comment>" for DeletionKind::other, the plain kebab name otherwise.
std::string to_string(const DeletionReason& reason);
DeletionReason parse_deletion_reason(std::string_view text);

struct Sense {
  std::string written_form;
  int rank = 1;  // 1 = preferred term among active senses
  std::vector<Example> examples;
  Provenance provenance = Provenance::imported_v1;
  std::optional<DeletionReason> deleted;  // set = inactive

  bool active() const { return !deleted.has_value(); }
  bool operator==(const Sense&) const = default;
};

struct Phraset {
  std::string text;
  std::string language;
  std::vector<Example> examples;
  Provenance provenance = Provenance::added;

  bool operator==(const Phraset&) const = default;
};

enum class LexicalizationStatus { lexicalized, gap, pending };
std::string_view to_string(LexicalizationStatus s);
LexicalizationStatus parse_status(std::string_view text);

struct Synset {
  SynsetId id;
  PartOfSpeech pos = PartOfSpeech::noun;
  std::optional<SynsetId> pivot;
  LexicalizationStatus status = LexicalizationStatus::pending;
  bool approved = false;  // committed through the two-phase review
  std::optional<Gloss> gloss;
  // Active senses first in rank order, then deleted senses in deletion order.
  std::vector<Sense> senses;
  std::vector<Phraset> phrasets;

  std::size_t active_sense_count() const;
  std::vector<const Sense*> active_senses() const;
  // Active sense whose normalized form equals normalize_form(form).
  const Sense* find_active(std::string_view form) const;

  bool operator==(const Synset&) const = default;
};

struct Violation {
  std::string invariant;  // short machine name, e.g. "gap-has-phraset"
  std::string message;
};

// Structural invariants always; the approved-level ones (≥1 active sense,
// gloss present, every active sense exampled) when synset.approved is set.
std::vector<Violation> check_synset(const Synset& synset);

// Throws invariant-violation naming the first violated invariant.
void require_valid(const Synset& synset);

// Active forms whose skeletons coincide while canonical forms differ.
std::vector<std::string> diacritic_duplicate_warnings(const Synset& synset);

// Puts active senses first, ordered by their current rank, then assigns
// ranks 1..n. Deleted senses keep their last rank for reference.
void compact_ranks(Synset& synset);

using ReverseIndex = std::map<std::string, std::set<SynsetId>>;

class Lexicon {
public:
  explicit Lexicon(std::string language = "ar", std::string tag = {});

  const std::string& language() const { return language_; }
  const std::string& tag() const { return tag_; }

  // Rejects duplicate ids and invariant violations.
  SynsetId add(Synset synset);
  // Insert-or-replace with the same validation as add.
  void put(Synset synset);

  bool contains(const SynsetId& id) const { return synsets_.count(id) != 0; }
  const Synset* find(const SynsetId& id) const;
  const Synset& at(const SynsetId& id) const;

  // Synsets with an active sense whose normalized form matches; ordered by id.
  std::vector<const Synset*> lookup(std::string_view form,
                                    std::optional<PartOfSpeech> pos = std::nullopt) const;

  // Synsets whose pivot reference equals pivot_id; ordered by id.
  std::vector<const Synset*> aligned_to(const SynsetId& pivot_id) const;

  // Marks the active sense at `rank` deleted and re-compacts the remaining
  // ranks. When new_status is given the status changes in the same step,
  // which is how the last sense of an approved synset can be removed.
  const Synset& delete_sense(const SynsetId& id, int rank, DeletionReason reason,
                             std::optional<LexicalizationStatus> new_status = std::nullopt);

  const std::map<SynsetId, Synset>& synsets() const { return synsets_; }
  std::size_t size() const { return synsets_.size(); }
  bool empty() const { return synsets_.empty(); }

  const ReverseIndex& index() const { return index_; }
  ReverseIndex rebuild_index() const;

  bool operator==(const Lexicon& other) const {
    return language_ == other.language_ && tag_ == other.tag_ && synsets_ == other.synsets_;
  }

private:
  void index_synset(const Synset& synset);
  void unindex_synset(const Synset& synset);

  std::string language_;
  std::string tag_;
  std::map<SynsetId, Synset> synsets_;
  ReverseIndex index_;
  std::map<SynsetId, std::set<SynsetId>> alignment_;
};

enum class CrossStatus { lexicalized, gap, unprocessed };
std::string_view to_string(CrossStatus s);

struct CrossLingualHit {
  SynsetId pivot_id;
  std::optional<SynsetId> target_id;
  CrossStatus status = CrossStatus::unprocessed;
  std::vector<std::string> lemmas;    // rank order, preferred term first
  std::vector<std::string> phrasets;  // gap expressions or clarifying phrases
};

// Looks `form` up in the pivot lexicon and reports, for each pivot synset,
// what the target lexicon holds: lemmas, a gap with phrasets, or nothing yet.
std::vector<CrossLingualHit> cross_lingual_lookup(const Lexicon& target, const Lexicon& pivot,
                                                  std::string_view form,
                                                  std::optional<PartOfSpeech> pos = std::nullopt);

}  // namespace awn
