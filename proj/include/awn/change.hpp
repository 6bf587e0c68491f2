#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "awn/lexicon.hpp"
#include "awn/serialize.hpp"

namespace awn {

// One added or deleted synset component. These are what the contribution
// tables count.
enum class ChangeKind { lemma_added, lemma_deleted, gloss_added, example_added, gap_marked, phraset_added };

inline constexpr ChangeKind kAllChangeKinds[] = {
    ChangeKind::lemma_added,   ChangeKind::lemma_deleted, ChangeKind::gloss_added,
    ChangeKind::example_added, ChangeKind::gap_marked,    ChangeKind::phraset_added};

std::string_view to_string(ChangeKind kind);
ChangeKind parse_change_kind(std::string_view text);

struct Change {
  ChangeKind kind = ChangeKind::lemma_added;
  SynsetId synset;
  PartOfSpeech pos = PartOfSpeech::noun;
  std::string value;   // lemma form, gloss text, example text, phraset text; empty for gaps
  std::string detail;  // deletion reason, or owner of an example ("phraset:" prefix for phrasets)

  bool operator==(const Change&) const = default;
};

ordered_json to_json(const Change& change);
Change change_from_json(const nlohmann::json& j);

// Component-level difference between the synset a task started from and the
// draft a translator produced.
std::vector<Change> diff_synsets(const Synset& before, const Synset& after);

inline constexpr std::string_view kPhrasetOwnerPrefix = "phraset:";

}  // namespace awn
