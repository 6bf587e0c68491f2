#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "awn/lexicon.hpp"
#include "awn/serialize.hpp"
#include "awn/workflow.hpp"

namespace awn::metrics {

// approved_only: committed changes (workflow approvals and imported result
// sheets). all: additionally every submitted change, whatever its fate.
enum class Scope { approved_only, all };
std::string_view to_string(Scope scope);
Scope parse_scope(std::string_view text);  // throws bad-request

// Which changes make a synset "updated". The default counts lemma additions,
// lemma deletions and gap marks; any_component also counts glosses, examples
// and phrasets.
enum class UpdatedRule { lemma_or_gap, any_component };
std::string_view to_string(UpdatedRule rule);
UpdatedRule parse_updated_rule(std::string_view text);

bool counts_as_update(ChangeKind kind, UpdatedRule rule);

struct StatsRow {
  std::size_t updated_synsets = 0;
  std::size_t new_lemmas = 0;
  std::size_t deleted_lemmas = 0;
  std::size_t new_glosses = 0;
  std::size_t new_examples = 0;
  std::size_t gaps = 0;
  std::size_t phrasets = 0;

  StatsRow& operator+=(const StatsRow& o);
  bool operator==(const StatsRow&) const = default;
};

struct ContributionStats {
  std::array<StatsRow, 4> per_pos{};  // indexed like kAllPos
  StatsRow total;

  const StatsRow& of(PartOfSpeech pos) const { return per_pos[static_cast<std::size_t>(pos)]; }
  bool operator==(const ContributionStats&) const = default;
};

// Throws illegal-log unless sequence numbers run 1, 2, 3, ...
ContributionStats compute_contribution_stats(std::span<const workflow::AuditEvent> log,
                                             Scope scope = Scope::approved_only,
                                             UpdatedRule rule = UpdatedRule::lemma_or_gap);

struct Ratio {
  std::size_t correct = 0;
  std::size_t total = 0;

  std::optional<double> value() const {
    if (total == 0) return std::nullopt;
    return static_cast<double>(correct) / static_cast<double>(total);
  }
  bool operator==(const Ratio&) const = default;
};

// Every expert decision judges the changes of the submission it reviewed.
// A rejected attempt stays in the denominator even if a later revision is
// approved. Submissions withdrawn by a peer rejection before reaching the
// expert are not judged and are counted as superseded; submissions still
// awaiting an expert decision are counted as undecided.
struct CorrectnessReport {
  std::array<Ratio, 6> per_kind{};  // indexed like kAllChangeKinds
  Ratio overall;                    // pooled: sums of the category counts
  std::size_t undecided = 0;
  std::size_t superseded = 0;

  const Ratio& of(ChangeKind kind) const { return per_kind[static_cast<std::size_t>(kind)]; }
  // Unweighted mean of the defined category ratios.
  std::optional<double> macro_average() const;
  bool operator==(const CorrectnessReport&) const = default;
};

CorrectnessReport compute_correctness(std::span<const workflow::AuditEvent> log);

enum class FindingKind { missing_gloss, sense_without_example, gap_without_phraset, empty_lexicalized };
std::string_view to_string(FindingKind kind);

struct Finding {
  FindingKind kind = FindingKind::missing_gloss;
  SynsetId synset;
  PartOfSpeech pos = PartOfSpeech::noun;
  std::string locator;  // "<synset id>" or "<synset id>#<rank>"
  std::string message;

  bool operator==(const Finding&) const = default;
};

// Pending synsets are not audited: they have not been worked on yet.
std::vector<Finding> completeness_audit(const Lexicon& lexicon);

struct PolysemyCandidate {
  std::string form;
  std::size_t degree = 0;
  std::vector<SynsetId> synsets;
  std::optional<std::string> tag;  // "compound-noun"

  bool operator==(const PolysemyCandidate&) const = default;
};

struct PolysemyReport {
  std::size_t threshold = 2;
  std::map<std::string, std::size_t> histogram;  // normalized form -> synset count
  std::vector<PolysemyCandidate> candidates;     // degree descending, then form

  std::size_t pair_count() const;
};

// Throws bad-request when k < 2.
PolysemyReport polysemy_report(const Lexicon& lexicon, std::size_t k);

// Synsets and imported words per POS, as found in the input dataset.
struct InputRow {
  std::size_t synsets = 0;
  std::size_t words = 0;

  bool operator==(const InputRow&) const = default;
};

struct InputStats {
  std::array<InputRow, 4> per_pos{};
  InputRow total;

  const InputRow& of(PartOfSpeech pos) const { return per_pos[static_cast<std::size_t>(pos)]; }
  bool operator==(const InputStats&) const = default;
};

// words = senses with imported provenance, active or deleted.
InputStats compute_input_stats(const Lexicon& lexicon);

// ---------------------------------------------------------------------------
// Output

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table contribution_table(const ContributionStats& stats);
Table input_table(const InputStats& stats);
Table correctness_table(const CorrectnessReport& report);
Table findings_table(const std::vector<Finding>& findings);

// Cells that are plain integers get thousands separators in the text form.
std::string render_tsv(const Table& table);
std::string render_text(const Table& table);
std::string with_thousands(std::size_t n);
// "97.00%"; "-" when undefined.
std::string percent(std::optional<double> ratio);

ordered_json to_json(const StatsRow& row);
ordered_json to_json(const ContributionStats& stats);
ordered_json to_json(const CorrectnessReport& report);
ordered_json to_json(const Finding& finding);
ordered_json to_json(const std::vector<Finding>& findings);
ordered_json to_json(const PolysemyReport& report);
ordered_json to_json(const InputStats& stats);

}  // namespace awn::metrics
