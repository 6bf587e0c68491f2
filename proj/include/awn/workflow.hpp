#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "awn/change.hpp"
#include "awn/ingest.hpp"
#include "awn/lexicon.hpp"

namespace awn::workflow {

enum class Role { translator, expert };
std::string_view to_string(Role role);
Role parse_role(std::string_view text);

struct Actor {
  std::string id;
  Role role = Role::translator;

  bool operator==(const Actor&) const = default;
};

class Roster {
public:
  Roster() = default;
  explicit Roster(std::vector<Actor> actors);

  void add(Actor actor);
  const Actor* find(std::string_view id) const;
  const Actor& at(std::string_view id) const;  // throws unknown-actor
  std::vector<Actor> with_role(Role role) const;
  const std::vector<Actor>& actors() const { return actors_; }

private:
  std::vector<Actor> actors_;
};

// ---------------------------------------------------------------------------
// Contributions

struct SenseDraft {
  std::string form;
  std::vector<std::string> examples;

  bool operator==(const SenseDraft&) const = default;
};

struct PhrasetDraft {
  std::string text;
  std::vector<std::string> examples;

  bool operator==(const PhrasetDraft&) const = default;
};

struct LemmaDeletion {
  std::string form;
  DeletionReason reason;

  bool operator==(const LemmaDeletion&) const = default;
};

// The pivot meaning has no lexical equivalent; phrasets express it instead.
struct MarkGap {
  std::vector<PhrasetDraft> phrasets;
  std::string comment;
  std::optional<std::string> gloss;

  bool operator==(const MarkGap&) const = default;
};

// A translated synset. The translator works through the English lemmas (n of
// them), collects Arabic synonym sets for each (m <= n non-empty ones), drops
// synonyms the gloss does not cover, and orders what remains with the
// preferred term first. Only that final ordered list is stored; the draft
// replaces the V1 synset, and V1 lemmas it leaves out are deleted.
struct Translate {
  std::string gloss;
  std::vector<SenseDraft> senses;
  std::vector<PhrasetDraft> phrasets;

  bool operator==(const Translate&) const = default;
};

// A translation merged into the V1 synset instead of replacing it: listed
// lemmas are copied across, listed V1 lemmas are removed, and the gloss and
// examples are copied only where V1 lacks them.
struct MergeV1 {
  Translate translation;
  std::vector<std::string> add_lemmas;
  std::vector<LemmaDeletion> delete_lemmas;
  bool copy_gloss = true;
  bool copy_examples = true;

  bool operator==(const MergeV1&) const = default;
};

struct Skip {
  std::string comment;

  bool operator==(const Skip&) const = default;
};

using Contribution = std::variant<MarkGap, Translate, MergeV1, Skip>;

std::string_view contribution_type(const Contribution& c);

// Throws invariant-violation on contribution-level rules (MarkGap without a
// phraset, a Translate sense without an example, an empty Skip comment).
void validate_contribution(const Contribution& c);

// Draft target synset for `base` (the V1 synset). `carried_phrasets` are kept
// when a former gap is translated. Throws invariant-violation if the draft
// would not be committable. Not meaningful for Skip.
Synset build_draft(const Synset& base, const Contribution& c, std::string_view language,
                   const std::vector<Phraset>& carried_phrasets = {});

// ---------------------------------------------------------------------------
// Task states

enum class StateKind {
  generated,
  in_translation,
  submitted,
  peer_review,
  changes_requested,
  peer_accepted,
  expert_review,
  approved,
  expert_rejected,
  skipped,
};

inline constexpr StateKind kAllStateKinds[] = {
    StateKind::generated,     StateKind::in_translation, StateKind::submitted,
    StateKind::peer_review,   StateKind::changes_requested, StateKind::peer_accepted,
    StateKind::expert_review, StateKind::approved,       StateKind::expert_rejected,
    StateKind::skipped};

std::string_view to_string(StateKind kind);
StateKind parse_state_kind(std::string_view text);

struct TaskState {
  StateKind kind = StateKind::generated;
  std::string actor;    // translator holding the task, reviewer, or author it returns to
  std::string comment;  // reviewer comment or skip reason

  bool operator==(const TaskState&) const = default;
};

bool is_legal_edge(StateKind from, StateKind to);
bool is_terminal(StateKind kind);

// ---------------------------------------------------------------------------
// Reviews

enum class Verdict { accept, reject };
enum class ReviewPhase { peer, expert };
enum class Criterion { gap, gloss, lemmas, examples };

std::string_view to_string(Criterion c);

struct Checklist {
  bool gap = true;
  bool gloss = true;
  bool lemmas = true;
  bool examples = true;

  bool passes(Criterion c) const;
  bool all_pass() const { return gap && gloss && lemmas && examples; }
  bool operator==(const Checklist&) const = default;
};

struct ReviewDecision {
  Verdict verdict = Verdict::accept;
  Checklist checklist;
  std::string comment;
  // Expert counter-evidence against a gap claim: existing lexicalizations.
  std::vector<std::string> counter_lemmas;
  // Indices into the submission's change list judged wrong. When empty on a
  // reject, every change under a failed criterion counts as wrong.
  std::vector<std::size_t> rejected_items;

  bool operator==(const ReviewDecision&) const = default;
};

// reject => comment and >= 1 failed criterion; accept => all criteria pass.
void validate_decision(const ReviewDecision& d);

// Criterion under which a change of this kind is judged.
Criterion criterion_for(ChangeKind kind);

// True if the decision judges change `index` (of kind `kind`) wrong.
bool judged_wrong(const ReviewDecision& d, std::size_t index, ChangeKind kind);

// ---------------------------------------------------------------------------
// Audit events

struct TaskCreated {
  Synset pivot;
  Synset v1;

  bool operator==(const TaskCreated&) const = default;
};

struct ContributionSubmitted {
  Contribution contribution;
  std::vector<Change> changes;

  bool operator==(const ContributionSubmitted&) const = default;
};

struct ReviewRecorded {
  ReviewPhase phase = ReviewPhase::peer;
  ReviewDecision decision;

  bool operator==(const ReviewRecorded&) const = default;
};

struct StateChanged {
  TaskState from;
  TaskState to;

  bool operator==(const StateChanged&) const = default;
};

enum class ChangeSource { workflow, import };

struct ChangeCommitted {
  Change change;
  ChangeSource source = ChangeSource::workflow;

  bool operator==(const ChangeCommitted&) const = default;
};

using EventPayload =
    std::variant<TaskCreated, ContributionSubmitted, ReviewRecorded, StateChanged, ChangeCommitted>;

struct AuditEvent {
  std::uint64_t seq = 0;
  std::string timestamp;
  std::string actor;
  std::string task;  // empty for project-level events
  EventPayload payload;

  bool operator==(const AuditEvent&) const = default;
};

std::string_view event_type(const EventPayload& payload);

ordered_json to_json(const Contribution& c);
Contribution contribution_from_json(const nlohmann::json& j);
ordered_json to_json(const ReviewDecision& d);
ReviewDecision decision_from_json(const nlohmann::json& j);
ordered_json to_json(const TaskState& s);
TaskState state_from_json(const nlohmann::json& j);
ordered_json to_json(const AuditEvent& e);
AuditEvent event_from_json(const nlohmann::json& j);

// One event per line, canonical field order, '\n'-terminated.
std::string to_line(const AuditEvent& e);
std::string serialize_log(std::span<const AuditEvent> events);
// Throws storage-corruption on unparsable lines.
std::vector<AuditEvent> parse_log(std::string_view text);

// ---------------------------------------------------------------------------
// Tasks and the engine

struct Task {
  std::string id;  // the V1 synset id
  PartOfSpeech pos = PartOfSpeech::noun;
  Synset pivot;
  Synset v1;
  TaskState state;
  std::uint64_t version = 0;  // number of events recorded against the task
  std::string author;         // translator of the current submission
  std::optional<Contribution> contribution;
  std::optional<Synset> draft;
  std::vector<Change> changes;
  std::string last_comment;
  std::vector<std::string> counter_lemmas;
  std::optional<ReviewDecision> last_peer_decision;
  std::optional<ReviewDecision> last_expert_decision;

  bool operator==(const Task&) const = default;
};

ordered_json to_json(const Task& t);

struct GeneratedTasks {
  std::vector<TaskCreated> tasks;  // grouped by POS, then ordered by id
  std::vector<std::string> unresolved;
  std::size_t excluded = 0;
};

// One task per V1 synset whose pivot reference resolves (with matching POS)
// and which the named-entity filter does not exclude. The filter is matched
// against both the V1 id and the pivot id.
GeneratedTasks generate_tasks(const Lexicon& pivot, const Lexicon& v1,
                              const ingest::NamedEntityFilter& filter);

using Clock = std::function<std::string()>;
Clock system_clock();
// Deterministic timestamps: 1970-01-01T00:00:01Z, ...:02Z, ... The first
// call returns second start + 1.
Clock logical_clock(std::uint64_t start = 0);

// The reconstructible part of the engine. Events are applied one at a time,
// each one checked against the current state.
class State {
public:
  explicit State(std::string language = "ar", Lexicon target = Lexicon());

  void apply(const AuditEvent& event);

  const std::map<std::string, Task>& tasks() const { return tasks_; }
  const Lexicon& target() const { return target_; }
  std::uint64_t last_seq() const { return last_seq_; }
  const std::string& language() const { return language_; }

  bool operator==(const State& other) const {
    return tasks_ == other.tasks_ && target_ == other.target_ && last_seq_ == other.last_seq_;
  }

private:
  std::string language_;
  std::map<std::string, Task> tasks_;
  Lexicon target_;
  std::uint64_t last_seq_ = 0;
};

// Replays a log from scratch (or from a base target lexicon). Throws
// gap-in-sequence or illegal-transition-in-log.
State replay_audit_log(std::span<const AuditEvent> events, std::string language = "ar",
                       Lexicon base = Lexicon());

inline constexpr std::string_view kSystemActor = "system";

// Single-writer command processor. Every mutating command names the task
// version it observed and fails with stale-version if the task has moved on.
class Engine {
public:
  Engine(Roster roster, std::string language = "ar", Clock clock = system_clock(),
         Lexicon base_target = Lexicon());
  // Resume from an existing log.
  Engine(Roster roster, std::vector<AuditEvent> log, std::string language, Clock clock,
         Lexicon base_target = Lexicon());

  void create_tasks(const std::vector<TaskCreated>& tasks);
  void import_changes(const std::vector<Change>& changes);

  TaskState claim(const std::string& task, const std::string& actor, std::uint64_t observed_version);
  TaskState submit(const std::string& task, const std::string& actor, const Contribution& c,
                   std::uint64_t observed_version);
  // Moves a Submitted task to the translator (other than the author) with the
  // fewest tasks currently in peer review; ties go to the smaller id.
  TaskState assign_peer_reviewer(const std::string& task, std::uint64_t observed_version);
  TaskState peer_review(const std::string& task, const std::string& reviewer,
                        const ReviewDecision& d, std::uint64_t observed_version);
  TaskState expert_review(const std::string& task, const std::string& expert,
                          const ReviewDecision& d, std::uint64_t observed_version);

  const Task& task(const std::string& id) const;
  const std::map<std::string, Task>& tasks() const { return state_.tasks(); }
  const Lexicon& target() const { return state_.target(); }
  const State& state() const { return state_; }
  const std::vector<AuditEvent>& log() const { return log_; }
  const Roster& roster() const { return roster_; }

  // Tasks on which `actor` currently has at least one legal action.
  std::vector<const Task*> actionable_for(const std::string& actor) const;
  bool can_act(const Task& t, const Actor& actor) const;

private:
  // Existing task at the observed version (unknown-task / stale-version).
  const Task& checked_task(const std::string& id, std::uint64_t observed_version) const;
  void record(const std::string& actor, const std::string& task, std::vector<EventPayload> payloads);
  const Actor& require_role(const std::string& actor, Role role) const;

  Roster roster_;
  Clock clock_;
  State state_;
  std::vector<AuditEvent> log_;
};

}  // namespace awn::workflow
