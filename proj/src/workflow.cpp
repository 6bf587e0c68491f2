#include "awn/workflow.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <memory>
#include <set>

#include "awn/error.hpp"
#include "awn/unicode.hpp"

namespace awn::workflow {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Error violation(const std::string& message, const std::string& field) {
  return Error(ErrorCode::invariant_violation, message, field);
}

std::vector<Example> make_examples(const std::vector<std::string>& texts, std::string_view language) {
  std::vector<Example> out;
  for (const auto& t : texts) out.push_back({t, std::string(language), Provenance::added});
  return out;
}

Phraset make_phraset(const PhrasetDraft& d, std::string_view language) {
  return {d.text, std::string(language), make_examples(d.examples, language), Provenance::added};
}

void add_phrasets(Synset& s, const std::vector<Phraset>& phrasets) {
  for (const auto& p : phrasets) {
    bool present = std::any_of(s.phrasets.begin(), s.phrasets.end(), [&](const Phraset& q) {
      return normalize_form(q.text) == normalize_form(p.text);
    });
    if (!present) s.phrasets.push_back(p);
  }
}

const SenseDraft* find_draft(const Translate& t, std::string_view form) {
  std::string key = normalize_form(form);
  for (const auto& s : t.senses) {
    if (normalize_form(s.form) == key) return &s;
  }
  return nullptr;
}

Synset translated(const Synset& base, const Translate& t, std::string_view language) {
  Synset draft = base;
  draft.status = LexicalizationStatus::lexicalized;
  if (!base.gloss || normalize_form(base.gloss->text) != normalize_form(t.gloss)) {
    draft.gloss = Gloss{t.gloss, std::string(language), Provenance::added};
  }
  std::vector<Sense> senses;
  int rank = 1;
  for (const auto& sd : t.senses) {
    Sense s;
    s.written_form = sd.form;
    s.rank = rank++;
    const Sense* old = base.find_active(sd.form);
    s.provenance = old ? old->provenance : Provenance::added;
    for (const auto& text : sd.examples) {
      bool known = old && std::any_of(old->examples.begin(), old->examples.end(), [&](const Example& e) {
                     return normalize_form(e.text) == normalize_form(text);
                   });
      s.examples.push_back(
          {text, std::string(language), known ? Provenance::imported_v1 : Provenance::added});
    }
    senses.push_back(std::move(s));
  }
  for (const auto& old : base.senses) {
    if (old.active() && !find_draft(t, old.written_form)) {
      Sense gone = old;
      gone.deleted = DeletionReason{DeletionKind::not_covered_by_gloss, {}};
      senses.push_back(std::move(gone));
    } else if (!old.active()) {
      senses.push_back(old);
    }
  }
  draft.senses = std::move(senses);
  std::vector<Phraset> phrasets;
  for (const auto& p : t.phrasets) phrasets.push_back(make_phraset(p, language));
  add_phrasets(draft, phrasets);
  return draft;
}

Synset merged(const Synset& base, const MergeV1& m, std::string_view language) {
  Synset draft = base;
  draft.status = LexicalizationStatus::lexicalized;
  for (const auto& del : m.delete_lemmas) {
    std::string key = normalize_form(del.form);
    auto it = std::find_if(draft.senses.begin(), draft.senses.end(), [&](const Sense& s) {
      return s.active() && normalize_form(s.written_form) == key;
    });
    if (it == draft.senses.end()) {
      throw violation("deleted lemma '" + del.form + "' is not in the V1 synset",
                      "contribution.delete_lemmas");
    }
    it->deleted = del.reason;
  }
  for (const auto& form : m.add_lemmas) {
    const SenseDraft* sd = find_draft(m.translation, form);
    if (!sd) {
      throw violation("added lemma '" + form + "' is not in the translation",
                      "contribution.add_lemmas");
    }
    if (draft.find_active(form)) {
      throw violation("added lemma '" + form + "' is already in the V1 synset",
                      "contribution.add_lemmas");
    }
    Sense s;
    s.written_form = sd->form;
    s.rank = static_cast<int>(draft.senses.size()) + 1;
    s.provenance = Provenance::added;
    s.examples = make_examples(sd->examples, language);
    draft.senses.push_back(std::move(s));
  }
  if (m.copy_gloss && !draft.gloss && !trim(m.translation.gloss).empty()) {
    draft.gloss = Gloss{m.translation.gloss, std::string(language), Provenance::added};
  }
  if (m.copy_examples) {
    for (auto& s : draft.senses) {
      if (!s.active() || !s.examples.empty()) continue;
      if (const SenseDraft* sd = find_draft(m.translation, s.written_form)) {
        s.examples = make_examples(sd->examples, language);
      }
    }
  }
  std::vector<Phraset> phrasets;
  for (const auto& p : m.translation.phrasets) phrasets.push_back(make_phraset(p, language));
  add_phrasets(draft, phrasets);
  compact_ranks(draft);
  return draft;
}

void validate_translation(const Translate& t, const std::string& field) {
  if (t.senses.empty()) throw violation("translation has no lemma", field + ".senses");
  for (const auto& s : t.senses) {
    if (trim(s.form).empty()) throw violation("empty lemma", field + ".senses");
    bool exampled = std::any_of(s.examples.begin(), s.examples.end(),
                                [](const std::string& e) { return !trim(e).empty(); });
    if (!exampled) throw violation("lemma '" + s.form + "' has no example", field + ".senses");
  }
}

}  // namespace

std::string_view to_string(Role role) { return role == Role::expert ? "expert" : "translator"; }

Role parse_role(std::string_view text) {
  if (text == "translator") return Role::translator;
  if (text == "expert") return Role::expert;
  throw Error(ErrorCode::invalid_config, "unknown role: " + std::string(text), "role");
}

Roster::Roster(std::vector<Actor> actors) {
  for (auto& a : actors) add(std::move(a));
}

void Roster::add(Actor actor) {
  if (find(actor.id)) {
    throw Error(ErrorCode::invalid_config, "actor listed twice: " + actor.id, "actors");
  }
  actors_.push_back(std::move(actor));
}

const Actor* Roster::find(std::string_view id) const {
  for (const auto& a : actors_) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

const Actor& Roster::at(std::string_view id) const {
  if (const Actor* a = find(id)) return *a;
  throw Error(ErrorCode::unknown_actor, "unknown actor: " + std::string(id), "actor");
}

std::vector<Actor> Roster::with_role(Role role) const {
  std::vector<Actor> out;
  for (const auto& a : actors_) {
    if (a.role == role) out.push_back(a);
  }
  return out;
}

std::string_view contribution_type(const Contribution& c) {
  return std::visit(overloaded{[](const MarkGap&) { return std::string_view{"mark-gap"}; },
                               [](const Translate&) { return std::string_view{"translate"}; },
                               [](const MergeV1&) { return std::string_view{"merge-v1"}; },
                               [](const Skip&) { return std::string_view{"skip"}; }},
                    c);
}

void validate_contribution(const Contribution& c) {
  std::visit(overloaded{
                 [](const MarkGap& g) {
                   if (g.phrasets.empty()) {
                     throw violation("a lexical gap needs at least one phraset",
                                     "contribution.phrasets");
                   }
                 },
                 [](const Translate& t) { validate_translation(t, "contribution"); },
                 [](const MergeV1& m) {
                   if (!m.translation.senses.empty()) {
                     validate_translation(m.translation, "contribution.translation");
                   }
                 },
                 [](const Skip& s) {
                   if (trim(s.comment).empty()) {
                     throw violation("skipping needs a comment", "contribution.comment");
                   }
                 },
             },
             c);
}

Synset build_draft(const Synset& base, const Contribution& c, std::string_view language,
                   const std::vector<Phraset>& carried_phrasets) {
  validate_contribution(c);
  Synset draft = std::visit(
      overloaded{
          [&](const MarkGap& g) {
            Synset d = base;
            d.status = LexicalizationStatus::gap;
            for (auto& s : d.senses) {
              if (s.active()) s.deleted = DeletionReason{DeletionKind::other, "lexical gap"};
            }
            if (g.gloss && !trim(*g.gloss).empty()) {
              d.gloss = Gloss{*g.gloss, std::string(language), Provenance::added};
            }
            std::vector<Phraset> phrasets;
            for (const auto& p : g.phrasets) phrasets.push_back(make_phraset(p, language));
            add_phrasets(d, phrasets);
            return d;
          },
          [&](const Translate& t) { return translated(base, t, language); },
          [&](const MergeV1& m) { return merged(base, m, language); },
          [&](const Skip&) -> Synset {
            throw Error(ErrorCode::invariant_violation, "a skip has no draft", "contribution");
          },
      },
      c);
  if (draft.status != LexicalizationStatus::gap) add_phrasets(draft, carried_phrasets);
  draft.approved = true;
  compact_ranks(draft);
  require_valid(draft);
  return draft;
}

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::generated: return "generated";
    case StateKind::in_translation: return "in-translation";
    case StateKind::submitted: return "submitted";
    case StateKind::peer_review: return "peer-review";
    case StateKind::changes_requested: return "changes-requested";
    case StateKind::peer_accepted: return "peer-accepted";
    case StateKind::expert_review: return "expert-review";
    case StateKind::approved: return "approved";
    case StateKind::expert_rejected: return "expert-rejected";
    case StateKind::skipped: return "skipped";
  }
  return "generated";
}

StateKind parse_state_kind(std::string_view text) {
  for (StateKind k : kAllStateKinds) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::bad_request, "unknown task state: " + std::string(text), "state");
}

bool is_legal_edge(StateKind from, StateKind to) {
  using S = StateKind;
  switch (from) {
    case S::generated:
    case S::changes_requested:
    case S::expert_rejected:
    case S::skipped:
      return to == S::in_translation || to == S::submitted || (to == S::skipped && from != S::skipped);
    case S::in_translation: return to == S::submitted || to == S::skipped;
    case S::submitted: return to == S::peer_review;
    case S::peer_review: return to == S::peer_accepted || to == S::changes_requested;
    case S::peer_accepted: return to == S::expert_review;
    case S::expert_review: return to == S::approved || to == S::expert_rejected;
    case S::approved: return false;
  }
  return false;
}

bool is_terminal(StateKind kind) { return kind == StateKind::approved; }

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::gap: return "gap";
    case Criterion::gloss: return "gloss";
    case Criterion::lemmas: return "lemmas";
    case Criterion::examples: return "examples";
  }
  return "gap";
}

bool Checklist::passes(Criterion c) const {
  switch (c) {
    case Criterion::gap: return gap;
    case Criterion::gloss: return gloss;
    case Criterion::lemmas: return lemmas;
    case Criterion::examples: return examples;
  }
  return true;
}

void validate_decision(const ReviewDecision& d) {
  if (d.verdict == Verdict::reject) {
    if (trim(d.comment).empty()) {
      throw Error(ErrorCode::reject_without_comment, "a rejection needs a comment", "decision.comment");
    }
    if (d.checklist.all_pass()) {
      throw Error(ErrorCode::invalid_decision, "a rejection needs at least one failed criterion",
                  "decision.checklist");
    }
  } else {
    if (!d.checklist.all_pass()) {
      throw Error(ErrorCode::invalid_decision, "an acceptance cannot fail a criterion",
                  "decision.checklist");
    }
    if (!d.rejected_items.empty() || !d.counter_lemmas.empty()) {
      throw Error(ErrorCode::invalid_decision, "an acceptance cannot reject items",
                  "decision.rejected_items");
    }
  }
}

Criterion criterion_for(ChangeKind kind) {
  switch (kind) {
    case ChangeKind::lemma_added:
    case ChangeKind::lemma_deleted: return Criterion::lemmas;
    case ChangeKind::gloss_added: return Criterion::gloss;
    case ChangeKind::example_added: return Criterion::examples;
    case ChangeKind::gap_marked:
    case ChangeKind::phraset_added: return Criterion::gap;
  }
  return Criterion::lemmas;
}

bool judged_wrong(const ReviewDecision& d, std::size_t index, ChangeKind kind) {
  if (d.verdict == Verdict::accept) return false;
  if (!d.rejected_items.empty()) {
    return std::find(d.rejected_items.begin(), d.rejected_items.end(), index) != d.rejected_items.end();
  }
  return !d.checklist.passes(criterion_for(kind));
}

GeneratedTasks generate_tasks(const Lexicon& pivot, const Lexicon& v1,
                              const ingest::NamedEntityFilter& filter) {
  GeneratedTasks out;
  for (PartOfSpeech pos : kAllPos) {
    for (const auto& [id, synset] : v1.synsets()) {
      if (synset.pos != pos) continue;
      if (filter.excludes(id) || (synset.pivot && filter.excludes(*synset.pivot))) {
        ++out.excluded;
        continue;
      }
      if (!synset.pivot) {
        out.unresolved.push_back(id.value + ": no pivot reference");
        continue;
      }
      const Synset* p = pivot.find(*synset.pivot);
      if (!p) {
        out.unresolved.push_back(id.value + ": pivot " + synset.pivot->value + " not found");
        continue;
      }
      if (p->pos != synset.pos) {
        out.unresolved.push_back(id.value + ": pos differs from pivot " + p->id.value);
        continue;
      }
      out.tasks.push_back({*p, synset});
    }
  }
  return out;
}

Clock system_clock() {
  return [] {
    auto now = std::chrono::system_clock::now();
    auto secs = std::chrono::system_clock::to_time_t(now);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
    std::tm tm{};
    gmtime_r(&secs, &tm);
    char buf[40];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
    char out[48];
    std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
    return std::string(out);
  };
}

Clock logical_clock(std::uint64_t start) {
  auto counter = std::make_shared<std::time_t>(static_cast<std::time_t>(start));
  return [counter] {
    std::time_t t = ++*counter;
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[40];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buf);
  };
}

// ---------------------------------------------------------------------------
// State

State::State(std::string language, Lexicon target)
    : language_(std::move(language)), target_(std::move(target)) {}

void State::apply(const AuditEvent& e) {
  if (e.seq != last_seq_ + 1) {
    throw Error(ErrorCode::gap_in_sequence,
                "expected seq " + std::to_string(last_seq_ + 1) + ", got " + std::to_string(e.seq),
                "seq");
  }
  auto illegal = [&](const std::string& message) {
    return Error(ErrorCode::illegal_transition_in_log,
                 "event " + std::to_string(e.seq) + ": " + message, "seq");
  };
  auto task_of = [&]() -> Task& {
    auto it = tasks_.find(e.task);
    if (it == tasks_.end()) throw illegal("unknown task '" + e.task + "'");
    return it->second;
  };

  std::visit(
      overloaded{
          [&](const TaskCreated& p) {
            if (p.v1.id.value != e.task) throw illegal("task id differs from its synset id");
            if (tasks_.count(e.task)) throw illegal("task created twice");
            Task t;
            t.id = e.task;
            t.pos = p.v1.pos;
            t.pivot = p.pivot;
            t.v1 = p.v1;
            t.version = 1;
            tasks_.emplace(e.task, std::move(t));
          },
          [&](const ContributionSubmitted& p) {
            Task& t = task_of();
            if (!is_legal_edge(t.state.kind, StateKind::submitted)) {
              throw illegal("submission in state " + std::string(to_string(t.state.kind)));
            }
            std::optional<Synset> draft;
            std::vector<Change> changes;
            if (!std::holds_alternative<Skip>(p.contribution)) {
              std::vector<Phraset> carried;
              if (t.draft && t.draft->status == LexicalizationStatus::gap) carried = t.draft->phrasets;
              try {
                draft = build_draft(t.v1, p.contribution, language_, carried);
              } catch (const Error& err) {
                throw illegal(std::string("contribution does not build: ") + err.what());
              }
              changes = diff_synsets(t.v1, *draft);
            }
            if (changes != p.changes) throw illegal("recorded changes differ from the contribution");
            t.contribution = p.contribution;
            t.draft = std::move(draft);
            t.changes = std::move(changes);
            if (!std::holds_alternative<Skip>(p.contribution)) t.author = e.actor;
            ++t.version;
          },
          [&](const ReviewRecorded& p) {
            Task& t = task_of();
            StateKind expected =
                p.phase == ReviewPhase::peer ? StateKind::peer_review : StateKind::expert_review;
            if (t.state.kind != expected) {
              throw illegal("review in state " + std::string(to_string(t.state.kind)));
            }
            if (p.phase == ReviewPhase::peer) {
              t.last_peer_decision = p.decision;
            } else {
              t.last_expert_decision = p.decision;
              t.counter_lemmas = p.decision.counter_lemmas;
            }
            ++t.version;
          },
          [&](const StateChanged& p) {
            Task& t = task_of();
            if (!(p.from == t.state)) throw illegal("state change from a state the task is not in");
            if (!is_legal_edge(p.from.kind, p.to.kind)) {
              throw illegal("no edge " + std::string(to_string(p.from.kind)) + " -> " +
                            std::string(to_string(p.to.kind)));
            }
            if ((p.to.kind == StateKind::peer_review || p.to.kind == StateKind::peer_accepted) &&
                p.to.actor == t.author) {
              throw illegal("peer review by the author");
            }
            if (p.to.kind == StateKind::approved) {
              if (!t.draft) throw illegal("approval without a draft");
              Synset committed = *t.draft;
              committed.approved = true;
              try {
                target_.put(std::move(committed));
              } catch (const Error& err) {
                throw illegal(std::string("draft not committable: ") + err.what());
              }
            }
            if (p.to.kind == StateKind::changes_requested || p.to.kind == StateKind::expert_rejected) {
              t.last_comment = p.to.comment;
            }
            t.state = p.to;
            ++t.version;
          },
          [&](const ChangeCommitted& p) {
            if (p.source == ChangeSource::workflow) {
              Task& t = task_of();
              if (t.state.kind != StateKind::approved) throw illegal("commit on an unapproved task");
              ++t.version;
            }
          },
      },
      e.payload);
  last_seq_ = e.seq;
}

State replay_audit_log(std::span<const AuditEvent> events, std::string language, Lexicon base) {
  State state(std::move(language), std::move(base));
  for (const auto& e : events) state.apply(e);
  return state;
}

// ---------------------------------------------------------------------------
// Engine

Engine::Engine(Roster roster, std::string language, Clock clock, Lexicon base_target)
    : roster_(std::move(roster)),
      clock_(std::move(clock)),
      state_(std::move(language), std::move(base_target)) {}

Engine::Engine(Roster roster, std::vector<AuditEvent> log, std::string language, Clock clock,
               Lexicon base_target)
    : Engine(std::move(roster), std::move(language), std::move(clock), std::move(base_target)) {
  for (auto& e : log) {
    state_.apply(e);
    log_.push_back(std::move(e));
  }
}

void Engine::record(const std::string& actor, const std::string& task,
                    std::vector<EventPayload> payloads) {
  for (auto& p : payloads) {
    AuditEvent e{state_.last_seq() + 1, clock_(), actor, task, std::move(p)};
    state_.apply(e);
    log_.push_back(std::move(e));
  }
}

const Actor& Engine::require_role(const std::string& actor, Role role) const {
  const Actor& a = roster_.at(actor);
  if (a.role != role) {
    throw Error(ErrorCode::wrong_role,
                actor + " is a " + std::string(to_string(a.role)) + ", not a " +
                    std::string(to_string(role)),
                "actor");
  }
  return a;
}

const Task& Engine::task(const std::string& id) const {
  auto it = state_.tasks().find(id);
  if (it == state_.tasks().end()) throw Error(ErrorCode::unknown_task, "no task " + id, "task");
  return it->second;
}

const Task& Engine::checked_task(const std::string& id, std::uint64_t observed_version) const {
  const Task& t = task(id);
  if (t.version != observed_version) {
    throw Error(ErrorCode::stale_version,
                "task " + id + " is at version " + std::to_string(t.version) + ", request observed " +
                    std::to_string(observed_version),
                "observedVersion");
  }
  return t;
}

void Engine::create_tasks(const std::vector<TaskCreated>& tasks) {
  for (const auto& t : tasks) {
    if (state_.tasks().count(t.v1.id.value)) {
      throw Error(ErrorCode::duplicate_id, "task already exists: " + t.v1.id.value, "task");
    }
  }
  for (const auto& t : tasks) record(std::string(kSystemActor), t.v1.id.value, {t});
}

void Engine::import_changes(const std::vector<Change>& changes) {
  std::vector<EventPayload> payloads;
  payloads.reserve(changes.size());
  for (const auto& c : changes) payloads.emplace_back(ChangeCommitted{c, ChangeSource::import});
  record("import", {}, std::move(payloads));
}

TaskState Engine::claim(const std::string& task_id, const std::string& actor,
                        std::uint64_t observed_version) {
  const Task& t = checked_task(task_id, observed_version);
  require_role(actor, Role::translator);
  TaskState from = t.state;
  switch (from.kind) {
    case StateKind::generated:
    case StateKind::skipped: break;
    case StateKind::changes_requested:
    case StateKind::expert_rejected:
      if (t.author != actor) {
        throw Error(ErrorCode::illegal_state, "task " + task_id + " is returned to " + t.author, "actor");
      }
      break;
    default:
      throw Error(ErrorCode::illegal_state,
                  "cannot claim a task in state " + std::string(to_string(from.kind)), "state");
  }
  TaskState to{StateKind::in_translation, actor, {}};
  record(actor, task_id, {StateChanged{from, to}});
  return to;
}

TaskState Engine::submit(const std::string& task_id, const std::string& actor, const Contribution& c,
                         std::uint64_t observed_version) {
  const Task& t = checked_task(task_id, observed_version);
  require_role(actor, Role::translator);
  TaskState from = t.state;
  bool skip = std::holds_alternative<Skip>(c);
  switch (from.kind) {
    case StateKind::generated: break;
    case StateKind::skipped:
      if (skip) throw Error(ErrorCode::illegal_state, "task is already skipped", "state");
      break;
    case StateKind::in_translation:
      if (from.actor != actor) {
        throw Error(ErrorCode::illegal_state, "task " + task_id + " is held by " + from.actor, "actor");
      }
      break;
    case StateKind::changes_requested:
    case StateKind::expert_rejected:
      if (t.author != actor) {
        throw Error(ErrorCode::illegal_state, "task " + task_id + " is returned to " + t.author, "actor");
      }
      break;
    default:
      throw Error(ErrorCode::illegal_state,
                  "cannot submit to a task in state " + std::string(to_string(from.kind)), "state");
  }

  validate_contribution(c);
  std::vector<Change> changes;
  if (!skip) {
    std::vector<Phraset> carried;
    if (t.draft && t.draft->status == LexicalizationStatus::gap) carried = t.draft->phrasets;
    Synset draft = build_draft(t.v1, c, state_.language(), carried);
    changes = diff_synsets(t.v1, draft);
  }
  TaskState to = skip ? TaskState{StateKind::skipped, actor, std::get<Skip>(c).comment}
                      : TaskState{StateKind::submitted, actor, {}};
  record(actor, task_id, {ContributionSubmitted{c, std::move(changes)}, StateChanged{from, to}});
  return to;
}

TaskState Engine::assign_peer_reviewer(const std::string& task_id, std::uint64_t observed_version) {
  const Task& t = checked_task(task_id, observed_version);
  if (t.state.kind != StateKind::submitted) {
    throw Error(ErrorCode::illegal_state,
                "cannot assign a reviewer in state " + std::string(to_string(t.state.kind)), "state");
  }
  std::map<std::string, std::size_t> load;
  for (const auto& a : roster_.with_role(Role::translator)) {
    if (a.id != t.author) load[a.id] = 0;
  }
  if (load.empty()) {
    throw Error(ErrorCode::illegal_state, "no translator other than the author can review", "roster");
  }
  for (const auto& [id, other] : state_.tasks()) {
    if (other.state.kind == StateKind::peer_review && load.count(other.state.actor)) {
      ++load[other.state.actor];
    }
  }
  auto best = std::min_element(load.begin(), load.end(),
                               [](const auto& a, const auto& b) { return a.second < b.second; });
  TaskState from = t.state;
  TaskState to{StateKind::peer_review, best->first, {}};
  record(std::string(kSystemActor), task_id, {StateChanged{from, to}});
  return to;
}

TaskState Engine::peer_review(const std::string& task_id, const std::string& reviewer,
                              const ReviewDecision& d, std::uint64_t observed_version) {
  const Task& t = checked_task(task_id, observed_version);
  require_role(reviewer, Role::translator);
  if (t.state.kind == StateKind::submitted || t.state.kind == StateKind::peer_review) {
    if (reviewer == t.author) {
      throw Error(ErrorCode::self_review_forbidden, reviewer + " submitted this contribution", "actor");
    }
  }
  if (t.state.kind == StateKind::peer_review && t.state.actor != reviewer) {
    throw Error(ErrorCode::illegal_state, "task " + task_id + " is assigned to " + t.state.actor,
                "actor");
  }
  if (t.state.kind != StateKind::submitted && t.state.kind != StateKind::peer_review) {
    throw Error(ErrorCode::illegal_state,
                "cannot peer-review a task in state " + std::string(to_string(t.state.kind)), "state");
  }
  validate_decision(d);

  std::vector<EventPayload> events;
  TaskState current = t.state;
  if (current.kind == StateKind::submitted) {
    TaskState in_review{StateKind::peer_review, reviewer, {}};
    events.emplace_back(StateChanged{current, in_review});
    current = in_review;
  }
  events.emplace_back(ReviewRecorded{ReviewPhase::peer, d});
  TaskState result;
  if (d.verdict == Verdict::accept) {
    TaskState accepted{StateKind::peer_accepted, reviewer, {}};
    result = TaskState{StateKind::expert_review, {}, {}};
    events.emplace_back(StateChanged{current, accepted});
    events.emplace_back(StateChanged{accepted, result});
  } else {
    result = TaskState{StateKind::changes_requested, t.author, d.comment};
    events.emplace_back(StateChanged{current, result});
  }
  record(reviewer, task_id, std::move(events));
  return result;
}

TaskState Engine::expert_review(const std::string& task_id, const std::string& expert,
                                const ReviewDecision& d, std::uint64_t observed_version) {
  const Task& t = checked_task(task_id, observed_version);
  require_role(expert, Role::expert);
  if (t.state.kind != StateKind::expert_review) {
    throw Error(ErrorCode::illegal_state,
                "cannot expert-review a task in state " + std::string(to_string(t.state.kind)),
                "state");
  }
  validate_decision(d);
  for (std::size_t i : d.rejected_items) {
    if (i >= t.changes.size()) {
      throw Error(ErrorCode::invalid_decision, "rejected item " + std::to_string(i) + " out of range",
                  "decision.rejected_items");
    }
  }

  std::vector<EventPayload> events;
  events.emplace_back(ReviewRecorded{ReviewPhase::expert, d});
  TaskState result;
  if (d.verdict == Verdict::accept) {
    result = TaskState{StateKind::approved, {}, {}};
    events.emplace_back(StateChanged{t.state, result});
    for (const auto& c : t.changes) events.emplace_back(ChangeCommitted{c, ChangeSource::workflow});
  } else {
    result = TaskState{StateKind::expert_rejected, t.author, d.comment};
    events.emplace_back(StateChanged{t.state, result});
  }
  record(expert, task_id, std::move(events));
  return result;
}

bool Engine::can_act(const Task& t, const Actor& a) const {
  if (a.role == Role::expert) return t.state.kind == StateKind::expert_review;
  switch (t.state.kind) {
    case StateKind::generated:
    case StateKind::skipped: return true;
    case StateKind::in_translation:
    case StateKind::peer_review: return t.state.actor == a.id;
    case StateKind::changes_requested:
    case StateKind::expert_rejected: return t.author == a.id;
    case StateKind::submitted: return t.author != a.id;
    default: return false;
  }
}

std::vector<const Task*> Engine::actionable_for(const std::string& actor) const {
  const Actor& a = roster_.at(actor);
  std::vector<const Task*> out;
  for (const auto& [id, t] : state_.tasks()) {
    if (can_act(t, a)) out.push_back(&t);
  }
  return out;
}

}  // namespace awn::workflow
