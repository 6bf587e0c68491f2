// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 iff all pass.
//
// Set AWN_DATASET_DIR to a directory holding awn.json (a project config over
// the published per-POS result sheets) to check the dataset criterion against
// the real files. Without it the criterion runs on synthetic sheets built to
// the published counts.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "awn/error.hpp"
#include "awn/ingest.hpp"
#include "awn/metrics.hpp"
#include "awn/project.hpp"
#include "awn/serialize.hpp"
#include "awn/unicode.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "project_dir.hpp"
#include "samples.hpp"

using namespace awn;
using namespace awn::testing;
using namespace awn::workflow;

namespace {

// Time limits, seconds.
constexpr double kDatasetLimit = 30;
constexpr double kOracleLimit = 5;
constexpr double kExhaustionLimit = 10;
constexpr double kInvariantLimit = 10;
constexpr double kRoundTripLimit = 5;
constexpr double kReplayLimit = 10;
constexpr double kFormulaLimit = 5;

constexpr std::size_t kOracleSynsets = 500;
constexpr std::size_t kOracleEvents = 2000;
constexpr std::size_t kMaxSequence = 8;
constexpr std::size_t kInvariantOps = 1000;
constexpr std::size_t kReplayLogs = 100;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failed;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failed.size() < 5) failed.push_back(what);
  }
};

int failures = 0;

void criterion(const std::string& name, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < limit, "time limit");
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  [" << std::fixed << std::setprecision(2)
            << secs << " s < " << std::setprecision(0) << limit << " s]  " << o.detail.str();
  for (const auto& f : o.failed) std::cout << " | failed: " << f;
  std::cout << std::endl;
}

std::vector<const Synset*> pointers(const std::vector<Synset>& v) {
  std::vector<const Synset*> out;
  for (const auto& s : v) out.push_back(&s);
  return out;
}

// ---------------------------------------------------------------------------

void dataset(Outcome& o) {
  const auto published = published_counts();
  TempDir tmp;
  fs::path config_path;
  if (const char* dir = std::getenv("AWN_DATASET_DIR"); dir && fs::exists(fs::path(dir) / "awn.json")) {
    config_path = fs::path(dir) / "awn.json";
    o.detail << "published files; ";
  } else {
    std::string sheets;
    for (const auto& [pos, counts] : published) {
      auto synsets = synthetic_result_synsets(pos, counts);
      auto files = ingest::emit_result_files(pointers(synsets));
      std::string name(to_string(pos));
      write_text(tmp / (name + ".final.tsv"), files.final_sheet);
      write_text(tmp / (name + ".delta.tsv"), files.delta_sheet);
      if (!sheets.empty()) sheets += ", ";
      sheets += "\"" + name + "\": {\"final\": \"" + name + ".final.tsv\", \"delta\": \"" + name + ".delta.tsv\"}";
    }
    write_text(tmp / "awn.json", "{\"result_sheets\": {" + sheets + "}, \"storage\": \"store\"}");
    config_path = tmp / "awn.json";
    o.detail << "synthetic sheets (published files not present); ";
  }
  auto config = project::ProjectConfig::load(config_path);
  auto summary = project::ingest(config, true);
  o.require(!summary.has_rejections(), "ingest without rejected rows");

  project::Project p(config);
  auto input = p.input_stats();
  auto stats = metrics::compute_contribution_stats(p.engine().log());
  for (const auto& [pos, c] : published) {
    std::string name(to_string(pos));
    o.require(input.of(pos).synsets == c.synsets, name + " synsets");
    o.require(input.of(pos).words == c.words, name + " words");
    const auto& row = stats.of(pos);
    o.require(row.updated_synsets == c.updated && row.new_lemmas == c.new_lemmas &&
                  row.deleted_lemmas == c.deleted_lemmas && row.new_glosses == c.glosses &&
                  row.new_examples == c.examples && row.gaps == c.gaps && row.phrasets == c.phrasets,
              name + " contribution row");
  }
  // Totals as published.
  o.require(input.total.synsets == 9576, "total synsets 9,576");
  o.require(input.total.words == 20560, "total words 20,560");
  const auto& t = stats.total;
  o.require(t.updated_synsets == 5554, "updated 5,554");
  o.require(t.new_lemmas == 2726, "new lemmas 2,726");
  o.require(t.deleted_lemmas == 8751, "deleted 8,751");
  o.require(t.new_glosses == 9322, "glosses 9,322");
  o.require(t.new_examples == 12204, "examples 12,204");
  o.require(t.gaps == 236, "gaps 236");
  o.require(t.phrasets == 701, "phrasets 701");
  o.detail << "synsets " << input.total.synsets << ", updated " << t.updated_synsets << ", new lemmas "
           << t.new_lemmas << ", deleted " << t.deleted_lemmas << ", glosses " << t.new_glosses
           << ", examples " << t.new_examples << ", gaps " << t.gaps << ", phrasets " << t.phrasets;
}

// ---------------------------------------------------------------------------

void fixture_oracle(Outcome& o) {
  auto fx = make_fixture(kOracleSynsets, 2024);
  Engine e(default_roster(), "ar", logical_clock());
  e.create_tasks(generate_tasks(fx.pivot, fx.v1, {}).tasks);
  Rng rng(77);
  drive(e, rng, kOracleEvents);
  const auto& log = e.log();
  o.require(log.size() >= kOracleEvents, "event count");

  for (bool all : {false, true}) {
    for (bool any : {false, true}) {
      auto got = metrics::compute_contribution_stats(log, all ? metrics::Scope::all : metrics::Scope::approved_only,
                                                     any ? metrics::UpdatedRule::any_component
                                                         : metrics::UpdatedRule::lemma_or_gap);
      o.require(got == oracle_stats(log, all, any), "contribution stats");
    }
  }
  auto correctness = metrics::compute_correctness(log);
  o.require(correctness == oracle_correctness(log), "correctness");
  o.require(correctness.overall.total > 0, "some judged changes");

  std::size_t queries = 0;
  for (const Lexicon* lex : std::vector<const Lexicon*>{&fx.v1, &e.target()}) {
    std::set<std::string> forms{arabic_word(9999999), "ضجيج"};
    for (const auto& [id, s] : lex->synsets()) {
      for (const Sense* sense : s.active_senses()) {
        forms.insert(sense->written_form);
        forms.insert(sense->written_form + "َ");  // trailing fatha
      }
    }
    for (const auto& form : forms) {
      std::vector<std::optional<PartOfSpeech>> filters{std::nullopt};
      for (PartOfSpeech pos : kAllPos) filters.push_back(pos);
      for (const auto& pos : filters) {
        std::vector<SynsetId> got;
        for (const Synset* s : lex->lookup(form, pos)) got.push_back(s->id);
        if (got != linear_lookup(*lex, form, pos)) {
          o.require(false, "lookup of " + form);
        }
        ++queries;
      }
    }
  }
  o.detail << log.size() << " events, " << correctness.overall.total << " judged changes, " << queries
           << " lookups";
}

// ---------------------------------------------------------------------------

struct Exhaustion {
  Outcome& o;
  std::size_t nodes = 0;
  std::size_t approvals = 0;
  std::set<StateKind> seen;
  std::vector<std::pair<std::string, std::function<void(Engine&, std::uint64_t)>>> actions;

  explicit Exhaustion(Outcome& out) : o(out) {
    const std::string id = kNoise;
    Translate translate = translation("أصوات عالية", {{"ضجيج", "ضجيج المدينة"}});
    MarkGap gap{{{"صوت مزعج", {"سمعت صوتا مزعجا"}}}, "لا مقابل", std::nullopt};
    for (const std::string actor : {"t1", "t2", "e"}) {
      actions.push_back({actor + " claim", [=](Engine& e, std::uint64_t v) { e.claim(id, actor, v); }});
      actions.push_back(
          {actor + " translate", [=](Engine& e, std::uint64_t v) { e.submit(id, actor, translate, v); }});
      actions.push_back({actor + " gap", [=](Engine& e, std::uint64_t v) { e.submit(id, actor, gap, v); }});
      actions.push_back(
          {actor + " skip", [=](Engine& e, std::uint64_t v) { e.submit(id, actor, Skip{"لاحقا"}, v); }});
      actions.push_back(
          {actor + " peer accept", [=](Engine& e, std::uint64_t v) { e.peer_review(id, actor, accept(), v); }});
      actions.push_back({actor + " peer reject", [=](Engine& e, std::uint64_t v) {
                           e.peer_review(id, actor, reject("ناقص", {true, true, false, true}), v);
                         }});
      actions.push_back(
          {actor + " expert accept", [=](Engine& e, std::uint64_t v) { e.expert_review(id, actor, accept(), v); }});
      actions.push_back({actor + " expert reject", [=](Engine& e, std::uint64_t v) {
                           e.expert_review(id, actor, reject("خطأ", {false, true, true, true}), v);
                         }});
    }
    actions.push_back({"assign", [=](Engine& e, std::uint64_t v) { e.assign_peer_reviewer(id, v); }});
  }

  // Approved needs, after the last submission, a peer accept by a translator
  // other than its author and then an expert accept by an expert.
  bool approval_is_earned(const Engine& e) const {
    std::string author;
    bool peer_ok = false, expert_ok = false;
    for (const auto& ev : e.log()) {
      if (ev.task != kNoise) continue;
      if (std::holds_alternative<ContributionSubmitted>(ev.payload)) {
        author = ev.actor;
        peer_ok = expert_ok = false;
      } else if (const auto* r = std::get_if<ReviewRecorded>(&ev.payload)) {
        bool accepted = r->decision.verdict == Verdict::accept;
        const Actor* actor = e.roster().find(ev.actor);
        if (r->phase == ReviewPhase::peer) {
          peer_ok = accepted && actor && actor->role == Role::translator && ev.actor != author;
        } else {
          expert_ok = accepted && peer_ok && actor && actor->role == Role::expert;
        }
      }
    }
    return peer_ok && expert_ok;
  }

  void visit(const Engine& e, std::size_t depth) {
    ++nodes;
    const Task& t = e.task(kNoise);
    seen.insert(t.state.kind);
    bool moved = false;
    for (const auto& [name, act] : actions) {
      Engine next = e;
      const std::size_t before = next.log().size();
      try {
        act(next, t.version);
      } catch (const Error&) {
        if (next.log().size() != before || !(next.task(kNoise) == t)) o.require(false, "refusal had side effects");
        continue;
      }
      moved = true;
      for (std::size_t i = before; i < next.log().size(); ++i) {
        if (const auto* sc = std::get_if<StateChanged>(&next.log()[i].payload)) {
          seen.insert(sc->to.kind);
          if (!is_legal_edge(sc->from.kind, sc->to.kind)) o.require(false, "illegal transition via " + name);
        }
      }
      if (next.task(kNoise).state.kind == StateKind::approved) {
        ++approvals;
        if (!approval_is_earned(next)) o.require(false, "unearned approval via " + name);
      }
      if (depth + 1 < kMaxSequence) {
        visit(next, depth + 1);
      } else {
        ++nodes;
        seen.insert(next.task(kNoise).state.kind);
        if (!is_terminal(next.task(kNoise).state.kind) && !has_move(next)) o.require(false, "deadlock at depth 8");
      }
    }
    if (!moved && !is_terminal(t.state.kind)) {
      o.require(false, std::string("deadlock in ") + std::string(to_string(t.state.kind)));
    }
    if (moved && is_terminal(t.state.kind)) o.require(false, "action out of a terminal state");
  }

  bool has_move(const Engine& e) const {
    for (const auto& [name, act] : actions) {
      Engine next = e;
      try {
        act(next, e.task(kNoise).version);
        return true;
      } catch (const Error&) {
      }
    }
    return false;
  }
};

void exhaustion(Outcome& o) {
  auto f = sample_lexicons();
  Engine root(small_roster(), "ar", logical_clock());
  auto generated = generate_tasks(f.pivot, f.v1, {}).tasks;
  root.create_tasks({generated.front()});
  Exhaustion x(o);
  x.visit(root, 0);
  o.require(x.approvals > 0, "approval reachable");
  o.require(x.seen.size() == std::size(kAllStateKinds), "every state reached");
  o.detail << x.nodes << " nodes, " << x.approvals << " approving sequences, " << x.seen.size()
           << " states reached, " << x.actions.size() << " actions per node";
}

// ---------------------------------------------------------------------------

bool lexicon_valid(const Lexicon& lex) {
  for (const auto& [id, s] : lex.synsets()) {
    if (!check_synset(s).empty()) return false;
  }
  return true;
}

Synset random_synset(Rng& rng, std::size_t serial) {
  Synset s;
  s.id = make_synset_id("awn", kAllPos[rng() % 4], serial);
  s.pos = parse_pos(std::string(1, s.id.value[4]));
  std::size_t shape = rng() % 6;
  s.status = shape == 0 ? LexicalizationStatus::gap : LexicalizationStatus::lexicalized;
  if (rng() % 4 == 0) s.status = LexicalizationStatus::pending;
  std::size_t senses = rng() % 4;
  for (std::size_t i = 0; i < senses; ++i) {
    Sense sense;
    sense.written_form = arabic_word(rng() % 40);
    sense.rank = static_cast<int>(i) + 1 + (rng() % 10 == 0 ? 1 : 0);
    sense.provenance = Provenance::added;
    if (rng() % 2) sense.examples.push_back({"مثال " + sense.written_form, "ar", Provenance::added});
    s.senses.push_back(std::move(sense));
  }
  if (rng() % 3) s.gloss = Gloss{"تعريف", "ar", Provenance::added};
  if (shape == 0 || rng() % 5 == 0) {
    if (rng() % 4) s.phrasets.push_back({arabic_phrase(serial), "ar", {}, Provenance::added});
  }
  s.approved = rng() % 2 == 0;
  return s;
}

void invariants(Outcome& o) {
  Rng rng(4242);
  // Direct lexicon operations.
  Lexicon lex("ar", "awn");
  std::size_t committed = 0, refused = 0;
  for (std::size_t i = 0; i < kInvariantOps; ++i) {
    Lexicon before = lex;
    try {
      switch (rng() % 3) {
        case 0: lex.put(random_synset(rng, 1 + rng() % 60)); break;
        case 1: lex.add(random_synset(rng, 1 + rng() % 60)); break;
        default: {
          if (lex.empty()) continue;
          auto it = lex.synsets().begin();
          std::advance(it, static_cast<long>(rng() % lex.size()));
          std::optional<LexicalizationStatus> status;
          if (rng() % 3 == 0) status = LexicalizationStatus::gap;
          lex.delete_sense(it->first, 1 + static_cast<int>(rng() % 3), DeletionReason{}, status);
        }
      }
      ++committed;
    } catch (const Error&) {
      ++refused;
      if (!(lex == before)) o.require(false, "refused operation changed the lexicon");
    }
    if (!lexicon_valid(lex)) {
      o.require(false, "invalid synset after lexicon operation " + std::to_string(i));
      break;
    }
    if (lex.index() != lex.rebuild_index()) o.require(false, "index out of date");
  }

  // Workflow operations.
  auto fx = make_fixture(150, 99);
  Engine e(default_roster(), "ar", logical_clock());
  e.create_tasks(generate_tasks(fx.pivot, fx.v1, {}).tasks);
  std::size_t steps = 0;
  for (std::size_t i = 0; steps < kInvariantOps && i < 50 * kInvariantOps; ++i) {
    if (!random_step(e, rng)) continue;
    ++steps;
    if (!lexicon_valid(e.target())) {
      o.require(false, "invalid committed synset after workflow step");
      break;
    }
  }
  std::vector<std::pair<std::string, std::string>> got;
  for (const auto& f : metrics::completeness_audit(e.target())) got.emplace_back(to_string(f.kind), f.locator);
  o.require(got == oracle_findings(e.target()), "audit equals oracle on a partial lexicon");

  // Approve everything, then audit.
  auto full = make_fixture(200, 7);
  Engine all(default_roster(), "ar", logical_clock());
  all.create_tasks(generate_tasks(full.pivot, full.v1, {}).tasks);
  for (const auto& [id, t] : full.v1.synsets()) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      Contribution c = random_contribution(all.task(id.value), rng);
      if (std::holds_alternative<Skip>(c)) continue;
      try {
        through_review(all, id.value, "t1", "t2", c, accept());
        break;
      } catch (const Error&) {
      }
    }
  }
  std::size_t approved = 0;
  for (const auto& [id, t] : all.tasks()) approved += t.state.kind == StateKind::approved;
  o.require(approved == all.tasks().size(), "every task approved");
  auto findings = metrics::completeness_audit(all.target());
  o.require(findings.empty(), "zero findings on the approved lexicon");
  o.require(oracle_findings(all.target()).empty(), "oracle agrees");
  o.detail << committed << " committed and " << refused << " refused lexicon ops, " << steps
           << " workflow steps, " << approved << " approved synsets, " << findings.size() << " findings";
}

// ---------------------------------------------------------------------------

void round_trip(Outcome& o) {
  Rng rng(5150);
  std::size_t files = 0;
  for (PartOfSpeech pos : kAllPos) {
    auto records = random_task_records(200, pos, rng);
    auto bytes = ingest::emit_task_sheet(records);
    auto parsed = ingest::parse_task_sheet(bytes, pos);
    o.require(parsed.report.rejected.empty(), "task sheet parse");
    o.require(ingest::emit_task_sheet(parsed.records) == bytes, "task sheet fixpoint");
    ++files;
  }

  auto fx = make_fixture(300, 31);
  for (const Lexicon* lex : {&fx.pivot, &fx.v1}) {
    auto bytes = ingest::emit_pivot_lexicon(*lex);
    auto parsed = ingest::parse_pivot_lexicon(bytes, lex->language(), lex->tag());
    o.require(parsed.report.rejected.empty(), "lexicon parse");
    o.require(ingest::emit_pivot_lexicon(parsed.lexicon) == bytes, "lexicon fixpoint");
    o.require(parsed.lexicon == *lex, "lexicon equal after parse");
    ++files;
  }

  for (const auto& [pos, counts] : published_counts()) {
    if (pos == PartOfSpeech::noun) continue;  // the noun sheets are covered by the dataset criterion
    auto synsets = synthetic_result_synsets(pos, counts);
    auto sheets = ingest::emit_result_files(pointers(synsets));
    auto parsed = ingest::parse_result_files(sheets.final_sheet, sheets.delta_sheet, pos);
    auto again = ingest::emit_result_files(pointers(parsed.synsets));
    o.require(again.final_sheet == sheets.final_sheet && again.delta_sheet == sheets.delta_sheet,
              "result sheet fixpoint");
    auto parsed2 = ingest::parse_result_files(again.final_sheet, again.delta_sheet, pos);
    o.require(parsed2.synsets == parsed.synsets && parsed2.changes == parsed.changes, "result sheet reparse");
    files += 2;
  }

  Engine e(default_roster(), "ar", logical_clock());
  e.create_tasks(generate_tasks(fx.pivot, fx.v1, {}).tasks);
  drive(e, rng, 1500);
  for (const Lexicon* lex : std::vector<const Lexicon*>{&fx.pivot, &fx.v1, &e.target()}) {
    auto doc = serialize_lexicon(*lex);
    auto back = deserialize_lexicon(doc);
    o.require(back == *lex && serialize_lexicon(back) == doc, "canonical serialization");
    ++files;
  }
  auto log = serialize_log(e.log());
  o.require(serialize_log(parse_log(log)) == log, "audit log fixpoint");

  // Exports from a project, twice.
  TempDir dir;
  auto cfg = project::ProjectConfig::load(write_sample_project(dir.path()));
  project::ingest(cfg);
  project::Project p(cfg);
  through_review(p.engine(), kNoise, "t1", "t2", translation("أصوات عالية", {{"ضجيج", "ضجيج المدينة"}}),
                 accept());
  std::size_t exported = 0;
  for (auto format : {project::ExportFormat::canonical, project::ExportFormat::result_sheets,
                      project::ExportFormat::task_sheets}) {
    auto a = project::export_project(p, format, dir / "a");
    auto b = project::export_project(p, format, dir / "b");
    o.require(a.size() == b.size(), "export file count");
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      o.require(read_text(a[i]) == read_text(b[i]), "export bytes of " + a[i].filename().string());
      ++exported;
    }
  }
  o.detail << files << " documents at fixpoint, " << exported << " export files byte-stable";
}

// ---------------------------------------------------------------------------

void replay(Outcome& o) {
  std::size_t events = 0;
  for (std::size_t i = 0; i < kReplayLogs; ++i) {
    Rng rng(1000 + i);
    auto fx = make_fixture(20 + i % 20, 500 + i);
    Engine e(i % 2 ? default_roster() : small_roster(), "ar", logical_clock());
    e.create_tasks(generate_tasks(fx.pivot, fx.v1, {}).tasks);
    drive(e, rng, 100 + 5 * i);
    events += e.log().size();
    State replayed = replay_audit_log(e.log());
    if (!(replayed == e.state()) || !(replayed.target() == e.target()) || !(replayed.tasks() == e.tasks())) {
      o.require(false, "replay of log " + std::to_string(i));
    }
    State reread = replay_audit_log(parse_log(serialize_log(e.log())));
    if (!(reread == e.state())) o.require(false, "replay of reread log " + std::to_string(i));
  }
  o.detail << kReplayLogs << " logs, " << events << " events";
}

// ---------------------------------------------------------------------------

void formula(Outcome& o) {
  Engine e = known_outcome_engine(100, 3, 10, 2);
  auto r = metrics::compute_correctness(e.log());
  const auto& lemmas = r.of(ChangeKind::lemma_added);
  o.require(lemmas.correct == 97 && lemmas.total == 100, "97 of 100 new lemmas");
  o.require(metrics::percent(lemmas.value()) == "97.00%", "97.00%");

  std::size_t correct = 0, total = 0;
  for (const auto& k : r.per_kind) {
    correct += k.correct;
    total += k.total;
  }
  o.require(r.overall.correct == correct && r.overall.total == total, "overall is the pooled ratio");
  o.require(r.overall.correct == 97 + 100 + 8 + 8 + 10 && r.overall.total == 100 + 100 + 10 + 10 + 10,
            "pooled counts");

  // The published category values and total.
  const double published[] = {97.34, 98.89, 98.76, 99.13, 96.82, 97.54};
  metrics::CorrectnessReport reported;
  for (std::size_t i = 0; i < 6; ++i) {
    reported.per_kind[i] = {static_cast<std::size_t>(std::lround(published[i] * 100)), 10000};
  }
  std::string macro = metrics::percent(reported.macro_average());
  o.require(macro == "98.08%", "published total reproduced by the category mean");
  // Pooling needs per-category denominators, which are not published; with
  // the approved contribution counts as weights it does not give 98.08%.
  const double weights[] = {2726, 8751, 9322, 12204, 236, 701};
  double num = 0, den = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    num += published[i] * weights[i];
    den += weights[i];
  }
  std::ostringstream pooled;
  pooled << std::fixed << std::setprecision(2) << num / den << "%";
  o.detail << "97/100 -> " << metrics::percent(lemmas.value()) << ", overall " << r.overall.correct << "/"
           << r.overall.total << " = " << metrics::percent(r.overall.value()) << " (pooled)"
           << "; published total 98.08% = mean of category values (" << macro
           << "), count-weighted pool would be " << pooled.str();
}

}  // namespace

int main() {
  std::cout << "acceptance\n";
  criterion("[1] dataset reproduction", kDatasetLimit, dataset);
  criterion("[2] fixture oracle (500 synsets, 2,000 events)", kOracleLimit, fixture_oracle);
  criterion("[3] state-machine exhaustion (sequences <= 8)", kExhaustionLimit, exhaustion);
  criterion("[4] invariant suite (1,000 operations)", kInvariantLimit, invariants);
  criterion("[5] round-trip determinism", kRoundTripLimit, round_trip);
  criterion("[6] replay equivalence (100 logs)", kReplayLimit, replay);
  criterion("[7] correctness formula", kFormulaLimit, formula);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
