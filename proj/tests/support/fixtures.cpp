#include "fixtures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "awn/error.hpp"

namespace awn::testing {

using namespace workflow;

namespace {

const char* const kLetters[] = {"ا", "ب", "ت", "ث", "ج", "ح", "خ", "د", "ذ", "ر",
                                "ز", "س", "ش", "ص", "ض", "ط", "ظ", "ع", "غ", "ف",
                                "ق", "ك", "ل", "م", "ن", "ه", "و", "ي"};
constexpr std::size_t kLetterCount = 28;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

std::vector<std::string> translators(const Roster& roster) {
  std::vector<std::string> out;
  for (const auto& a : roster.with_role(Role::translator)) out.push_back(a.id);
  return out;
}

std::string expert(const Roster& roster) { return roster.with_role(Role::expert).front().id; }

Translate random_translation(const Task& task, Rng& rng) {
  Translate t;
  t.gloss = "شرح " + arabic_word(1000000 + pick(rng, 1000000));
  for (const Sense* s : task.v1.active_senses()) {
    if (chance(rng, 0.5)) t.senses.push_back({s->written_form, {}});
  }
  std::size_t fresh = pick(rng, 3);
  for (std::size_t i = 0; i < fresh || t.senses.empty(); ++i) {
    t.senses.push_back({arabic_word(2000000 + pick(rng, 5000000)), {}});
  }
  for (auto& s : t.senses) {
    std::size_t n = 1 + pick(rng, 2);
    for (std::size_t i = 0; i < n; ++i) s.examples.push_back("مثال " + arabic_word(pick(rng, 9000000)));
  }
  if (chance(rng, 0.2)) t.phrasets.push_back({arabic_phrase(pick(rng, 1000000)), {}});
  return t;
}

DeletionReason random_reason(Rng& rng) {
  switch (pick(rng, 4)) {
    case 0: return {DeletionKind::not_covered_by_gloss, {}};
    case 1: return {DeletionKind::duplicate, {}};
    case 2: return {DeletionKind::wrong_word_form, {}};
    default: return {DeletionKind::other, "خارج المعنى"};
  }
}

}  // namespace

std::string arabic_word(std::size_t n) {
  std::string out;
  std::size_t digits = 0;
  do {
    out += kLetters[n % kLetterCount];
    n /= kLetterCount;
    ++digits;
  } while (n > 0 || digits < 3);
  return out;
}

std::string arabic_phrase(std::size_t n) {
  return arabic_word(7000000 + 2 * n) + " " + arabic_word(7000000 + 2 * n + 1);
}

std::string english_word(std::size_t n) {
  std::string out = "w";
  do {
    out += static_cast<char>('a' + n % 26);
    n /= 26;
  } while (n > 0);
  return out;
}

Fixture make_fixture(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Fixture f;
  std::size_t shared_pool = std::max<std::size_t>(1, n / 4);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = pick(rng, 100);
    PartOfSpeech pos = r < 60 ? PartOfSpeech::noun
                       : r < 85 ? PartOfSpeech::verb
                       : r < 95 ? PartOfSpeech::adjective
                                : PartOfSpeech::adverb;
    Synset p;
    p.id = make_synset_id("pwn", pos, i + 1);
    p.pos = pos;
    p.status = LexicalizationStatus::lexicalized;
    std::size_t lemmas = 1 + pick(rng, 3);
    for (std::size_t k = 0; k < lemmas; ++k) {
      Sense s;
      s.written_form = english_word(i * 3 + k);
      s.rank = static_cast<int>(k) + 1;
      s.provenance = Provenance::imported_v1;
      p.senses.push_back(std::move(s));
    }
    p.senses.front().examples.push_back({"an example with " + p.senses.front().written_form, "en",
                                         Provenance::imported_v1});
    p.gloss = Gloss{"meaning number " + std::to_string(i), "en", Provenance::imported_v1};
    f.pivot.add(p);

    Synset v;
    v.id = make_synset_id("awn", pos, i + 1);
    v.pos = pos;
    v.pivot = p.id;
    v.status = LexicalizationStatus::lexicalized;
    std::set<std::string> forms;
    std::size_t count = 1 + pick(rng, 4);
    for (std::size_t k = 0; k < count; ++k) {
      std::string form = chance(rng, 0.3) ? arabic_word(pick(rng, shared_pool))
                                          : arabic_word(100000 + i * 10 + k);
      if (!forms.insert(form).second) continue;
      Sense s;
      s.written_form = form;
      s.rank = static_cast<int>(v.senses.size()) + 1;
      s.provenance = Provenance::imported_v1;
      v.senses.push_back(std::move(s));
    }
    f.v1.add(v);
  }
  return f;
}

Roster default_roster() {
  return Roster({{"t1", Role::translator}, {"t2", Role::translator}, {"t3", Role::translator},
                 {"e", Role::expert}});
}

Roster small_roster() {
  return Roster({{"t1", Role::translator}, {"t2", Role::translator}, {"e", Role::expert}});
}

Contribution random_contribution(const Task& task, Rng& rng) {
  std::size_t r = pick(rng, 100);
  if (r < 15) {
    MarkGap g;
    std::size_t n = 1 + pick(rng, 2);
    for (std::size_t i = 0; i < n; ++i) {
      PhrasetDraft p{arabic_phrase(pick(rng, 1000000)), {}};
      if (chance(rng, 0.5)) p.examples.push_back("مثال " + arabic_word(pick(rng, 9000000)));
      g.phrasets.push_back(std::move(p));
    }
    g.comment = "لا مقابل";
    if (chance(rng, 0.5)) g.gloss = "شرح " + arabic_word(pick(rng, 1000000));
    return g;
  }
  if (r < 60) return random_translation(task, rng);
  if (r < 90) {
    MergeV1 m;
    m.translation = random_translation(task, rng);
    for (const auto& s : m.translation.senses) {
      if (!task.v1.find_active(s.form) && chance(rng, 0.7)) m.add_lemmas.push_back(s.form);
    }
    for (const Sense* s : task.v1.active_senses()) {
      if (chance(rng, 0.3)) m.delete_lemmas.push_back({s->written_form, random_reason(rng)});
    }
    m.copy_gloss = chance(rng, 0.9);
    m.copy_examples = chance(rng, 0.9);
    return m;
  }
  return Skip{"يحتاج معجما"};
}

ReviewDecision random_decision(Rng& rng, std::size_t change_count, bool allow_items) {
  ReviewDecision d;
  if (chance(rng, 0.7)) return d;
  d.verdict = Verdict::reject;
  d.checklist = {chance(rng, 0.6), chance(rng, 0.6), chance(rng, 0.6), chance(rng, 0.6)};
  if (d.checklist.all_pass()) d.checklist.lemmas = false;
  d.comment = "يحتاج مراجعة";
  if (allow_items && change_count > 0 && chance(rng, 0.3)) {
    for (std::size_t i = 0; i < change_count; ++i) {
      if (chance(rng, 0.3)) d.rejected_items.push_back(i);
    }
  }
  if (chance(rng, 0.2)) d.counter_lemmas.push_back(arabic_word(pick(rng, 1000)));
  return d;
}

bool random_step(Engine& engine, Rng& rng) {
  const auto& tasks = engine.tasks();
  if (tasks.empty()) return false;
  auto it = tasks.begin();
  std::advance(it, static_cast<long>(pick(rng, tasks.size())));
  const Task& t = it->second;
  const std::string id = t.id;
  const std::uint64_t v = t.version;
  auto ts = translators(engine.roster());
  try {
    switch (t.state.kind) {
      case StateKind::generated:
      case StateKind::skipped: {
        std::string actor = ts[pick(rng, ts.size())];
        if (chance(rng, 0.3)) {
          engine.claim(id, actor, v);
        } else {
          engine.submit(id, actor, random_contribution(t, rng), v);
        }
        return true;
      }
      case StateKind::in_translation:
        engine.submit(id, t.state.actor, random_contribution(t, rng), v);
        return true;
      case StateKind::changes_requested:
      case StateKind::expert_rejected:
        if (chance(rng, 0.2)) {
          engine.claim(id, t.author, v);
        } else {
          engine.submit(id, t.author, random_contribution(t, rng), v);
        }
        return true;
      case StateKind::submitted: {
        if (chance(rng, 0.3)) {
          engine.assign_peer_reviewer(id, v);
          return true;
        }
        std::vector<std::string> others;
        for (const auto& a : ts) {
          if (a != t.author) others.push_back(a);
        }
        engine.peer_review(id, others[pick(rng, others.size())], random_decision(rng, t.changes.size(), false), v);
        return true;
      }
      case StateKind::peer_review:
        engine.peer_review(id, t.state.actor, random_decision(rng, t.changes.size(), false), v);
        return true;
      case StateKind::expert_review:
        engine.expert_review(id, expert(engine.roster()), random_decision(rng, t.changes.size(), true), v);
        return true;
      default: return false;
    }
  } catch (const Error&) {
    return false;
  }
}

void drive(Engine& engine, Rng& rng, std::size_t events, std::size_t max_steps) {
  for (std::size_t i = 0; i < max_steps && engine.log().size() < events; ++i) random_step(engine, rng);
}

std::map<PartOfSpeech, DatasetCounts> published_counts() {
  return {
      {PartOfSpeech::noun, {6516, 13659, 3938, 2581, 6050, 6511, 7597, 28, 364}},
      {PartOfSpeech::verb, {2507, 5878, 1364, 64, 2387, 2258, 3620, 187, 275}},
      {PartOfSpeech::adjective, {446, 761, 181, 72, 223, 446, 782, 0, 0}},
      {PartOfSpeech::adverb, {107, 262, 71, 9, 91, 107, 205, 21, 62}},
  };
}

std::vector<Synset> synthetic_result_synsets(PartOfSpeech pos, const DatasetCounts& c) {
  const std::size_t lex = c.synsets - c.gaps;
  const std::size_t updated_lex = c.updated - c.gaps;
  const std::size_t deletes_lex = c.deleted_lemmas - c.gaps;
  if (c.updated < c.gaps || c.deleted_lemmas < c.gaps || c.phrasets < c.gaps || updated_lex > lex ||
      updated_lex > deletes_lex + c.new_lemmas || c.words < c.gaps + lex + deletes_lex ||
      c.glosses > c.synsets || (lex == 0 && c.examples > 0)) {
    throw std::invalid_argument("counts cannot be realized");
  }

  std::vector<std::size_t> dels(lex, 0), adds(lex, 0), extra(lex, 0), phrasets(lex, 0);
  std::size_t d_left = deletes_lex, a_left = c.new_lemmas;
  for (std::size_t j = 0; j < updated_lex; ++j) {
    if (d_left > 0) {
      ++dels[j];
      --d_left;
    } else {
      ++adds[j];
      --a_left;
    }
  }
  for (std::size_t j = 0; d_left > 0; j = (j + 1) % updated_lex, --d_left) ++dels[j];
  for (std::size_t j = 0; a_left > 0; j = (j + 1) % updated_lex, --a_left) ++adds[j];
  std::size_t w_left = c.words - c.gaps - lex - deletes_lex;
  for (std::size_t j = 0; w_left > 0; j = (j + 1) % lex, --w_left) ++extra[j];
  std::size_t p_left = c.phrasets - c.gaps;
  for (std::size_t j = 0; p_left > 0; j = (j + 1) % lex, --p_left) ++phrasets[j];

  const std::size_t base = 10000000 * (static_cast<std::size_t>(pos) + 1);
  std::size_t counter = 0;
  auto fresh = [&] { return arabic_word(base + counter++); };
  auto fresh_phrase = [&] { return fresh() + " " + fresh(); };

  std::vector<Synset> out;
  out.reserve(c.synsets);
  for (std::size_t k = 0; k < c.synsets; ++k) {
    Synset s;
    s.id = make_synset_id("awn", pos, k + 1);
    s.pos = pos;
    s.pivot = make_synset_id("pwn", pos, k + 1);
    if (k < c.glosses) s.gloss = Gloss{"شرح " + fresh(), "ar", Provenance::added};
    if (k < c.gaps) {
      s.status = LexicalizationStatus::gap;
      Sense gone{fresh(), 1, {}, Provenance::imported_v1, DeletionReason{DeletionKind::other, "فجوة"}};
      s.senses.push_back(std::move(gone));
      s.phrasets.push_back({fresh_phrase(), "ar", {}, Provenance::added});
    } else {
      std::size_t j = k - c.gaps;
      s.status = LexicalizationStatus::lexicalized;
      int rank = 1;
      for (std::size_t i = 0; i < 1 + extra[j]; ++i) {
        s.senses.push_back({fresh(), rank++, {}, Provenance::imported_v1, std::nullopt});
      }
      for (std::size_t i = 0; i < adds[j]; ++i) {
        s.senses.push_back({fresh(), rank++, {}, Provenance::added, std::nullopt});
      }
      for (std::size_t i = 0; i < dels[j]; ++i) {
        s.senses.push_back({fresh(), rank++, {}, Provenance::imported_v1,
                            DeletionReason{DeletionKind::not_covered_by_gloss, {}}});
      }
      for (std::size_t i = 0; i < phrasets[j]; ++i) {
        s.phrasets.push_back({fresh_phrase(), "ar", {}, Provenance::added});
      }
    }
    out.push_back(std::move(s));
  }

  // Examples round-robin over every active sense.
  std::vector<Sense*> active;
  for (auto& s : out) {
    for (auto& sense : s.senses) {
      if (sense.active()) active.push_back(&sense);
    }
  }
  for (std::size_t e = 0; e < c.examples; ++e) {
    active[e % active.size()]->examples.push_back({"مثال " + fresh(), "ar", Provenance::added});
  }
  for (const auto& s : out) require_valid(s);
  return out;
}

std::vector<ingest::TaskRecord> random_task_records(std::size_t n, PartOfSpeech pos, Rng& rng) {
  // Texts that exercise the cell escapes.
  const std::vector<std::string> awkward = {"tab\there", "back\\slash", "line\nbreak",
                                            "فاصلة؛ منقوطة", "carriage\rreturn"};
  auto text = [&](std::size_t seed) {
    if (chance(rng, 0.15)) return awkward[pick(rng, awkward.size())];
    return arabic_word(seed) + " " + arabic_word(seed + 1);
  };
  auto list = [&](std::size_t max, std::size_t seed) {
    std::vector<std::string> out;
    std::size_t k = pick(rng, max + 1);
    for (std::size_t i = 0; i < k; ++i) out.push_back(text(seed * 7 + i));
    return out;
  };
  std::vector<ingest::TaskRecord> records;
  for (std::size_t i = 0; i < n; ++i) {
    ingest::TaskRecord r;
    r.row = i + 2;
    r.synset_id = make_synset_id("awn", pos, i + 1);
    r.pos = pos;
    r.pivot_lemmas = {english_word(i), english_word(i + 100000)};
    r.pivot_gloss = "meaning of " + english_word(i);
    r.pivot_examples = {"an example"};
    r.target_lemmas_v1 = list(3, i * 11);
    r.new_lemmas = list(2, i * 13);
    r.deleted_lemmas = list(2, i * 17);
    for (std::size_t k = 0; k < r.deleted_lemmas.size(); ++k) {
      r.deletion_reasons.push_back(chance(rng, 0.5) ? "duplicate" : "other:خارج المعنى");
    }
    if (chance(rng, 0.7)) r.target_gloss = text(i * 19);
    r.target_examples = list(2, i * 23);
    r.gap_flag = chance(rng, 0.1);
    r.phrasets = list(1, i * 29);
    if (chance(rng, 0.3)) r.translator_comment = text(i * 31);
    std::size_t v = pick(rng, 3);
    if (v >= 1) r.validation_status = v == 1 ? "accepted" : "rejected";
    if (v == 2) r.validator_comment = text(i * 37);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace awn::testing

namespace awn::testing {

workflow::Engine known_outcome_engine(std::size_t lemma_tasks, std::size_t lemma_rejects,
                                      std::size_t gap_tasks, std::size_t gap_rejects) {
  Lexicon pivot("en", "pwn");
  Lexicon v1("ar", "awn");
  const std::size_t n = lemma_tasks + gap_tasks;
  for (std::size_t i = 0; i < n; ++i) {
    Synset p;
    p.id = make_synset_id("pwn", PartOfSpeech::noun, i + 1);
    p.status = LexicalizationStatus::lexicalized;
    p.senses.push_back({english_word(i), 1, {}, Provenance::imported_v1, std::nullopt});
    pivot.add(p);
    Synset s;
    s.id = make_synset_id("awn", PartOfSpeech::noun, i + 1);
    s.pivot = p.id;
    s.status = LexicalizationStatus::lexicalized;
    s.gloss = Gloss{"شرح " + arabic_word(i), "ar", Provenance::imported_v1};
    s.senses.push_back({arabic_word(i), 1, {{"مثال " + arabic_word(i), "ar", Provenance::imported_v1}},
                        Provenance::imported_v1, std::nullopt});
    v1.add(s);
  }
  Engine e(default_roster(), "ar", logical_clock());
  e.create_tasks(generate_tasks(pivot, v1, {}).tasks);

  ReviewDecision lemma_reject;
  lemma_reject.verdict = Verdict::reject;
  lemma_reject.checklist.lemmas = false;
  lemma_reject.comment = "الكلمة المضافة لا تناسب المعنى";
  ReviewDecision gap_reject = lemma_reject;
  gap_reject.checklist = {false, true, true, true};
  gap_reject.comment = "المعنى معجمي";

  auto run = [&](const std::string& id, const Contribution& c, const ReviewDecision& d) {
    e.submit(id, "t1", c, e.task(id).version);
    e.peer_review(id, "t2", ReviewDecision{}, e.task(id).version);
    e.expert_review(id, "e", d, e.task(id).version);
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = make_synset_id("awn", PartOfSpeech::noun, i + 1).value;
    if (i < lemma_tasks) {
      MergeV1 m;
      std::string added = arabic_word(5000000 + i);
      m.translation.gloss = "شرح";
      m.translation.senses = {{added, {"مثال " + added}}};
      m.add_lemmas = {added};
      run(id, m, i >= lemma_tasks - lemma_rejects ? lemma_reject : ReviewDecision{});
    } else {
      MarkGap g{{{arabic_phrase(i), {}}}, "لا مقابل", std::nullopt};
      run(id, g, i >= n - gap_rejects ? gap_reject : ReviewDecision{});
    }
  }
  return e;
}

}  // namespace awn::testing
