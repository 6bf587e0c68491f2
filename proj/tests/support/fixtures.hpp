#pragma once

// Generators shared by the unit and acceptance tests.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "awn/ingest.hpp"
#include "awn/lexicon.hpp"
#include "awn/workflow.hpp"

namespace awn::testing {

using Rng = std::mt19937_64;

// Deterministic Arabic-letter word for n; distinct n give distinct words.
std::string arabic_word(std::size_t n);
// Two-word free combination.
std::string arabic_phrase(std::size_t n);
std::string english_word(std::size_t n);

struct Fixture {
  Lexicon pivot{"en", "pwn"};
  Lexicon v1{"ar", "awn"};
};

// n aligned synset pairs. Pivot synsets carry lemmas, a gloss and examples;
// V1 synsets carry 1-4 imported lemmas and nothing else. Some V1 lemmas are
// shared across synsets so lookups return several hits.
Fixture make_fixture(std::size_t n, std::uint64_t seed);

workflow::Roster default_roster();  // t1, t2, t3 translators; e expert
workflow::Roster small_roster();    // t1, t2 translators; e expert

workflow::Contribution random_contribution(const workflow::Task& task, Rng& rng);
workflow::ReviewDecision random_decision(Rng& rng, std::size_t change_count, bool allow_items);

// Picks a random task and a random action that is legal for it and applies
// it. Returns false when the chosen action was refused by the engine (the
// engine is then unchanged).
bool random_step(workflow::Engine& engine, Rng& rng);

// Steps until the log holds at least `events` events (or `max_steps` runs out).
void drive(workflow::Engine& engine, Rng& rng, std::size_t events, std::size_t max_steps = 1000000);

// Per-POS counts of the published result dataset.
struct DatasetCounts {
  std::size_t synsets = 0;
  std::size_t words = 0;
  std::size_t updated = 0;
  std::size_t new_lemmas = 0;
  std::size_t deleted_lemmas = 0;
  std::size_t glosses = 0;
  std::size_t examples = 0;
  std::size_t gaps = 0;
  std::size_t phrasets = 0;
};

std::map<PartOfSpeech, DatasetCounts> published_counts();

// Final synsets of one POS whose added/deleted components reproduce `c`
// exactly when counted from the emitted result sheets.
std::vector<Synset> synthetic_result_synsets(PartOfSpeech pos, const DatasetCounts& c);

// Random, valid task records (contribution slots filled at random).
std::vector<ingest::TaskRecord> random_task_records(std::size_t n, PartOfSpeech pos, Rng& rng);

}  // namespace awn::testing

namespace awn::testing {

// Engine holding `lemma_tasks` merge tasks, each adding one lemma (and its
// example) to an already complete V1 synset, of which the expert rejects the
// last `lemma_rejects` on the lemmas criterion; then `gap_tasks` gap claims,
// of which the last `gap_rejects` are rejected on the gap criterion. Every
// submission passes peer review.
workflow::Engine known_outcome_engine(std::size_t lemma_tasks, std::size_t lemma_rejects,
                                      std::size_t gap_tasks, std::size_t gap_rejects);

}  // namespace awn::testing
