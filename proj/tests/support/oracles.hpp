#pragma once

// Brute-force reference computations. They read the audit log through its
// JSON lines rather than the typed events, so they share no code with the
// metrics module beyond the serializer.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "awn/lexicon.hpp"
#include "awn/metrics.hpp"
#include "awn/workflow.hpp"

namespace awn::testing {

// Ids of synsets holding an active sense equal (after normalization) to form.
std::vector<SynsetId> linear_lookup(const Lexicon& lexicon, const std::string& form,
                                    std::optional<PartOfSpeech> pos = std::nullopt);

metrics::ContributionStats oracle_stats(std::span<const workflow::AuditEvent> log, bool all_scope,
                                        bool any_component);

metrics::CorrectnessReport oracle_correctness(std::span<const workflow::AuditEvent> log);

// (kind, locator) pairs.
std::vector<std::pair<std::string, std::string>> oracle_findings(const Lexicon& lexicon);

// normalized form -> number of synsets with that active form.
std::map<std::string, std::size_t> oracle_degrees(const Lexicon& lexicon);

}  // namespace awn::testing
