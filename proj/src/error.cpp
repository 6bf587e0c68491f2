#include "awn/error.hpp"

#include <array>
#include <utility>

namespace awn {

namespace {

constexpr std::array kNames{
    std::pair{ErrorCode::duplicate_id, std::string_view{"duplicate-id"}},
    std::pair{ErrorCode::invariant_violation, std::string_view{"invariant-violation"}},
    std::pair{ErrorCode::unknown_synset, std::string_view{"unknown-synset"}},
    std::pair{ErrorCode::unknown_rank, std::string_view{"unknown-rank"}},
    std::pair{ErrorCode::already_deleted, std::string_view{"already-deleted"}},
    std::pair{ErrorCode::header_mismatch, std::string_view{"header-mismatch"}},
    std::pair{ErrorCode::missing_id, std::string_view{"missing-id"}},
    std::pair{ErrorCode::bad_pos, std::string_view{"bad-pos"}},
    std::pair{ErrorCode::empty_pivot_synset, std::string_view{"empty-pivot-synset"}},
    std::pair{ErrorCode::malformed_cell, std::string_view{"malformed-cell"}},
    std::pair{ErrorCode::id_in_delta_missing_from_final,
              std::string_view{"id-in-delta-missing-from-final"}},
    std::pair{ErrorCode::conflicting_gap_flag, std::string_view{"conflicting-gap-flag"}},
    std::pair{ErrorCode::unknown_task, std::string_view{"unknown-task"}},
    std::pair{ErrorCode::unknown_actor, std::string_view{"unknown-actor"}},
    std::pair{ErrorCode::wrong_role, std::string_view{"wrong-role"}},
    std::pair{ErrorCode::illegal_state, std::string_view{"illegal-state"}},
    std::pair{ErrorCode::self_review_forbidden, std::string_view{"self-review-forbidden"}},
    std::pair{ErrorCode::reject_without_comment, std::string_view{"reject-without-comment"}},
    std::pair{ErrorCode::invalid_decision, std::string_view{"invalid-decision"}},
    std::pair{ErrorCode::stale_version, std::string_view{"stale-version"}},
    std::pair{ErrorCode::gap_in_sequence, std::string_view{"gap-in-sequence"}},
    std::pair{ErrorCode::illegal_transition_in_log,
              std::string_view{"illegal-transition-in-log"}},
    std::pair{ErrorCode::illegal_log, std::string_view{"illegal-log"}},
    std::pair{ErrorCode::io, std::string_view{"io"}},
    std::pair{ErrorCode::invalid_config, std::string_view{"invalid-config"}},
    std::pair{ErrorCode::no_project, std::string_view{"no-project"}},
    std::pair{ErrorCode::storage_corruption, std::string_view{"storage-corruption"}},
    std::pair{ErrorCode::port_in_use, std::string_view{"port-in-use"}},
    std::pair{ErrorCode::bad_request, std::string_view{"bad-request"}},
    std::pair{ErrorCode::not_found, std::string_view{"not-found"}},
};

}  // namespace

std::string_view to_string(ErrorCode code) {
  for (const auto& [c, name] : kNames) {
    if (c == code) return name;
  }
  return "unknown";
}

ErrorCode error_code_from_string(std::string_view text) {
  for (const auto& [c, name] : kNames) {
    if (name == text) return c;
  }
  throw Error(ErrorCode::bad_request, "unknown error code: " + std::string(text));
}

}  // namespace awn
