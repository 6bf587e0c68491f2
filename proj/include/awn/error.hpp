#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace awn {

// Every error kind raised by any module. The service layer maps each code to
// exactly one HTTP status and one wire string.
enum class ErrorCode {
  // lexicon-core
  duplicate_id,
  invariant_violation,
  unknown_synset,
  unknown_rank,
  already_deleted,
  // ingest
  header_mismatch,
  missing_id,
  bad_pos,
  empty_pivot_synset,
  malformed_cell,
  id_in_delta_missing_from_final,
  conflicting_gap_flag,
  // workflow
  unknown_task,
  unknown_actor,
  wrong_role,
  illegal_state,
  self_review_forbidden,
  reject_without_comment,
  invalid_decision,
  stale_version,
  gap_in_sequence,
  illegal_transition_in_log,
  // metrics
  illegal_log,
  // service / cli
  io,
  invalid_config,
  no_project,
  storage_corruption,
  port_in_use,
  bad_request,
  not_found,
};

std::string_view to_string(ErrorCode code);
ErrorCode error_code_from_string(std::string_view text);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }
  // Path of the offending input, e.g. "contribution.phrasets" or "row 12".
  const std::string& field() const noexcept { return field_; }

private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace awn
