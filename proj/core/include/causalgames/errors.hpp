#pragma once

#include <stdexcept>
#include <string>

namespace causalgames {

enum class Errc {
  invalid_scenario,
  unknown_measurement,
  not_a_history,
  determinism_violation,
  totality_violation,
  not_down_closed,
  outcome_incomplete,
  strict_co_totality_violation,
  incompatible_family,
  scenario_mismatch,
  semiring_mismatch,
  weight_sum_not_one,
  missing_measurement_in_playout,
  non_binary_outcome,
  incompatible_model,
  scenario_not_flat,
  enumeration_limit,
  parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace causalgames
