#pragma once

#include <stdexcept>
#include <string>

namespace kgr {

enum class Errc {
  // skeleton validation
  invalid_skeleton,
  missing_square,
  duplicate_square,
  non_bijective_squares,
  cube_condition_failure,
  // path arithmetic
  not_composable,
  degree_out_of_range,
  range_mismatch,
  invalid_color,
  // set and module operations
  not_in_slice,
  not_contained,
  slice_mismatch,
  degree_order,
  degree_too_small,
  not_exhaustive,
  // dynamics and oracle
  regularity_required,
  insufficient_degree,
  source_present,
  // input handling
  parse_error,
  bad_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace kgr
