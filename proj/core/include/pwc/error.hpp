#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pwc {

enum class ErrorKind {
  incompatible_field,
  division_by_zero,
  parse,
  invalid_map,
  not_injective,
  unequal_gap_lengths,
  no_circle_gluing,
  slope_not_inverse_base,
  delta_outside_window,
  out_of_domain,
  injectivity_violation,
  prefix_too_short,
  gap_mismatch,
  inconsistent_words,
  alphabet_too_large,
  letter_out_of_range,
  invalid_iet,
  refused_uncertified,
  degenerate_branch,
  invalid_config,
  io,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports is one of these; the kind is stable and
// is what callers (and the CLI's exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pwc
