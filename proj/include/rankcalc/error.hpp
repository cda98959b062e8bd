#pragma once

#include <stdexcept>
#include <string>

namespace rankcalc {

enum class Errc {
  invalid_argument,
  dimension_mismatch,
  endpoint_mismatch,
  unknown_object,
  category_mismatch,
  invalid_presentation,
  not_integral,
  generators_unknown,
  missing_value,
  not_regular,
  not_divisible,
  negative_quotient,
  infinite_orbit_quiver,
  window_overflow,
  no_solution,
  non_unique,
  axiom_violation,
  parse_error,
  io_error,
  usage,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rankcalc
