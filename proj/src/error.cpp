#include "rankcalc/error.hpp"

namespace rankcalc {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::endpoint_mismatch: return "EndpointMismatch";
    case Errc::unknown_object: return "UnknownObject";
    case Errc::category_mismatch: return "CategoryMismatch";
    case Errc::invalid_presentation: return "InvalidPresentation";
    case Errc::not_integral: return "NotIntegral";
    case Errc::generators_unknown: return "GeneratorsUnknown";
    case Errc::missing_value: return "MissingValue";
    case Errc::not_regular: return "NotRegular";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::negative_quotient: return "NegativeQuotient";
    case Errc::infinite_orbit_quiver: return "InfiniteOrbitQuiver";
    case Errc::window_overflow: return "WindowOverflow";
    case Errc::no_solution: return "NoSolution";
    case Errc::non_unique: return "NonUnique";
    case Errc::axiom_violation: return "AxiomViolation";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::usage: return "UsageError";
  }
  return "Unknown";
}

}  // namespace rankcalc
