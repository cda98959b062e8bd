#include "rankcalc/execution.hpp"

#include <omp.h>

namespace rankcalc {

int max_threads() noexcept { return omp_get_max_threads(); }

}  // namespace rankcalc
