#pragma once

#include <vector>

#include "rankcalc/matrix.hpp"

namespace rankcalc {

enum class SolveStatus { unique, no_solution, non_unique };

const char* solve_status_name(SolveStatus s) noexcept;

/// Outcome of solve_nonneg. For `unique`, `solution` is the only admissible
/// point. For `non_unique`, `solution` is a particular solution and `kernel`
/// a basis of the homogeneous solutions; `certified` tells whether the
/// particular solution was checked to be admissible (non-negative, and
/// integral when requested).
struct SolveReport {
  SolveStatus status = SolveStatus::no_solution;
  Vector solution;
  std::vector<Vector> kernel;
  bool certified = false;
};

/// Solves a x = b for x >= 0 (optionally integral) exactly. Admissibility is
/// decided over the affine solution set when the kernel has dimension at most
/// two; above that the report is `non_unique` and uncertified.
SolveReport solve_nonneg(const Matrix& a, const Vector& b, bool integral);

}  // namespace rankcalc
