#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rankcalc/matrix.hpp"

namespace rankcalc {

/// A linear subspace of Q^n stored by its reduced row-echelon basis, so two
/// subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : basis_(0, ambient_dim) {}

  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  Matrix basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Subspace& b);

/// Image of a subspace under a linear map given as a matrix acting on columns.
Subspace map_subspace(const Matrix& map, const Subspace& s);

/// First basis vector of `b` that is not in `a`, if any.
std::optional<Vector> first_outside(const Subspace& a, const Subspace& b);

}  // namespace rankcalc
