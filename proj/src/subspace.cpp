#include "rankcalc/subspace.hpp"

#include "rankcalc/error.hpp"

namespace rankcalc {

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(Matrix::identity(ambient_dim));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_row_vectors(ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s(m.cols());
  if (m.rows() > 0) s.basis_ = row_echelon(m).reduced;
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(Errc::dimension_mismatch, "vector length differs from ambient dimension");
  // Reduce v against the echelon basis; pivot columns are the leading ones.
  Vector r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t pivot = 0;
    while (basis_(i, pivot) == 0) ++pivot;
    if (r[pivot] == 0) continue;
    const Rational factor = r[pivot];
    for (std::size_t j = pivot; j < ambient_dim(); ++j) r[j] -= factor * basis_(i, j);
  }
  return rankcalc::is_zero(r);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(Errc::dimension_mismatch, "subspace_sum: ambient dimensions differ");
  auto rows = a.basis_vectors();
  for (auto& v : b.basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), rows);
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(Errc::dimension_mismatch, "subspace_contains: ambient dimensions differ");
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!a.contains(b.basis().row_vector(i))) return false;
  return true;
}

Subspace map_subspace(const Matrix& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim())
    throw Error(Errc::dimension_mismatch, "map_subspace: map does not act on this subspace");
  std::vector<Vector> images;
  for (const auto& v : s.basis_vectors()) images.push_back(map * v);
  return Subspace::span(map.rows(), images);
}

std::optional<Vector> first_outside(const Subspace& a, const Subspace& b) {
  for (const auto& v : b.basis_vectors())
    if (!a.contains(v)) return v;
  return std::nullopt;
}

}  // namespace rankcalc
