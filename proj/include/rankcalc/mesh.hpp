#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rankcalc/category.hpp"

namespace rankcalc {

/// Vertex (p, l) of the covering quiver ZA_n, 1 <= l <= n. Arrows go
/// (p,l) -> (p,l+1) and (p,l) -> (p+1,l-1); tau(p,l) = (p-1,l).
struct MeshVertex {
  long p = 0;
  int l = 1;

  long level() const noexcept { return 2 * p + l; }
  friend auto operator<=>(const MeshVertex&, const MeshVertex&) = default;
};

using MeshPath = std::vector<MeshVertex>;

/// The covering ZA_n together with the automorphism phi = tau^(-a) Sigma^b
/// whose orbits become the objects of the orbit category. Sigma on the
/// covering is the derived-category shift (p,l) -> (p+l, n+1-l).
struct TranslationQuiverSpec {
  int n = 1;
  long tau_inverse_power = 1;
  long sigma_power = 1;
  /// Search window in tau-steps; defaults to 4 x (number of orbit vertices).
  std::optional<std::size_t> window;
};

/// Hom(x, -) on the mesh category of ZA_n: each vertex carries a basis of
/// residual paths from x, each arrow its matrix in those bases.
struct MeshHomTable {
  MeshVertex source;
  std::map<MeshVertex, std::vector<MeshPath>> basis;
  std::map<std::pair<MeshVertex, MeshVertex>, Matrix> arrow_maps;

  std::size_t dim(const MeshVertex& v) const;
  /// Post-composes the element `value` of Hom(x, path.front()) with the path.
  Vector walk(const MeshPath& path, Vector value) const;
};

bool is_vertex(int n, const MeshVertex& v) noexcept;
MeshVertex tau(const MeshVertex& v) noexcept;
MeshVertex tau_inverse(const MeshVertex& v) noexcept;
MeshVertex sigma_shift(int n, const MeshVertex& v) noexcept;
MeshVertex sigma_shift_inverse(int n, const MeshVertex& v) noexcept;
/// Direct predecessors of v in ZA_n, lower l first.
std::vector<MeshVertex> predecessors(int n, const MeshVertex& v);

/// Hom(x, -) on levels level(x) .. level(x) + 2 * tau_steps. Throws
/// WindowOverflow if the functor has not died out by the end of the window.
MeshHomTable covering_hom(int n, const MeshVertex& x, std::size_t tau_steps);

CategoryPresentation build_mesh_category(const TranslationQuiverSpec& spec, Execution exec = Execution::parallel);

/// Orbit category of D^b(kA_n) under tau^(-1) Sigma.
CategoryPresentation cluster_category_an(int n, std::optional<std::size_t> window = std::nullopt,
                                         Execution exec = Execution::parallel);

}  // namespace rankcalc
