#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "rankcalc/category.hpp"

namespace rankcalc {

/// Entry at Z is dim F(Z) for a finitely presented functor F on the presentation.
using DimensionVector = std::vector<std::size_t>;

/// Entry at Z is rank(hom_map(Z, f)), i.e. the dimension vector of Im Hom(-, f).
DimensionVector image_dim_vector(const CategoryPresentation& p, const MorphismMatrix& f,
                                 Execution exec = Execution::parallel);

/// Dimension vector of the representable Hom(-, x).
DimensionVector representable(const CategoryPresentation& p, const ObjectExpr& x);

/// [F : S_Z] for each simple S_Z with nonzero multiplicity, keyed by the anchor Z.
std::map<ObjectId, std::size_t> composition_multiplicities(const DimensionVector& dv);

std::size_t length(const DimensionVector& dv);

/// Cycles of sigma, each starting at its smallest member; ordered by that member.
std::vector<std::vector<ObjectId>> sigma_orbits(const CategoryPresentation& p);

/// orbit_index[x] = position of x's orbit in sigma_orbits(p).
std::vector<std::size_t> orbit_index(const CategoryPresentation& p);

}  // namespace rankcalc
