#include "rankcalc/functor.hpp"

#include <numeric>

namespace rankcalc {

DimensionVector image_dim_vector(const CategoryPresentation& p, const MorphismMatrix& f, Execution exec) {
  check_shape(p, f);
  return map_indices<std::size_t>(
      p.size(), [&](std::size_t z) { return rank(hom_map(p, z, f)); }, exec);
}

DimensionVector representable(const CategoryPresentation& p, const ObjectExpr& x) {
  DimensionVector dv(p.size());
  for (ObjectId z = 0; z < p.size(); ++z) dv[z] = p.hom_dim(z, x);
  return dv;
}

std::map<ObjectId, std::size_t> composition_multiplicities(const DimensionVector& dv) {
  std::map<ObjectId, std::size_t> out;
  for (ObjectId z = 0; z < dv.size(); ++z)
    if (dv[z] != 0) out[z] = dv[z];
  return out;
}

std::size_t length(const DimensionVector& dv) { return std::accumulate(dv.begin(), dv.end(), std::size_t{0}); }

std::vector<std::vector<ObjectId>> sigma_orbits(const CategoryPresentation& p) {
  std::vector<std::vector<ObjectId>> orbits;
  std::vector<bool> seen(p.size(), false);
  for (ObjectId x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    std::vector<ObjectId> cycle;
    for (ObjectId y = x; !seen[y]; y = p.sigma(y)) {
      seen[y] = true;
      cycle.push_back(y);
    }
    orbits.push_back(std::move(cycle));
  }
  return orbits;
}

std::vector<std::size_t> orbit_index(const CategoryPresentation& p) {
  std::vector<std::size_t> index(p.size());
  const auto orbits = sigma_orbits(p);
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (auto x : orbits[k]) index[x] = k;
  return index;
}

}  // namespace rankcalc
