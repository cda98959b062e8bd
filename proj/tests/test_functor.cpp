#include <map>

#include "doctest.h"
#include "rankcalc/functor.hpp"
#include "support.hpp"

using namespace rankcalc;

namespace {

const CategoryPresentation& A3() { return *testing::a3(); }

ObjectId obj(const char* name) { return A3().id(name); }

// Cycles of a permutation by walking each unvisited point.
std::vector<std::vector<ObjectId>> cycles_by_walk(const std::vector<ObjectId>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::vector<ObjectId>> out;
  for (ObjectId x = 0; x < perm.size(); ++x) {
    if (seen[x]) continue;
    std::vector<ObjectId> cycle;
    for (ObjectId y = x; !seen[y]; y = perm[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    out.push_back(cycle);
  }
  return out;
}

}  // namespace

TEST_SUITE("functor") {

TEST_CASE("image of an identity is the representable") {
  const auto& p = A3();
  for (ObjectId x = 0; x < p.size(); ++x) {
    const auto ex = ObjectExpr::single(x);
    const auto dv = image_dim_vector(p, identity_morphism(p, ex));
    CHECK(dv == representable(p, ex));
    for (ObjectId z = 0; z < p.size(); ++z) CHECK(dv[z] == p.hom_dim(z, x));
  }
}

TEST_CASE("image of zero is zero") {
  const auto& p = A3();
  const auto f = zero_morphism(p, p.parse_object("T1+T2"), p.parse_object("T3"));
  CHECK(length(image_dim_vector(p, f)) == 0);
}

TEST_CASE("image of f: T1 -> T3") {
  const auto& p = A3();
  const auto f = *p.find_morphism("f_T1_T3");
  const auto dv = image_dim_vector(p, f);
  // Brute force: Z contributes 1 when some Z -> T1 composes nonzero with f.
  for (ObjectId z = 0; z < p.size(); ++z) {
    std::size_t expected = 0;
    for (std::size_t k = 0; k < p.hom_dim(z, obj("T1")); ++k) {
      const auto phi = basis_morphism(p, z, obj("T1"), k);
      if (!is_zero(compose(p, f, phi))) expected = 1;
    }
    CHECK(dv[z] == expected);
  }
  std::size_t middle = 0;
  for (const char* z : {"T2", "ST2", "S-1T2"}) middle += dv[obj(z)];
  CHECK(middle == 0);
  CHECK(composition_multiplicities(dv) == std::map<ObjectId, std::size_t>{{obj("T1"), 1}});
}

TEST_CASE("composition multiplicities and length") {
  DimensionVector indicator(9, 0);
  indicator[4] = 1;
  CHECK(composition_multiplicities(indicator) == std::map<ObjectId, std::size_t>{{4, 1}});
  CHECK(length(indicator) == 1);
  CHECK(composition_multiplicities(DimensionVector(9, 0)).empty());
  CHECK(length(DimensionVector(9, 0)) == 0);

  const auto& p = A3();
  CHECK(length(representable(p, ObjectExpr::single(obj("T1")))) == 3);
  CHECK(length(representable(p, ObjectExpr::single(obj("T2")))) == 4);
  const auto x = p.parse_object("T1+T2");
  CHECK(length(representable(p, x)) == 7);
  CHECK(representable(p, ObjectExpr{}) == DimensionVector(9, 0));
}

TEST_CASE("sigma orbits") {
  const auto& p = A3();
  const auto orbits = sigma_orbits(p);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<ObjectId>{obj("T1"), obj("ST1"), obj("T3"), obj("ST3"), obj("S-2T1"), obj("S-1T1")});
  CHECK(orbits[1] == std::vector<ObjectId>{obj("T2"), obj("ST2"), obj("S-1T2")});
  const auto idx = orbit_index(p);
  CHECK(idx[obj("T1")] == 0);
  CHECK(idx[obj("ST2")] == 1);

  CategoryPresentation fixed({"A", "B", "C"}, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  fixed.set_sigma({0, 1, 2});
  CHECK(sigma_orbits(fixed) == std::vector<std::vector<ObjectId>>{{0}, {1}, {2}});

  const auto& a2 = *testing::an(2);
  CHECK(sigma_orbits(a2) == cycles_by_walk(a2.sigma_permutation()));
}

TEST_CASE("images are additive across triangles") {
  for (int n = 1; n <= 3; ++n) {
    const auto& p = *testing::an(n);
    for (const auto& t : p.triangles()) {
      const auto a = image_dim_vector(p, t.f);
      const auto b = image_dim_vector(p, t.g);
      const auto y = representable(p, t.f.target);
      for (ObjectId z = 0; z < p.size(); ++z) CHECK(a[z] + b[z] == y[z]);
    }
  }
}

TEST_CASE("images are sigma-equivariant and multiplicities have full mass") {
  const auto& p = A3();
  for (const auto& f : testing::basis_corpus(p)) {
    const auto dv = image_dim_vector(p, f);
    const auto sdv = image_dim_vector(p, apply_sigma(p, f));
    for (ObjectId z = 0; z < p.size(); ++z) CHECK(sdv[p.sigma(z)] == dv[z]);
    std::size_t mass = 0;
    for (const auto& [z, m] : composition_multiplicities(dv)) mass += m;
    CHECK(mass == length(dv));
    CHECK(image_dim_vector(p, f, Execution::serial) == dv);
  }
}

}  // TEST_SUITE
