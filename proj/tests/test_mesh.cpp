#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "rankcalc/functor.hpp"
#include "rankcalc/mesh.hpp"
#include "support.hpp"

using namespace rankcalc;
using testing::error_code;

namespace {

// Diagonals of a convex m-gon, as vertex pairs i < j that are not adjacent.
std::vector<std::pair<int, int>> diagonals(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j)
      if (!(i == 0 && j == m - 1)) out.emplace_back(i, j);
  return out;
}

// Orbit sizes of the diagonals under rotation, sorted.
std::vector<std::size_t> rotation_orbit_sizes(int m) {
  auto ds = diagonals(m);
  std::vector<bool> seen(ds.size(), false);
  std::vector<std::size_t> sizes;
  auto normal = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (seen[i]) continue;
    std::size_t size = 0;
    auto d = ds[i];
    do {
      const auto k = std::find(ds.begin(), ds.end(), d) - ds.begin();
      seen[k] = true;
      ++size;
      d = normal((d.first + 1) % m, (d.second + 1) % m);
    } while (d != ds[i]);
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::size_t> sorted_orbit_sizes(const CategoryPresentation& p) {
  std::vector<std::size_t> sizes;
  for (const auto& o : sigma_orbits(p)) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Hom(x, y) in the mesh category of ZA_n is one-dimensional exactly on the
// rectangle spanned by the two sectional paths starting at x.
std::size_t hammock_dim(int n, const MeshVertex& x, const MeshVertex& y) {
  for (int a = 0; a <= n - x.l; ++a)
    for (int b = 0; b <= x.l - 1; ++b)
      if (y.p == x.p + b && y.l == x.l + a - b) return 1;
  return 0;
}

}  // namespace

TEST_SUITE("mesh") {

TEST_CASE("covering quiver geometry") {
  const MeshVertex v{2, 1};
  CHECK(v.level() == 5);
  CHECK(tau(v) == MeshVertex{1, 1});
  CHECK(tau_inverse(tau(v)) == v);
  for (int n = 1; n <= 5; ++n)
    for (int l = 1; l <= n; ++l) {
      const MeshVertex x{3, l};
      CHECK(sigma_shift_inverse(n, sigma_shift(n, x)) == x);
      CHECK(is_vertex(n, sigma_shift(n, x)));
      // Sigma^2 = tau^-(n+1) on ZA_n.
      CHECK(sigma_shift(n, sigma_shift(n, x)) == MeshVertex{x.p + n + 1, l});
    }
  CHECK_FALSE(is_vertex(3, {0, 4}));
  CHECK_FALSE(is_vertex(3, {0, 0}));
  CHECK(predecessors(3, {1, 2}) == std::vector<MeshVertex>{{1, 1}, {0, 3}});
  CHECK(predecessors(3, {1, 1}) == std::vector<MeshVertex>{{0, 2}});
}

TEST_CASE("covering homs match the hammock rectangle") {
  for (int n = 1; n <= 6; ++n) {
    for (int l = 1; l <= n; ++l) {
      const MeshVertex x{0, l};
      const auto table = covering_hom(n, x, n + 2);
      for (long p = -2; p <= n + 2; ++p)
        for (int m = 1; m <= n; ++m) {
          const MeshVertex y{p, m};
          CAPTURE(n);
          CAPTURE(l);
          CAPTURE(p);
          CAPTURE(m);
          CHECK(table.dim(y) == hammock_dim(n, x, y));
        }
    }
  }
}

TEST_CASE("walking a path through zero levels gives zero") {
  const auto table = covering_hom(3, {0, 1}, 5);
  const Vector one{1};
  CHECK(table.walk({{0, 1}, {0, 2}}, one) == Vector{1});
  CHECK(is_zero(table.walk({{0, 1}, {0, 2}, {1, 1}}, one)));  // the mesh at (1,1)
  CHECK(error_code([] { covering_hom(3, {0, 4}, 3); }) == Errc::invalid_argument);
}

TEST_CASE("window overflow") {
  CHECK(error_code([] { covering_hom(4, {0, 1}, 1); }) == Errc::window_overflow);
  CHECK(error_code([] { cluster_category_an(3, 1); }) == Errc::window_overflow);
}

TEST_CASE("an identification that does not move levels is refused") {
  TranslationQuiverSpec spec;
  spec.n = 3;
  spec.tau_inverse_power = -2;
  spec.sigma_power = 1;
  CHECK(error_code([&] { build_mesh_category(spec); }) == Errc::infinite_orbit_quiver);
  spec.n = 0;
  CHECK(error_code([&] { build_mesh_category(spec); }) == Errc::invalid_argument);
}

TEST_CASE("cluster categories: object counts and orbits against polygon diagonals") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const auto p = cluster_category_an(n);
    CHECK(p.size() == diagonals(n + 3).size());
    CHECK(p.size() == static_cast<std::size_t>(n * (n + 3) / 2));
    const auto sizes = rotation_orbit_sizes(n + 3);
    CHECK(sorted_orbit_sizes(p) == sizes);
    const std::size_t period = std::accumulate(sizes.begin(), sizes.end(), std::size_t{1},
                                               [](std::size_t a, std::size_t b) { return std::lcm(a, b); });
    REQUIRE(p.period());
    CHECK(*p.period() == period);
    CHECK(validate(p).ok());
    CHECK(p.triangles().size() == p.size());
  }
}

TEST_CASE("A3 shape") {
  const auto p = cluster_category_an(3);
  CHECK(p.size() == 9);
  CHECK(p.period() == 6u);
  CHECK(p.object_names() == std::vector<std::string>{"T1", "T2", "T3", "ST1", "ST2", "ST3", "S-1T1", "S-1T2", "S-2T1"});
  CHECK(p.generators().every_indecomposable);
  const auto orbits = sigma_orbits(p);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].size() == 6);
  CHECK(orbits[1].size() == 3);
  for (const auto& t : p.triangles()) CHECK(check_triangle(p, t).ok());
  // AR triangles come in the same two orbits: one per object.
  CHECK(p.triangles().size() == 9);
}

TEST_CASE("generators are declared only for A3") {
  CHECK_FALSE(cluster_category_an(1).generators().declared());
  CHECK_FALSE(cluster_category_an(2).generators().declared());
  CHECK_FALSE(cluster_category_an(4).generators().declared());
}

TEST_CASE("A1: two objects and no maps between them") {
  const auto p = cluster_category_an(1);
  REQUIRE(p.size() == 2);
  CHECK(p.hom_dim(0, 0) == 1);
  CHECK(p.hom_dim(1, 1) == 1);
  CHECK(p.hom_dim(0, 1) == 0);
  CHECK(p.hom_dim(1, 0) == 0);
  CHECK(p.sigma(0) == 1);
  CHECK(p.sigma(1) == 0);
}

TEST_CASE("hom dimensions are phi-equivariant") {
  for (int n = 1; n <= 4; ++n) {
    const auto p = cluster_category_an(n);
    for (ObjectId x = 0; x < p.size(); ++x)
      for (ObjectId y = 0; y < p.size(); ++y) CHECK(p.hom_dim(x, y) == p.hom_dim(p.sigma(x), p.sigma(y)));
  }
}

TEST_CASE("A3: rim orbit sums of hom dimensions are constant 2") {
  const auto p = cluster_category_an(3);
  const auto orbits = sigma_orbits(p);
  for (ObjectId x = 0; x < p.size(); ++x) {
    std::size_t rim = 0, middle = 0;
    for (ObjectId z : orbits[0]) rim += p.hom_dim(z, x);
    for (ObjectId z : orbits[1]) middle += p.hom_dim(z, x);
    CHECK(rim == 2);
    CHECK(middle == (orbits[1].end() != std::find(orbits[1].begin(), orbits[1].end(), x) ? 2u : 1u));
  }
}

TEST_CASE("the builder output equals the shipped A3 fixture presentation") {
  const auto built = cluster_category_an(3);
  const auto& fixture = *testing::a3();
  // The fixture only adds named morphisms and one extra triangle.
  for (ObjectId x = 0; x < 9; ++x)
    for (ObjectId y = 0; y < 9; ++y) CHECK(built.hom_dim(x, y) == fixture.hom_dim(x, y));
  CHECK(built.sigma_permutation() == fixture.sigma_permutation());
}

TEST_CASE("other identifications of ZA_n") {
  // tau^-2 Sigma on ZA_2 moves levels by 7, one vertex per level.
  TranslationQuiverSpec spec;
  spec.n = 2;
  spec.tau_inverse_power = 2;
  spec.sigma_power = 1;
  const auto p = build_mesh_category(spec);
  CHECK(p.size() == 7);
  CHECK(validate(p).ok());
  for (const auto& t : p.triangles()) CHECK(check_triangle(p, t).ok());
}

TEST_CASE("serial and parallel builds agree") {
  for (int n = 1; n <= 4; ++n) CHECK(cluster_category_an(n, std::nullopt, Execution::serial) == cluster_category_an(n));
}

}  // TEST_SUITE
