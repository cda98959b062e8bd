#pragma once

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "rankcalc/error.hpp"
#include "rankcalc/mesh.hpp"
#include "rankcalc/rank_function.hpp"
#include "rankcalc/text_format.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(RANKCALC_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream f(fixture_path(name), std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// The A3 fixture: mesh presentation plus the named morphisms of the worked
/// example and the non-AR triangle.
inline const rankcalc::Category& a3() {
  static const rankcalc::Category c = rankcalc::make_category(rankcalc::parse_presentation(read_fixture("a3.trc")));
  return c;
}

inline const rankcalc::Category& an(int n) {
  static const rankcalc::Category c1 = rankcalc::make_category(rankcalc::cluster_category_an(1));
  static const rankcalc::Category c2 = rankcalc::make_category(rankcalc::cluster_category_an(2));
  static const rankcalc::Category c4 = rankcalc::make_category(rankcalc::cluster_category_an(4));
  switch (n) {
    case 1: return c1;
    case 2: return c2;
    case 3: return a3();
    default: return c4;
  }
}

inline rankcalc::ObjectId id(const rankcalc::Category& c, const char* name) { return c->id(name); }

/// Random Sigma-invariant coefficients in 0..max, one draw per orbit.
inline rankcalc::RankFunction random_rank_function(const rankcalc::Category& c, std::mt19937& rng, int max = 3) {
  std::uniform_int_distribution<int> dist(0, max);
  rankcalc::Vector coef(c->size());
  std::vector<bool> done(c->size(), false);
  for (rankcalc::ObjectId x = 0; x < c->size(); ++x) {
    if (done[x]) continue;
    const int v = dist(rng);
    rankcalc::ObjectId y = x;
    do {
      coef[y] = v;
      done[y] = true;
      y = c->sigma(y);
    } while (y != x);
  }
  return rankcalc::RankFunction(c, coef);
}

/// Code of the rankcalc::Error thrown by `fn`, or nothing if it returns.
template <class F>
std::optional<rankcalc::Errc> error_code(F&& fn) {
  try {
    fn();
  } catch (const rankcalc::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Every basis morphism e_k(X, Y) of the presentation.
inline std::vector<rankcalc::MorphismMatrix> basis_corpus(const rankcalc::CategoryPresentation& p) {
  std::vector<rankcalc::MorphismMatrix> out;
  for (rankcalc::ObjectId x = 0; x < p.size(); ++x)
    for (rankcalc::ObjectId y = 0; y < p.size(); ++y)
      for (std::size_t k = 0; k < p.hom_dim(x, y); ++k) out.push_back(rankcalc::basis_morphism(p, x, y, k));
  return out;
}

}  // namespace testing
