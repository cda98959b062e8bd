#include "rankcalc/solve.hpp"

#include <algorithm>
#include <optional>

#include "rankcalc/error.hpp"

namespace rankcalc {

const char* solve_status_name(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::unique: return "Unique";
    case SolveStatus::no_solution: return "NoSolution";
    case SolveStatus::non_unique: return "NonUnique";
  }
  return "?";
}

namespace {

// Region {t in Q^k : g_i . t >= c_i} for k in {1, 2}.
struct Constraint {
  Vector g;
  Rational c;
};

enum class Shape { empty, point, many };

struct Region {
  Shape shape = Shape::empty;
  bool bounded = true;
  Vector sample;                 // a feasible t when not empty
  std::vector<Vector> vertices;  // bounded case: the polytope is their hull
};

Rational dot(const Vector& a, const Vector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool feasible(const std::vector<Constraint>& cs, const Vector& t) {
  return std::all_of(cs.begin(), cs.end(),
                     [&](const Constraint& k) { return dot(k.g, t) >= k.c; });
}

Region analyze_line(const std::vector<Constraint>& cs) {
  std::optional<Rational> lo, hi;
  Region r;
  for (const auto& k : cs) {
    const Rational& g = k.g[0];
    if (g == 0) {
      if (k.c > 0) return r;
    } else if (g > 0) {
      Rational b = k.c / g;
      if (!lo || b > *lo) lo = b;
    } else {
      Rational b = k.c / g;
      if (!hi || b < *hi) hi = b;
    }
  }
  if (lo && hi && *lo > *hi) return r;
  r.bounded = lo && hi;
  if (lo) r.sample = {*lo};
  else if (hi) r.sample = {*hi};
  else r.sample = {Rational(0)};
  if (r.bounded) {
    r.vertices = {{*lo}};
    if (*hi != *lo) r.vertices.push_back({*hi});
  }
  r.shape = (r.bounded && *lo == *hi) ? Shape::point : Shape::many;
  return r;
}

Region analyze_plane(const std::vector<Constraint>& cs) {
  Region r;
  std::vector<const Constraint*> active;
  for (const auto& k : cs) {
    if (k.g[0] == 0 && k.g[1] == 0) {
      if (k.c > 0) return r;
    } else {
      active.push_back(&k);
    }
  }
  // Parallel normals: the region contains a full line if it is nonempty.
  bool rank_two = false;
  for (std::size_t i = 0; i < active.size() && !rank_two; ++i)
    for (std::size_t j = i + 1; j < active.size() && !rank_two; ++j)
      rank_two = active[i]->g[0] * active[j]->g[1] - active[i]->g[1] * active[j]->g[0] != 0;
  if (!rank_two) {
    if (active.empty()) {
      r.shape = Shape::many;
      r.bounded = false;
      r.sample = {Rational(0), Rational(0)};
      return r;
    }
    const Vector u = active.front()->g;
    const Rational uu = dot(u, u);
    std::vector<Constraint> projected;
    for (const auto* k : active) {
      // g = lambda u, so g.t >= c reads lambda s >= c with s = u.t.
      const Rational lambda = u[0] != 0 ? k->g[0] / u[0] : k->g[1] / u[1];
      projected.push_back({{lambda}, k->c});
    }
    const Region line = analyze_line(projected);
    if (line.shape == Shape::empty) return r;
    r.shape = Shape::many;
    r.bounded = false;
    r.sample = {line.sample[0] * u[0] / uu, line.sample[0] * u[1] / uu};
    return r;
  }
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      const auto& a = *active[i];
      const auto& b = *active[j];
      const Rational det = a.g[0] * b.g[1] - a.g[1] * b.g[0];
      if (det == 0) continue;
      Vector t = {(a.c * b.g[1] - a.g[1] * b.c) / det, (a.g[0] * b.c - a.c * b.g[0]) / det};
      if (!feasible(cs, t)) continue;
      if (std::find(r.vertices.begin(), r.vertices.end(), t) == r.vertices.end())
        r.vertices.push_back(std::move(t));
    }
  }
  if (r.vertices.empty()) return r;
  r.sample = r.vertices.front();
  for (const auto* k : active) {
    for (int sign : {1, -1}) {
      const Vector d = {-k->g[1] * sign, k->g[0] * sign};
      bool recedes = true;
      for (const auto* other : active) recedes = recedes && dot(other->g, d) >= 0;
      if (recedes) r.bounded = false;
    }
  }
  r.shape = (r.bounded && r.vertices.size() == 1) ? Shape::point : Shape::many;
  return r;
}

Vector point_at(const Vector& x0, const std::vector<Vector>& kernel, const Vector& t) {
  Vector x = x0;
  for (std::size_t j = 0; j < kernel.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += t[j] * kernel[j][i];
  return x;
}

bool admissible(const Vector& x, bool integral) {
  for (const auto& v : x) {
    if (v < 0) return false;
    if (integral && !is_integer(v)) return false;
  }
  return true;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

constexpr long kEnumerationCap = 1'000'000;

// Integral points of a bounded region, found by enumerating the integer
// values of k coordinates of x that determine t. Stops after two hits.
std::vector<Vector> integral_points(const Vector& x0, const std::vector<Vector>& kernel,
                                    const std::vector<Constraint>& cs, const Region& region,
                                    bool& exhausted) {
  const std::size_t k = kernel.size();
  const std::size_t n = x0.size();
  std::vector<std::size_t> coords;
  if (k == 1) {
    for (std::size_t i = 0; i < n && coords.empty(); ++i)
      if (kernel[0][i] != 0) coords.push_back(i);
  } else {
    for (std::size_t i = 0; i < n && coords.empty(); ++i)
      for (std::size_t j = i + 1; j < n && coords.empty(); ++j)
        if (kernel[0][i] * kernel[1][j] - kernel[1][i] * kernel[0][j] != 0) coords = {i, j};
  }
  std::vector<Integer> lo(k), hi(k);
  for (std::size_t a = 0; a < k; ++a) {
    std::optional<Rational> mn, mx;
    for (const auto& v : region.vertices) {
      const Rational xi = point_at(x0, kernel, v)[coords[a]];
      if (!mn || xi < *mn) mn = xi;
      if (!mx || xi > *mx) mx = xi;
    }
    lo[a] = ceil_of(*mn);
    hi[a] = floor_of(*mx);
  }
  std::vector<Vector> found;
  exhausted = true;
  long visited = 0;
  auto try_values = [&](const std::vector<Integer>& m) {
    // Solve for t from the chosen coordinates.
    Vector t(k);
    if (k == 1) {
      t[0] = (Rational(m[0]) - x0[coords[0]]) / kernel[0][coords[0]];
    } else {
      const std::size_t i = coords[0], j = coords[1];
      const Rational a = kernel[0][i], b = kernel[1][i], c = kernel[0][j], d = kernel[1][j];
      const Rational ri = Rational(m[0]) - x0[i], rj = Rational(m[1]) - x0[j];
      const Rational det = a * d - b * c;
      t = {(ri * d - b * rj) / det, (a * rj - c * ri) / det};
    }
    if (!feasible(cs, t)) return;
    Vector x = point_at(x0, kernel, t);
    if (admissible(x, true)) found.push_back(std::move(x));
  };
  if (k == 1) {
    for (Integer m = lo[0]; m <= hi[0] && found.size() < 2; ++m) {
      if (++visited > kEnumerationCap) { exhausted = false; break; }
      try_values({m});
    }
  } else {
    for (Integer m0 = lo[0]; m0 <= hi[0] && found.size() < 2 && exhausted; ++m0) {
      for (Integer m1 = lo[1]; m1 <= hi[1] && found.size() < 2; ++m1) {
        if (++visited > kEnumerationCap) { exhausted = false; break; }
        try_values({m0, m1});
      }
    }
  }
  return found;
}

}  // namespace

SolveReport solve_nonneg(const Matrix& a, const Vector& b, bool integral) {
  if (a.rows() != b.size()) throw Error(Errc::dimension_mismatch, "solve_nonneg: rhs length differs from row count");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto ech = row_echelon(aug);
  SolveReport report;
  if (!ech.pivots.empty() && ech.pivots.back() == n) return report;  // inconsistent

  Vector x0(n);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) x0[ech.pivots[i]] = ech.reduced(i, n);
  const Matrix ker = nullspace(a);
  std::vector<Vector> kernel;
  for (std::size_t i = 0; i < ker.rows(); ++i) kernel.push_back(ker.row_vector(i));

  if (kernel.empty()) {
    if (admissible(x0, integral)) {
      report.status = SolveStatus::unique;
      report.solution = std::move(x0);
      report.certified = true;
    }
    return report;
  }
  report.kernel = kernel;
  if (kernel.size() > 2) {
    report.status = SolveStatus::non_unique;
    report.solution = std::move(x0);
    report.certified = admissible(report.solution, integral);
    return report;
  }

  std::vector<Constraint> cs;
  for (std::size_t i = 0; i < n; ++i) {
    Vector g(kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j) g[j] = kernel[j][i];
    cs.push_back({std::move(g), -x0[i]});
  }
  const Region region = kernel.size() == 1 ? analyze_line(cs) : analyze_plane(cs);
  if (region.shape == Shape::empty) return report;

  if (!integral) {
    report.solution = point_at(x0, kernel, region.sample);
    report.certified = true;
    if (region.shape == Shape::point) {
      report.status = SolveStatus::unique;
      report.kernel.clear();
    } else {
      report.status = SolveStatus::non_unique;
    }
    return report;
  }

  if (!region.bounded) {
    // Integral points of an unbounded region are not searched for.
    report.status = SolveStatus::non_unique;
    report.solution = point_at(x0, kernel, region.sample);
    report.certified = admissible(report.solution, true);
    return report;
  }
  bool exhausted = true;
  auto points = integral_points(x0, kernel, cs, region, exhausted);
  if (points.empty()) {
    if (!exhausted) {
      report.status = SolveStatus::non_unique;
      report.solution = point_at(x0, kernel, region.sample);
    }
    return report;
  }
  report.solution = points.front();
  report.certified = true;
  if (points.size() == 1 && exhausted) {
    report.status = SolveStatus::unique;
    report.kernel.clear();
  } else {
    report.status = SolveStatus::non_unique;
  }
  return report;
}

}  // namespace rankcalc
