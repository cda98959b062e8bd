#include "rankcalc/rank_function.hpp"

#include <algorithm>

#include "rankcalc/error.hpp"
#include "rankcalc/functor.hpp"

namespace rankcalc {

Category make_category(CategoryPresentation p) { return std::make_shared<const CategoryPresentation>(std::move(p)); }

RankFunction::RankFunction(Category category, Vector coefficients)
    : category_(std::move(category)), coefficients_(std::move(coefficients)) {
  if (!category_) throw Error(Errc::invalid_argument, "rank function needs a category");
  const auto& p = *category_;
  if (coefficients_.size() != p.size())
    throw Error(Errc::dimension_mismatch, "expected " + std::to_string(p.size()) + " coefficients");
  for (ObjectId z = 0; z < p.size(); ++z) {
    if (coefficients_[z] < 0)
      throw Error(Errc::invalid_argument, "negative coefficient at " + p.name(z));
    if (coefficients_[p.sigma(z)] != coefficients_[z])
      throw Error(Errc::invalid_argument, "coefficients are not constant on the Sigma-orbit of " + p.name(z));
  }
}

RankFunction RankFunction::zero(Category category) {
  const std::size_t n = category->size();
  return RankFunction(std::move(category), Vector(n));
}

RankFunction RankFunction::orbit_indicator(Category category, ObjectId x, Rational value) {
  Vector c(category->size());
  ObjectId y = x;
  do {
    c.at(y) = value;
    y = category->sigma(y);
  } while (y != x);
  return RankFunction(std::move(category), std::move(c));
}

bool RankFunction::integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& c) { return is_integer(c); });
}

bool RankFunction::is_zero() const { return rankcalc::is_zero(coefficients_); }

RankFunction RankFunction::operator+(const RankFunction& other) const {
  if (category_ != other.category_) throw Error(Errc::category_mismatch, "rank functions on different categories");
  Vector c = coefficients_;
  for (std::size_t z = 0; z < c.size(); ++z) c[z] += other.coefficients_[z];
  return RankFunction(category_, std::move(c));
}

RankFunction RankFunction::scaled(const Rational& k) const {
  Vector c = coefficients_;
  for (auto& x : c) x *= k;
  return RankFunction(category_, std::move(c));
}

Rational evaluate(const RankFunction& rho, const MorphismMatrix& f, Execution exec) {
  const auto dv = image_dim_vector(rho.category(), f, exec);
  Rational total;
  for (ObjectId z = 0; z < dv.size(); ++z)
    if (dv[z] != 0) total += rho.coefficient(z) * static_cast<unsigned long>(dv[z]);
  return total;
}

Rational evaluate_on_object(const RankFunction& rho, const ObjectExpr& x) {
  const auto& p = rho.category();
  for (auto v : x.summands())
    if (v >= p.size()) throw Error(Errc::category_mismatch, "object does not live in this category");
  Rational total;
  for (ObjectId z = 0; z < p.size(); ++z) total += rho.coefficient(z) * static_cast<unsigned long>(p.hom_dim(z, x));
  return total;
}

Vector object_values(const RankFunction& rho) {
  Vector v(rho.category().size());
  for (ObjectId x = 0; x < v.size(); ++x) v[x] = evaluate_on_object(rho, ObjectExpr::single(x));
  return v;
}

RankFunction canonical_length(Category category) {
  const std::size_t n = category->size();
  return RankFunction(std::move(category), Vector(n, Rational(1)));
}

ObjectValueSolution from_object_values(Category category, const Vector& values, bool integral) {
  const auto& p = *category;
  if (values.size() != p.size()) throw Error(Errc::dimension_mismatch, "one value per indecomposable expected");
  const auto orbits = sigma_orbits(p);
  // Unknowns are the orbit coefficients, so Sigma-invariance holds by construction.
  Matrix a(p.size(), orbits.size());
  for (ObjectId x = 0; x < p.size(); ++x)
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (auto z : orbits[o]) a(x, o) += static_cast<unsigned long>(p.hom_dim(z, x));
  const auto report = solve_nonneg(a, values, integral);

  auto expand = [&](const Vector& d) {
    Vector c(p.size());
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (auto z : orbits[o]) c[z] = d[o];
    return c;
  };
  ObjectValueSolution out;
  out.status = report.status;
  out.certified = report.certified;
  if (report.status == SolveStatus::unique) {
    out.function = RankFunction(category, expand(report.solution));
  } else if (report.status == SolveStatus::non_unique) {
    out.particular = expand(report.solution);
    for (const auto& k : report.kernel) out.kernel.push_back(expand(k));
  }
  return out;
}

DecompositionReport decompose(const RankFunction& rho) {
  if (!rho.integral()) throw Error(Errc::not_integral, "decompose needs integral coefficients");
  DecompositionReport report;
  for (auto& orbit : sigma_orbits(rho.category())) {
    const Rational& c = rho.coefficient(orbit.front());
    if (c != 0) report.terms.push_back({std::move(orbit), c.get_num()});
  }
  return report;
}

RankFunction recompose(Category category, const DecompositionReport& report) {
  Vector c(category->size());
  for (const auto& t : report.terms)
    for (auto z : t.orbit) c.at(z) += t.multiplicity;
  return RankFunction(std::move(category), std::move(c));
}

Classification classify(const RankFunction& rho, bool check_prime) {
  const auto& p = rho.category();
  Classification c;
  c.integral = rho.integral();
  c.morphism_faithful = p.size() > 0 && std::all_of(rho.coefficients().begin(), rho.coefficients().end(),
                                                    [](const Rational& x) { return x > 0; });
  if (c.integral && !rho.is_zero()) {
    const auto d = decompose(rho);
    c.irreducible = d.terms.size() == 1 && d.terms.front().multiplicity == 1;
    c.basic = std::all_of(d.terms.begin(), d.terms.end(), [](const OrbitMultiplicity& t) { return t.multiplicity == 1; });
  }
  if (check_prime) {
    const auto& g = p.generators();
    if (!g.declared()) throw Error(Errc::generators_unknown, "the presentation declares no generators");
    bool prime = false;
    if (c.integral) {
      if (g.every_indecomposable) {
        for (ObjectId x = 0; x < p.size() && !prime; ++x) prime = evaluate_on_object(rho, ObjectExpr::single(x)) == 1;
      } else {
        for (auto x : g.objects) prime = prime || evaluate_on_object(rho, ObjectExpr::single(x)) == 1;
      }
    }
    c.prime = prime;
  }
  return c;
}

// ---------------------------------------------------------------------------

bool KernelIdeal::is_zero() const {
  return std::all_of(spaces_.begin(), spaces_.end(), [](const Subspace& s) { return s.is_zero(); });
}

KernelIdeal kernel_ideal(const RankFunction& rho, Execution exec) {
  const auto& p = rho.category();
  const std::size_t n = p.size();
  auto spaces = map_indices<Subspace>(
      n * n,
      [&](std::size_t idx) {
        const ObjectId x = idx / n, y = idx % n;
        const std::size_t d = p.hom_dim(x, y);
        // Column l: the map Hom(Z, X) -> Hom(Z, Y) of e_l, flattened, stacked over Z.
        std::vector<Vector> columns(d);
        for (ObjectId z = 0; z < n; ++z) {
          if (rho.coefficient(z) == 0) continue;
          for (std::size_t l = 0; l < d; ++l)
            for (std::size_t k = 0; k < p.hom_dim(z, x); ++k) {
              const auto& e = p.composition(z, x, y, k, l);
              columns[l].insert(columns[l].end(), e.begin(), e.end());
            }
        }
        const std::size_t rows = d == 0 ? 0 : columns.front().size();
        return Subspace::row_space(nullspace(Matrix::from_column_vectors(rows, columns)));
      },
      exec);
  return KernelIdeal(n, std::move(spaces));
}

namespace {

FactorizationCheck collect(const CategoryPresentation& p, const std::vector<std::optional<Vector>>& failures) {
  FactorizationCheck check;
  const std::size_t n = p.size();
  for (std::size_t idx = 0; idx < failures.size(); ++idx) {
    if (!failures[idx]) continue;
    check.holds = false;
    check.witnesses.push_back({idx / n, idx % n, *failures[idx]});
  }
  return check;
}

}  // namespace

FactorizationCheck is_idempotent(const RankFunction& rho, Execution exec) {
  if (!rho.integral()) throw Error(Errc::not_integral, "idempotency is defined for integral rank functions");
  const auto& p = rho.category();
  const std::size_t n = p.size();
  const KernelIdeal k = kernel_ideal(rho, exec);
  auto failures = map_indices<std::optional<Vector>>(
      n * n,
      [&](std::size_t idx) -> std::optional<Vector> {
        const ObjectId x = idx / n, y = idx % n;
        const Subspace& target = k.at(x, y);
        if (target.is_zero()) return std::nullopt;
        std::vector<Vector> composites;
        for (ObjectId w = 0; w < n; ++w)
          for (const auto& a : k.at(x, w).basis_vectors())
            for (const auto& b : k.at(w, y).basis_vectors()) composites.push_back(compose_vectors(p, x, w, y, a, b));
        return first_outside(Subspace::span(p.hom_dim(x, y), composites), target);
      },
      exec);
  return collect(p, failures);
}

FactorizationCheck is_localising(const RankFunction& rho, Execution exec) {
  if (!rho.integral()) throw Error(Errc::not_integral, "localising is defined for integral rank functions");
  const auto& p = rho.category();
  const std::size_t n = p.size();
  const KernelIdeal k = kernel_ideal(rho, exec);
  std::vector<ObjectId> null_objects;
  for (ObjectId w = 0; w < n; ++w)
    if (evaluate_on_object(rho, ObjectExpr::single(w)) == 0) null_objects.push_back(w);
  auto failures = map_indices<std::optional<Vector>>(
      n * n,
      [&](std::size_t idx) -> std::optional<Vector> {
        const ObjectId x = idx / n, y = idx % n;
        const Subspace& target = k.at(x, y);
        if (target.is_zero()) return std::nullopt;
        std::vector<Vector> composites;
        for (auto w : null_objects)
          for (std::size_t i = 0; i < p.hom_dim(x, w); ++i)
            for (std::size_t j = 0; j < p.hom_dim(w, y); ++j) composites.push_back(p.composition(x, w, y, i, j));
        return first_outside(Subspace::span(p.hom_dim(x, y), composites), target);
      },
      exec);
  return collect(p, failures);
}

// ---------------------------------------------------------------------------

const char* axiom_name(Axiom a) noexcept {
  switch (a) {
    case Axiom::o1: return "O1";
    case Axiom::o2: return "O2";
    case Axiom::o3: return "O3";
    case Axiom::o4: return "O4";
    case Axiom::m3: return "M3";
    case Axiom::cone_identity: return "cone-identity";
  }
  return "?";
}

bool AxiomReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

AxiomReport check_axioms(Category category, const std::vector<std::optional<Rational>>& values,
                         const std::vector<Triangle>& triangles) {
  const auto& p = *category;
  if (values.size() != p.size()) throw Error(Errc::dimension_mismatch, "one value slot per indecomposable expected");
  Vector v(p.size());
  for (ObjectId x = 0; x < p.size(); ++x) {
    if (!values[x]) throw Error(Errc::missing_value, "no value given for " + p.name(x));
    v[x] = *values[x];
  }
  auto value = [&](const ObjectExpr& x) {
    Rational s;
    for (auto y : x.summands()) s += v[y];
    return s;
  };

  AxiomReport report;
  AxiomResult o1{Axiom::o1, true, true, {}};
  for (ObjectId x = 0; x < p.size() && o1.pass; ++x)
    if (v[x] < 0) {
      o1.pass = false;
      o1.detail = "rho_ob(" + p.name(x) + ") = " + to_string(v[x]) + " is negative";
    }
  report.results.push_back(o1);
  report.results.push_back({Axiom::o2, true, true, "values extend additively to direct sums"});

  AxiomResult o3{Axiom::o3, true, true, {}};
  for (const auto& t : triangles) {
    const ObjectExpr& x = t.f.source;
    const ObjectExpr& y = t.f.target;
    const ObjectExpr& z = t.g.target;
    const ObjectExpr sx = apply_sigma(p, x);
    const ObjectExpr sy = apply_sigma(p, y);
    // The triangle and its two rotations Y -> Z -> Sigma X and Z -> Sigma X -> Sigma Y.
    const ObjectExpr* chains[3][3] = {{&x, &y, &z}, {&y, &z, &sx}, {&z, &sx, &sy}};
    for (int r = 0; r < 3 && o3.pass; ++r) {
      const auto& [a, b, c] = chains[r];
      if (value(*b) > value(*a) + value(*c)) {
        o3.pass = false;
        o3.detail = "triangle " + t.name + (r == 0 ? "" : " rotated " + std::to_string(r) + "x") + ": rho_ob(" +
                    p.format_object(*b) + ") = " + to_string(value(*b)) + " > " + to_string(value(*a)) + " + " +
                    to_string(value(*c));
      }
    }
    if (!o3.pass) break;
  }
  report.results.push_back(o3);

  AxiomResult o4{Axiom::o4, true, true, {}};
  for (ObjectId x = 0; x < p.size() && o4.pass; ++x)
    if (v[p.sigma(x)] != v[x]) {
      o4.pass = false;
      o4.detail = "rho_ob(Sigma " + p.name(x) + ") = " + to_string(v[p.sigma(x)]) + " but rho_ob(" + p.name(x) +
                  ") = " + to_string(v[x]);
    }
  report.results.push_back(o4);

  AxiomResult m3{Axiom::m3, true, true, {}};
  AxiomResult cone{Axiom::cone_identity, true, true, {}};
  const bool object_axioms_ok = o1.pass && o4.pass;
  std::optional<RankFunction> rho;
  if (object_axioms_ok) {
    auto solved = from_object_values(category, v, false);
    if (solved.status == SolveStatus::unique) rho = solved.function;
  }
  if (!rho) {
    const std::string why = object_axioms_ok ? "object values do not determine a unique rank function"
                                             : "object axioms fail; no rank function to evaluate";
    m3 = {Axiom::m3, false, true, why};
    cone = {Axiom::cone_identity, false, true, why};
  } else {
    for (const auto& t : triangles) {
      const Rational rf = evaluate(*rho, t.f);
      const Rational rg = evaluate(*rho, t.g);
      const Rational y = value(t.f.target);
      if (m3.pass && rf + rg != y) {
        m3.pass = false;
        m3.detail = "triangle " + t.name + ": rho(f) + rho(g) = " + to_string(rf + rg) + " but rho_ob(Y) = " +
                    to_string(y);
      }
      const Rational lhs = rf + evaluate(*rho, apply_sigma(p, t.f));
      const Rational rhs = y - value(t.g.target) + value(apply_sigma(p, t.f.source));
      if (cone.pass && lhs != rhs) {
        cone.pass = false;
        cone.detail = "triangle " + t.name + ": rho(f) + rho(Sigma f) = " + to_string(lhs) + " but " +
                      to_string(rhs) + " expected";
      }
    }
  }
  report.results.push_back(m3);
  report.results.push_back(cone);
  report.function = rho;
  return report;
}

}  // namespace rankcalc
