#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rankcalc/category.hpp"
#include "rankcalc/solve.hpp"

namespace rankcalc {

/// A validated presentation shared between the functions defined on it.
using Category = std::shared_ptr<const CategoryPresentation>;

Category make_category(CategoryPresentation p);

/// Rank function given by the coefficients c_Z of the simples S_Z in the
/// additive function on mod C. Coefficients are non-negative and constant on
/// Sigma-orbits.
class RankFunction {
 public:
  RankFunction(Category category, Vector coefficients);

  static RankFunction zero(Category category);
  /// Coefficient `value` on every member of the orbit of `x`, zero elsewhere.
  static RankFunction orbit_indicator(Category category, ObjectId x, Rational value = 1);

  const CategoryPresentation& category() const noexcept { return *category_; }
  const Category& category_ptr() const noexcept { return category_; }
  const Vector& coefficients() const noexcept { return coefficients_; }
  const Rational& coefficient(ObjectId z) const { return coefficients_.at(z); }

  bool integral() const;
  bool is_zero() const;

  RankFunction operator+(const RankFunction& other) const;
  RankFunction scaled(const Rational& k) const;

  friend bool operator==(const RankFunction& a, const RankFunction& b) {
    return a.category_ == b.category_ && a.coefficients_ == b.coefficients_;
  }

 private:
  Category category_;
  Vector coefficients_;
};

Rational evaluate(const RankFunction& rho, const MorphismMatrix& f, Execution exec = Execution::serial);
Rational evaluate_on_object(const RankFunction& rho, const ObjectExpr& x);
/// rho_ob on each indecomposable.
Vector object_values(const RankFunction& rho);

/// The composition length on mod C: every coefficient is 1.
RankFunction canonical_length(Category category);

struct ObjectValueSolution {
  SolveStatus status = SolveStatus::no_solution;
  std::optional<RankFunction> function;  // set when status is unique
  Vector particular;                     // coefficient space, when non_unique
  std::vector<Vector> kernel;            // coefficient space, when non_unique
  bool certified = false;
};

/// Recovers Sigma-invariant coefficients from values on the indecomposables.
ObjectValueSolution from_object_values(Category category, const Vector& values, bool integral = false);

struct OrbitMultiplicity {
  std::vector<ObjectId> orbit;
  Integer multiplicity;
};

struct DecompositionReport {
  std::vector<OrbitMultiplicity> terms;  // orbits ordered by smallest member
};

DecompositionReport decompose(const RankFunction& rho);
RankFunction recompose(Category category, const DecompositionReport& report);

struct Classification {
  bool integral = false;
  bool irreducible = false;
  bool basic = false;
  std::optional<bool> prime;  // unset when the prime check was skipped
  bool morphism_faithful = false;
};

/// Throws GeneratorsUnknown when `check_prime` is set and the presentation
/// declares no generators.
Classification classify(const RankFunction& rho, bool check_prime = true);

/// K(X, Y) for every ordered pair of indecomposables.
class KernelIdeal {
 public:
  KernelIdeal(std::size_t n, std::vector<Subspace> spaces) : n_(n), spaces_(std::move(spaces)) {}

  std::size_t size() const noexcept { return n_; }
  const Subspace& at(ObjectId x, ObjectId y) const { return spaces_.at(x * n_ + y); }
  bool is_zero() const;

  friend bool operator==(const KernelIdeal&, const KernelIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<Subspace> spaces_;
};

KernelIdeal kernel_ideal(const RankFunction& rho, Execution exec = Execution::parallel);

struct FactorizationWitness {
  ObjectId source;
  ObjectId target;
  Vector morphism;  // in K(source, target) but outside the composite span
};

struct FactorizationCheck {
  bool holds = true;
  std::vector<FactorizationWitness> witnesses;  // every failing pair, row-major order
};

/// K(X,Y) within the span of K(W,Y) o K(X,W) over all W. A finite sum of such
/// composites is one composite through the direct sum of the W's, so the span
/// test is the same as asking each kernel morphism to factor.
FactorizationCheck is_idempotent(const RankFunction& rho, Execution exec = Execution::parallel);

/// K(X,Y) within the span of Hom(W,Y) o Hom(X,W) over W with rho_ob(W) = 0.
FactorizationCheck is_localising(const RankFunction& rho, Execution exec = Execution::parallel);

// ---------------------------------------------------------------------------

enum class Axiom { o1, o2, o3, o4, m3, cone_identity };

const char* axiom_name(Axiom a) noexcept;

struct AxiomResult {
  Axiom axiom;
  bool checked = true;  // false when the morphism axioms could not be evaluated
  bool pass = true;
  std::string detail;   // first violating instance, or why the check was skipped
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  std::optional<RankFunction> function;  // the recovered coefficients, if unique

  bool ok() const;
};

/// Object axioms on the given values; O3 runs on each triangle and its two
/// rotations. When the values determine a unique rank function, also checks
/// rank-nullity and rho(f) + rho(Sigma f) = rho_ob(Y) - rho_ob(Z) + rho_ob(Sigma X).
/// `values` must have one entry per indecomposable (MissingValue otherwise).
AxiomReport check_axioms(Category category, const std::vector<std::optional<Rational>>& values,
                         const std::vector<Triangle>& triangles);

}  // namespace rankcalc
