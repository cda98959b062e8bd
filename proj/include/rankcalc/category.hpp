#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankcalc/execution.hpp"
#include "rankcalc/matrix.hpp"
#include "rankcalc/subspace.hpp"

namespace rankcalc {

using ObjectId = std::size_t;

/// Formal finite direct sum of indecomposables. The summand order fixes the
/// block layout of morphisms; equality ignores order.
class ObjectExpr {
 public:
  ObjectExpr() = default;
  explicit ObjectExpr(std::vector<ObjectId> summands) : summands_(std::move(summands)) {}
  static ObjectExpr single(ObjectId x) { return ObjectExpr({x}); }

  const std::vector<ObjectId>& summands() const noexcept { return summands_; }
  std::size_t size() const noexcept { return summands_.size(); }
  bool is_zero() const noexcept { return summands_.empty(); }
  ObjectId operator[](std::size_t i) const { return summands_[i]; }

  ObjectExpr operator+(const ObjectExpr& other) const;

  bool same_sequence(const ObjectExpr& other) const { return summands_ == other.summands_; }
  friend bool operator==(const ObjectExpr& a, const ObjectExpr& b);

 private:
  std::vector<ObjectId> summands_;
};

/// Morphism between direct sums; block (j, i) is the coefficient vector of
/// the component source[i] -> target[j] in the implicit hom basis.
struct MorphismMatrix {
  ObjectExpr source;
  ObjectExpr target;
  std::vector<Vector> blocks;  // row-major, target.size() x source.size()

  const Vector& block(std::size_t j, std::size_t i) const { return blocks[j * source.size() + i]; }
  Vector& block(std::size_t j, std::size_t i) { return blocks[j * source.size() + i]; }

  friend bool operator==(const MorphismMatrix&, const MorphismMatrix&) = default;
};

struct NamedMorphism {
  std::string name;
  MorphismMatrix morphism;
};

/// X --f--> Y --g--> Z --h--> Sigma X. The names refer to the presentation's
/// morphism table when the triangle was declared there.
struct Triangle {
  std::string name;
  std::string f_name, g_name, h_name;
  MorphismMatrix f, g, h;
};

struct Generators {
  bool every_indecomposable = false;
  std::vector<ObjectId> objects;

  bool declared() const noexcept { return every_indecomposable || !objects.empty(); }
};

class CategoryPresentation {
 public:
  CategoryPresentation() = default;
  /// `hom_dims` is row-major: hom_dims[x * n + y] = dim Hom(x, y). Composition,
  /// identities, and Sigma start zeroed / trivial and are filled by setters.
  CategoryPresentation(std::vector<std::string> names, std::vector<std::size_t> hom_dims);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& object_names() const noexcept { return names_; }
  const std::string& name(ObjectId x) const { return names_.at(x); }
  std::optional<ObjectId> find(std::string_view name) const;
  ObjectId id(std::string_view name) const;
  ObjectExpr parse_object(std::string_view text) const;  // "0" or "A+B+B"
  std::string format_object(const ObjectExpr& x) const;

  std::size_t hom_dim(ObjectId x, ObjectId y) const { return hom_dims_[x * size() + y]; }
  std::size_t hom_dim(ObjectId z, const ObjectExpr& x) const;

  /// e_j(Y,Z) o e_i(X,Y), as a vector in Hom(X, Z).
  const Vector& composition(ObjectId x, ObjectId y, ObjectId z, std::size_t i, std::size_t j) const;
  void set_composition(ObjectId x, ObjectId y, ObjectId z, std::size_t i, std::size_t j, Vector v);

  const Vector& identity(ObjectId x) const { return identities_.at(x); }
  void set_identity(ObjectId x, Vector v);

  ObjectId sigma(ObjectId x) const { return sigma_.at(x); }
  const std::vector<ObjectId>& sigma_permutation() const noexcept { return sigma_; }
  /// Resets every Sigma_{X,Y} to a zero matrix of the induced shape.
  void set_sigma(std::vector<ObjectId> permutation);
  /// Matrix of Hom(X,Y) -> Hom(sigma X, sigma Y) acting on coefficient columns.
  const Matrix& sigma_map(ObjectId x, ObjectId y) const { return sigma_maps_[x * size() + y]; }
  void set_sigma_map(ObjectId x, ObjectId y, Matrix m);

  const std::vector<NamedMorphism>& morphisms() const noexcept { return morphisms_; }
  const MorphismMatrix* find_morphism(std::string_view name) const;
  void add_morphism(std::string name, MorphismMatrix m);

  const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
  /// Registers f, g, h under the triangle's names if they are not yet present.
  void add_triangle(Triangle t);

  const Generators& generators() const noexcept { return generators_; }
  void set_generators(Generators g) { generators_ = std::move(g); }

  std::optional<std::size_t> period() const noexcept { return period_; }
  void set_period(std::optional<std::size_t> d) { period_ = d; }

  const std::string& field() const noexcept { return field_; }
  void set_field(std::string f) { field_ = std::move(f); }

  friend bool operator==(const CategoryPresentation&, const CategoryPresentation&);

 private:
  std::size_t triple(ObjectId x, ObjectId y, ObjectId z) const { return (x * size() + y) * size() + z; }

  std::vector<std::string> names_;
  std::vector<std::size_t> hom_dims_;
  std::vector<std::vector<Vector>> composition_;
  std::vector<Vector> identities_;
  std::vector<ObjectId> sigma_;
  std::vector<Matrix> sigma_maps_;
  std::vector<NamedMorphism> morphisms_;
  std::vector<Triangle> triangles_;
  Generators generators_;
  std::optional<std::size_t> period_;
  std::string field_ = "QQ";
};

/// Renumbers objects: new object k is old object order[k], renamed names[k].
CategoryPresentation reorder_objects(const CategoryPresentation& p, const std::vector<ObjectId>& order,
                                     const std::vector<std::string>& names);

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  malformed,
  associativity,
  unit,
  sigma_not_functorial,
  not_k_split,
  period_mismatch,
  bad_triangle,
  non_composable_chain,
  composite_nonzero,
  hom_exactness_fails,
};

const char* violation_name(ViolationKind k) noexcept;

struct Violation {
  ViolationKind kind;
  std::string detail;
  std::vector<std::size_t> location;  // object ids / basis indices / positions
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// rad End(X) per object, as a subspace of Hom(X, X).
  std::vector<Subspace> radicals;

  bool ok() const noexcept { return violations.empty(); }
  friend bool operator==(const ValidationReport& a, const ValidationReport& b) {
    return a.radicals == b.radicals && a.violations.size() == b.violations.size();
  }
};

ValidationReport validate(const CategoryPresentation& p, Execution exec = Execution::parallel);

/// Radical of End(X) by the characteristic-zero trace form:
/// a is radical iff tr(left multiplication by a*b) = 0 for every b.
Subspace endomorphism_radical(const CategoryPresentation& p, ObjectId x);

// ---------------------------------------------------------------------------
// Morphism calculus

MorphismMatrix zero_morphism(const CategoryPresentation& p, const ObjectExpr& source, const ObjectExpr& target);
MorphismMatrix identity_morphism(const CategoryPresentation& p, const ObjectExpr& x);
MorphismMatrix basis_morphism(const CategoryPresentation& p, ObjectId x, ObjectId y, std::size_t k);
/// Single-component morphism x -> y with the given coefficient vector.
MorphismMatrix component_morphism(const CategoryPresentation& p, ObjectId x, ObjectId y, Vector coeffs);

/// Checks block shapes against the presentation; throws CategoryMismatch.
void check_shape(const CategoryPresentation& p, const MorphismMatrix& f);

Vector compose_vectors(const CategoryPresentation& p, ObjectId x, ObjectId y, ObjectId z,
                       const Vector& f, const Vector& g);
MorphismMatrix compose(const CategoryPresentation& p, const MorphismMatrix& g, const MorphismMatrix& f);
MorphismMatrix direct_sum(const CategoryPresentation& p, const MorphismMatrix& f, const MorphismMatrix& g);
MorphismMatrix add(const MorphismMatrix& f, const MorphismMatrix& g);
bool is_zero(const MorphismMatrix& f);

/// Post-composition with u in Hom(X, Y) as a map Hom(Z, X) -> Hom(Z, Y).
Matrix post_composition(const CategoryPresentation& p, ObjectId z, ObjectId x, ObjectId y, const Vector& u);
/// The linear map Hom(Z, source f) -> Hom(Z, target f), phi |-> f o phi.
Matrix hom_map(const CategoryPresentation& p, ObjectId z, const MorphismMatrix& f);

ObjectExpr apply_sigma(const CategoryPresentation& p, const ObjectExpr& x);
MorphismMatrix apply_sigma(const CategoryPresentation& p, const MorphismMatrix& f);

struct TriangleReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

TriangleReport check_triangle(const CategoryPresentation& p, const Triangle& t);

/// Rotation Y -> Z -> Sigma X -> Sigma Y with third map -Sigma f.
Triangle rotate(const CategoryPresentation& p, const Triangle& t);

/// dim rad(X,Y) - dim rad^2(X,Y) for all pairs: the arrow counts of the
/// Auslander-Reiten quiver. Requires the radicals from validate().
std::vector<std::size_t> irreducible_counts(const CategoryPresentation& p, const ValidationReport& v,
                                            Execution exec = Execution::parallel);

}  // namespace rankcalc
