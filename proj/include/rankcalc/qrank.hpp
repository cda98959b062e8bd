#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rankcalc/rank_function.hpp"

namespace rankcalc {

/// Element of Z (exponent 0 only), Z[x]/(x^d - 1) (exponents 0..d-1) or
/// Z[x, x^-1], stored as exponent -> nonzero integer coefficient.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(std::map<long, Integer> terms);
  static ModuleElement constant(const Integer& c) { return ModuleElement({{0, c}}); }
  static ModuleElement monomial(long exponent, const Integer& c = 1) { return ModuleElement({{exponent, c}}); }

  const std::map<long, Integer>& terms() const noexcept { return terms_; }
  Integer coefficient(long exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  ModuleElement operator+(const ModuleElement& other) const;
  ModuleElement operator-(const ModuleElement& other) const;
  ModuleElement operator*(const Integer& k) const;

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::map<long, Integer> terms_;
};

/// "2+x+3x^2", "x^-1", "-x", "0".
ModuleElement parse_polynomial(std::string_view text);
std::string format_polynomial(const ModuleElement& e);

/// The ordered modules of the periodic theory, with q = 1 for the integers
/// and q = x otherwise. The order is coefficientwise.
class OrderedModuleInstance {
 public:
  enum class Kind { integers, periodic, laurent };

  static OrderedModuleInstance integers() { return {Kind::integers, 1}; }
  static OrderedModuleInstance periodic(std::size_t d);
  static OrderedModuleInstance laurent() { return {Kind::laurent, 0}; }
  /// "integers", "periodic:d" or "laurent".
  static OrderedModuleInstance parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::size_t period() const noexcept { return d_; }
  std::string name() const;

  /// Reduces exponents into the module (mod d, or to 0 for the integers).
  ModuleElement normalize(const ModuleElement& e) const;
  ModuleElement times_q(const ModuleElement& e) const;
  ModuleElement times_q_power(const ModuleElement& e, long k) const;
  bool is_nonnegative(const ModuleElement& e) const;
  /// Solves (q + 1) z = e exactly; NotRegular, NotDivisible, NegativeQuotient.
  ModuleElement divide_by_q_plus_one(const ModuleElement& e) const;
  Integer evaluate_at_one(const ModuleElement& e) const;

  friend bool operator==(const OrderedModuleInstance&, const OrderedModuleInstance&) = default;

 private:
  OrderedModuleInstance(Kind k, std::size_t d) : kind_(k), d_(d) {}

  Kind kind_;
  std::size_t d_;
};

bool q_plus_one_regular(const OrderedModuleInstance& inst) noexcept;

/// Module-valued rank function: coefficients c_Z >= 0 with c_{sigma Z} = q c_Z.
class QRankFunction {
 public:
  QRankFunction(Category category, OrderedModuleInstance instance, std::vector<ModuleElement> coefficients);
  /// c on each listed seed, propagated along its orbit by powers of q.
  static QRankFunction from_seeds(Category category, OrderedModuleInstance instance,
                                  const std::map<ObjectId, ModuleElement>& seeds);

  const CategoryPresentation& category() const noexcept { return *category_; }
  const Category& category_ptr() const noexcept { return category_; }
  const OrderedModuleInstance& instance() const noexcept { return instance_; }
  const std::vector<ModuleElement>& coefficients() const noexcept { return coefficients_; }

 private:
  Category category_;
  OrderedModuleInstance instance_;
  std::vector<ModuleElement> coefficients_;
};

ModuleElement q_evaluate(const QRankFunction& rho, const MorphismMatrix& f);
ModuleElement objects_from_morphisms(const QRankFunction& rho, const ObjectExpr& x);
/// (rho_ob(Y) - rho_ob(Z) + rho_ob(Sigma X)) / (q + 1) for the triangle X -> Y -> Z -> Sigma X.
ModuleElement morphisms_from_objects(const OrderedModuleInstance& inst, const CategoryPresentation& p,
                                     const std::vector<ModuleElement>& object_values, const Triangle& t);
RankFunction specialize_to_rank(const QRankFunction& rho);

}  // namespace rankcalc
