#include "rankcalc/qrank.hpp"

#include <algorithm>
#include <cctype>

#include "rankcalc/error.hpp"
#include "rankcalc/functor.hpp"

namespace rankcalc {

namespace {

long mod(long a, long d) {
  const long r = a % d;
  return r < 0 ? r + d : r;
}

}  // namespace

ModuleElement::ModuleElement(std::map<long, Integer> terms) {
  for (auto& [e, c] : terms)
    if (c != 0) terms_.emplace(e, std::move(c));
}

Integer ModuleElement::coefficient(long exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

ModuleElement ModuleElement::operator+(const ModuleElement& other) const {
  auto t = terms_;
  for (const auto& [e, c] : other.terms_) t[e] += c;
  return ModuleElement(std::move(t));
}

ModuleElement ModuleElement::operator-(const ModuleElement& other) const { return *this + other * Integer(-1); }

ModuleElement ModuleElement::operator*(const Integer& k) const {
  auto t = terms_;
  for (auto& [e, c] : t) c *= k;
  return ModuleElement(std::move(t));
}

ModuleElement parse_polynomial(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(Errc::parse_error, "empty polynomial");
  auto fail = [&](std::size_t pos, const std::string& what) -> Error {
    return Error(Errc::parse_error,
                 "polynomial '" + std::string(text) + "' at character " + std::to_string(pos + 1) + ": " + what);
  };
  std::map<long, Integer> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw fail(i, "expected '+' or '-'");
    }
    const std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer coef = digits == i ? Integer(1) : Integer(s.substr(digits, i - digits));
    long exponent = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const std::size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        const std::size_t first_digit = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (first_digit == i) throw fail(i, "expected an exponent");
        exponent = std::stol(s.substr(start, i - start));
      }
    } else if (digits == i) {
      throw fail(i, "expected a coefficient or 'x'");
    }
    terms[exponent] += coef * sign;
  }
  return ModuleElement(std::move(terms));
}

std::string format_polynomial(const ModuleElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, c] : e.terms()) {
    const Integer mag = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (exp == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "x";
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

// ---------------------------------------------------------------------------

OrderedModuleInstance OrderedModuleInstance::periodic(std::size_t d) {
  if (d == 0) throw Error(Errc::invalid_argument, "period must be positive");
  return {Kind::periodic, d};
}

OrderedModuleInstance OrderedModuleInstance::parse(std::string_view text) {
  if (text == "integers") return integers();
  if (text == "laurent") return laurent();
  constexpr std::string_view prefix = "periodic:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    if (!digits.empty() && digits.size() < 10 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const auto d = std::stoul(std::string(digits));
      if (d > 0) return periodic(d);
    }
  }
  throw Error(Errc::parse_error, "unknown instance '" + std::string(text) + "' (integers, periodic:d, laurent)");
}

std::string OrderedModuleInstance::name() const {
  switch (kind_) {
    case Kind::integers: return "integers";
    case Kind::periodic: return "periodic:" + std::to_string(d_);
    case Kind::laurent: return "laurent";
  }
  return "?";
}

ModuleElement OrderedModuleInstance::normalize(const ModuleElement& e) const {
  if (kind_ == Kind::laurent) return e;
  std::map<long, Integer> t;
  for (const auto& [exp, c] : e.terms()) t[kind_ == Kind::integers ? 0 : mod(exp, static_cast<long>(d_))] += c;
  return ModuleElement(std::move(t));
}

ModuleElement OrderedModuleInstance::times_q(const ModuleElement& e) const { return times_q_power(e, 1); }

ModuleElement OrderedModuleInstance::times_q_power(const ModuleElement& e, long k) const {
  if (kind_ == Kind::integers) return normalize(e);
  std::map<long, Integer> t;
  for (const auto& [exp, c] : e.terms()) t[exp + k] += c;
  return normalize(ModuleElement(std::move(t)));
}

bool OrderedModuleInstance::is_nonnegative(const ModuleElement& e) const {
  const auto n = normalize(e);
  return std::all_of(n.terms().begin(), n.terms().end(), [](const auto& t) { return t.second > 0; });
}

ModuleElement OrderedModuleInstance::divide_by_q_plus_one(const ModuleElement& e) const {
  if (!q_plus_one_regular(*this))
    throw Error(Errc::not_regular, "q+1 is not regular on " + name() + " (even period)");
  const ModuleElement num = normalize(e);
  ModuleElement z;
  switch (kind_) {
    case Kind::integers: {
      const Integer c = num.coefficient(0);
      if (c % 2 != 0) throw Error(Errc::not_divisible, format_polynomial(num) + " is not divisible by 2");
      z = ModuleElement::constant(c / 2);
      break;
    }
    case Kind::periodic: {
      // (1 + x) z = n reads z_k + z_{k-1} = n_k; for odd d the alternating
      // sum inverts the circulant: 2 z_k = sum_j (-1)^j n_{k-j}.
      const long d = static_cast<long>(d_);
      std::map<long, Integer> t;
      for (long k = 0; k < d; ++k) {
        Integer twice = 0;
        for (long j = 0; j < d; ++j) twice += (j % 2 == 0 ? 1 : -1) * num.coefficient(mod(k - j, d));
        if (twice % 2 != 0)
          throw Error(Errc::not_divisible, format_polynomial(num) + " is not divisible by 1+x in " + name());
        t[k] = twice / 2;
      }
      z = ModuleElement(std::move(t));
      break;
    }
    case Kind::laurent: {
      if (num.is_zero()) return num;
      // Synthetic division by x + 1 from the top degree down.
      const long low = num.terms().begin()->first;
      const long high = num.terms().rbegin()->first;
      std::map<long, Integer> t;
      Integer carry = 0;
      for (long k = high; k > low; --k) {
        const Integer q = num.coefficient(k) - carry;
        t[k - 1] = q;
        carry = q;
      }
      if (num.coefficient(low) - carry != 0)
        throw Error(Errc::not_divisible, format_polynomial(num) + " is not divisible by 1+x");
      z = ModuleElement(std::move(t));
      break;
    }
  }
  if (!is_nonnegative(z))
    throw Error(Errc::negative_quotient, "quotient " + format_polynomial(z) + " is not non-negative");
  return z;
}

Integer OrderedModuleInstance::evaluate_at_one(const ModuleElement& e) const {
  Integer s = 0;
  for (const auto& [exp, c] : e.terms()) s += c;
  return s;
}

bool q_plus_one_regular(const OrderedModuleInstance& inst) noexcept {
  return inst.kind() != OrderedModuleInstance::Kind::periodic || inst.period() % 2 == 1;
}

// ---------------------------------------------------------------------------

QRankFunction::QRankFunction(Category category, OrderedModuleInstance instance,
                             std::vector<ModuleElement> coefficients)
    : category_(std::move(category)), instance_(instance), coefficients_(std::move(coefficients)) {
  const auto& p = *category_;
  if (coefficients_.size() != p.size())
    throw Error(Errc::dimension_mismatch, "expected " + std::to_string(p.size()) + " coefficients");
  for (auto& c : coefficients_) c = instance_.normalize(c);
  for (ObjectId z = 0; z < p.size(); ++z)
    if (!instance_.is_nonnegative(coefficients_[z]))
      throw Error(Errc::invalid_argument, "coefficient at " + p.name(z) + " is not non-negative");
  for (const auto& orbit : sigma_orbits(p)) {
    const auto& c = coefficients_[orbit.front()];
    if (instance_.times_q_power(c, static_cast<long>(orbit.size())) != c)
      throw Error(Errc::invalid_argument, "q^" + std::to_string(orbit.size()) + " does not fix the coefficient on the orbit of " +
                                              p.name(orbit.front()));
  }
  for (ObjectId z = 0; z < p.size(); ++z)
    if (coefficients_[p.sigma(z)] != instance_.times_q(coefficients_[z]))
      throw Error(Errc::invalid_argument, "coefficient at " + p.name(p.sigma(z)) + " is not q times the one at " +
                                              p.name(z));
}

QRankFunction QRankFunction::from_seeds(Category category, OrderedModuleInstance instance,
                                        const std::map<ObjectId, ModuleElement>& seeds) {
  std::vector<ModuleElement> c(category->size());
  for (const auto& [x, value] : seeds) {
    ModuleElement v = instance.normalize(value);
    ObjectId y = x;
    do {
      c.at(y) = v;
      v = instance.times_q(v);
      y = category->sigma(y);
    } while (y != x);
  }
  return QRankFunction(std::move(category), instance, std::move(c));
}

ModuleElement q_evaluate(const QRankFunction& rho, const MorphismMatrix& f) {
  const auto dv = image_dim_vector(rho.category(), f, Execution::serial);
  ModuleElement total;
  for (ObjectId z = 0; z < dv.size(); ++z)
    if (dv[z] != 0) total = total + rho.coefficients()[z] * Integer(static_cast<unsigned long>(dv[z]));
  return rho.instance().normalize(total);
}

ModuleElement objects_from_morphisms(const QRankFunction& rho, const ObjectExpr& x) {
  return q_evaluate(rho, identity_morphism(rho.category(), x));
}

ModuleElement morphisms_from_objects(const OrderedModuleInstance& inst, const CategoryPresentation& p,
                                     const std::vector<ModuleElement>& object_values, const Triangle& t) {
  if (!q_plus_one_regular(inst))
    throw Error(Errc::not_regular, "q+1 is not regular on " + inst.name() + " (even period)");
  if (object_values.size() != p.size()) throw Error(Errc::dimension_mismatch, "one value per indecomposable expected");
  auto value = [&](const ObjectExpr& x) {
    ModuleElement s;
    for (auto y : x.summands()) s = s + object_values.at(y);
    return s;
  };
  const ModuleElement numerator = value(t.f.target) - value(t.g.target) + value(apply_sigma(p, t.f.source));
  return inst.divide_by_q_plus_one(numerator);
}

RankFunction specialize_to_rank(const QRankFunction& rho) {
  Vector c;
  for (const auto& e : rho.coefficients()) c.emplace_back(rho.instance().evaluate_at_one(e));
  return RankFunction(rho.category_ptr(), std::move(c));
}

}  // namespace rankcalc
