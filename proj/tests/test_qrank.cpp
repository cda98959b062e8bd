#include <random>

#include "doctest.h"
#include "rankcalc/functor.hpp"
#include "rankcalc/qrank.hpp"
#include "support.hpp"

using namespace rankcalc;
using testing::error_code;

namespace {

using Inst = OrderedModuleInstance;

const Category& A3() { return testing::a3(); }

ObjectId obj(const char* name) { return A3()->id(name); }

ModuleElement poly(const char* text) { return parse_polynomial(text); }

// Multiplication in Z[x]/(x^d - 1), or in Z[x, x^-1] when d == 0.
ModuleElement multiply(const ModuleElement& a, const ModuleElement& b, long d) {
  std::map<long, Integer> t;
  for (const auto& [i, u] : a.terms())
    for (const auto& [j, v] : b.terms()) {
      long e = i + j;
      if (d > 0) e = ((e % d) + d) % d;
      t[e] += u * v;
    }
  return ModuleElement(t);
}

ModuleElement random_poly(std::mt19937& rng, long lo, long hi, int max_coef) {
  std::uniform_int_distribution<int> c(0, max_coef);
  std::map<long, Integer> t;
  for (long e = lo; e <= hi; ++e) t[e] = c(rng);
  return ModuleElement(t);
}

QRankFunction middle_periodic3() {
  return QRankFunction::from_seeds(A3(), Inst::periodic(3), {{obj("T2"), poly("1")}});
}

std::vector<ModuleElement> object_table(const QRankFunction& rho) {
  std::vector<ModuleElement> out;
  for (ObjectId x = 0; x < rho.category().size(); ++x)
    out.push_back(objects_from_morphisms(rho, ObjectExpr::single(x)));
  return out;
}

std::vector<QRankFunction> sample_functions(std::mt19937& rng) {
  std::vector<QRankFunction> out;
  for (int i = 0; i < 20; ++i) {
    out.push_back(QRankFunction::from_seeds(A3(), Inst::integers(),
                                            {{obj("T1"), random_poly(rng, 0, 0, 3)}, {obj("T2"), random_poly(rng, 0, 0, 3)}}));
    out.push_back(QRankFunction::from_seeds(A3(), Inst::periodic(3),
                                            {{obj("T1"), random_poly(rng, 0, 2, 3)}, {obj("T2"), random_poly(rng, 0, 2, 3)}}));
  }
  return out;
}

}  // namespace

TEST_SUITE("qrank") {

TEST_CASE("polynomial text") {
  const auto e = poly("2+x+3x^2");
  CHECK(e.coefficient(0) == 2);
  CHECK(e.coefficient(1) == 1);
  CHECK(e.coefficient(2) == 3);
  CHECK(format_polynomial(e) == "2+x+3x^2");
  CHECK(format_polynomial(poly("x^-1")) == "x^-1");
  CHECK(format_polynomial(poly("-x + x")) == "0");
  CHECK(format_polynomial(poly("0")) == "0");
  CHECK(format_polynomial(poly("-2x^3-1")) == "-1-2x^3");
  for (const char* bad : {"", "x^", "2*x", "x x", "+"})
    CHECK(error_code([&] { parse_polynomial(bad); }) == Errc::parse_error);
}

TEST_CASE("instances") {
  CHECK(Inst::parse("integers") == Inst::integers());
  CHECK(Inst::parse("periodic:3") == Inst::periodic(3));
  CHECK(Inst::parse("laurent") == Inst::laurent());
  CHECK(Inst::periodic(4).name() == "periodic:4");
  CHECK(error_code([] { Inst::parse("periodic:0"); }) == Errc::parse_error);
  CHECK(error_code([] { Inst::periodic(0); }) == Errc::invalid_argument);
  CHECK(error_code([] { Inst::parse("reals"); }) == Errc::parse_error);

  CHECK(Inst::integers().normalize(poly("x+x^2")) == poly("2"));
  CHECK(Inst::periodic(3).normalize(poly("x^4+x^-1")) == poly("x+x^2"));
  CHECK(Inst::periodic(3).times_q(poly("x^2")) == poly("1"));
  CHECK(Inst::laurent().times_q_power(poly("1"), -2) == poly("x^-2"));
  CHECK(Inst::laurent().is_nonnegative(poly("x^-3+2x")));
  CHECK_FALSE(Inst::periodic(2).is_nonnegative(poly("1-x")));
}

TEST_CASE("q+1 is regular exactly for odd periods") {
  for (std::size_t d = 1; d <= 8; ++d) {
    CAPTURE(d);
    CHECK(q_plus_one_regular(Inst::periodic(d)) == (d % 2 == 1));
  }
  CHECK(q_plus_one_regular(Inst::integers()));
  CHECK(q_plus_one_regular(Inst::laurent()));
}

TEST_CASE("division by q+1 inverts multiplication") {
  std::mt19937 rng(1);
  const ModuleElement q_plus_one = poly("1+x");
  for (std::size_t d : {1u, 3u, 5u, 7u}) {
    const auto inst = Inst::periodic(d);
    for (int i = 0; i < 30; ++i) {
      const auto z = random_poly(rng, 0, static_cast<long>(d) - 1, 4);
      CHECK(inst.divide_by_q_plus_one(multiply(q_plus_one, z, static_cast<long>(d))) == z);
    }
  }
  for (int i = 0; i < 30; ++i) {
    const auto z = random_poly(rng, -3, 3, 4);
    CHECK(Inst::laurent().divide_by_q_plus_one(multiply(q_plus_one, z, 0)) == z);
    CHECK(Inst::integers().divide_by_q_plus_one(z * 2) == Inst::integers().normalize(z));
  }
  CHECK(Inst::laurent().divide_by_q_plus_one(ModuleElement{}).is_zero());
}

TEST_CASE("division failures") {
  CHECK(error_code([] { Inst::periodic(2).divide_by_q_plus_one(poly("2")); }) == Errc::not_regular);
  CHECK(error_code([] { Inst::integers().divide_by_q_plus_one(poly("3")); }) == Errc::not_divisible);
  CHECK(error_code([] { Inst::integers().divide_by_q_plus_one(poly("-2")); }) == Errc::negative_quotient);
  // In Z[x]/(x^3 - 1), (1+x)(1-x+x^2) = 2, so 1 has no quotient.
  CHECK(error_code([] { Inst::periodic(3).divide_by_q_plus_one(poly("1")); }) == Errc::not_divisible);
  CHECK(error_code([] { Inst::periodic(3).divide_by_q_plus_one(poly("1-x^2")); }) == Errc::negative_quotient);
  CHECK(error_code([] { Inst::laurent().divide_by_q_plus_one(poly("1")); }) == Errc::not_divisible);
}

TEST_CASE("constructing q-rank functions") {
  const auto rho = middle_periodic3();
  CHECK(rho.coefficients()[obj("T2")] == poly("1"));
  CHECK(rho.coefficients()[obj("ST2")] == poly("x"));
  CHECK(rho.coefficients()[obj("S-1T2")] == poly("x^2"));
  CHECK(rho.coefficients()[obj("T1")].is_zero());

  std::vector<ModuleElement> c(9);
  c[obj("T2")] = poly("1");
  c[obj("ST2")] = poly("x");
  c[obj("S-1T2")] = poly("x^2");
  CHECK(QRankFunction(A3(), Inst::periodic(3), c).coefficients() == rho.coefficients());
  c[obj("ST2")] = poly("1");
  CHECK(error_code([&] { QRankFunction(A3(), Inst::periodic(3), c); }) == Errc::invalid_argument);
  // On a finite orbit x^k c = c has no nonzero Laurent solution.
  CHECK(error_code([] {
          QRankFunction::from_seeds(A3(), Inst::laurent(), {{obj("T2"), parse_polynomial("1")}});
        }) == Errc::invalid_argument);
  // The middle orbit has length 3, so period 2 only admits multiples of 1+x.
  CHECK(error_code([] {
          QRankFunction::from_seeds(A3(), Inst::periodic(2), {{obj("T2"), parse_polynomial("1")}});
        }) == Errc::invalid_argument);
  std::vector<ModuleElement> neg(9);
  neg[obj("T2")] = neg[obj("ST2")] = neg[obj("S-1T2")] = poly("-1");
  CHECK(error_code([&] { QRankFunction(A3(), Inst::integers(), neg); }) == Errc::invalid_argument);
  CHECK(error_code([] { QRankFunction(A3(), Inst::integers(), {}); }) == Errc::dimension_mismatch);
}

TEST_CASE("periodic example on the middle orbit") {
  const auto rho = middle_periodic3();
  const auto& p = *A3();
  const ObjectId t2 = obj("T2");
  const auto expected = Inst::periodic(3).normalize(
      poly("1") * Integer(static_cast<unsigned long>(p.hom_dim(t2, t2))) +
      poly("x") * Integer(static_cast<unsigned long>(p.hom_dim(obj("ST2"), t2))) +
      poly("x^2") * Integer(static_cast<unsigned long>(p.hom_dim(obj("S-1T2"), t2))));
  const auto value = q_evaluate(rho, identity_morphism(p, ObjectExpr::single(t2)));
  CHECK(value == expected);
  CHECK(Inst::periodic(3).evaluate_at_one(value) == 2);
  CHECK(objects_from_morphisms(rho, ObjectExpr::single(t2)) == value);
  CHECK(objects_from_morphisms(rho, ObjectExpr{}).is_zero());
  CHECK(q_evaluate(rho, zero_morphism(p, p.parse_object("T1"), p.parse_object("T2"))).is_zero());
  CHECK(specialize_to_rank(rho) == RankFunction::orbit_indicator(A3(), t2));
}

TEST_CASE("the integers instance reproduces ordinary rank functions") {
  std::mt19937 rng(9);
  const auto& p = *A3();
  for (int i = 0; i < 20; ++i) {
    const auto r = testing::random_rank_function(A3(), rng);
    std::vector<ModuleElement> c;
    for (const auto& v : r.coefficients()) c.push_back(ModuleElement::constant(v.get_num()));
    const QRankFunction q(A3(), Inst::integers(), c);
    CHECK(specialize_to_rank(q) == r);
    for (const auto& f : testing::basis_corpus(p)) CHECK(Rational(q_evaluate(q, f).coefficient(0)) == evaluate(r, f));
    for (ObjectId x = 0; x < 9; ++x)
      CHECK(Rational(objects_from_morphisms(q, ObjectExpr::single(x)).coefficient(0)) ==
            evaluate_on_object(r, ObjectExpr::single(x)));
  }
}

TEST_CASE("morphism values from object values") {
  const auto& p = *A3();
  std::vector<ModuleElement> table(9);
  for (ObjectId x = 0; x < 9; ++x) table[x] = ModuleElement::constant(orbit_index(p)[x] == 0 ? 1 : 2);
  const Triangle* nonar = nullptr;
  for (const auto& t : p.triangles())
    if (t.name == "nonar.T1") nonar = &t;
  REQUIRE(nonar);
  CHECK(morphisms_from_objects(Inst::integers(), p, table, *nonar).is_zero());
  CHECK(error_code([&] { morphisms_from_objects(Inst::periodic(2), p, table, *nonar); }) == Errc::not_regular);
  CHECK(error_code([&] { morphisms_from_objects(Inst::integers(), p, {}, *nonar); }) == Errc::dimension_mismatch);

  // X -> X -> 0 -> Sigma X gives rho_ob(X) back.
  const auto rho = middle_periodic3();
  const auto values = object_table(rho);
  for (ObjectId x = 0; x < 9; ++x) {
    const auto ex = ObjectExpr::single(x);
    Triangle t;
    t.f = identity_morphism(p, ex);
    t.g = zero_morphism(p, ex, ObjectExpr{});
    t.h = zero_morphism(p, ObjectExpr{}, apply_sigma(p, ex));
    CHECK(morphisms_from_objects(Inst::periodic(3), p, values, t) == values[x]);
  }
}

TEST_CASE("q-rank function invariants") {
  std::mt19937 rng(13);
  const auto& p = *A3();
  const auto corpus = testing::basis_corpus(p);
  for (const auto& rho : sample_functions(rng)) {
    const auto& inst = rho.instance();
    const auto values = object_table(rho);
    const auto plain = specialize_to_rank(rho);
    for (const auto& t : p.triangles()) {
      const auto rf = q_evaluate(rho, t.f);
      CHECK(inst.normalize(rf + q_evaluate(rho, t.g)) == objects_from_morphisms(rho, t.f.target));
      CHECK(morphisms_from_objects(inst, p, values, t) == rf);
    }
    for (const auto& f : corpus) {
      const auto v = q_evaluate(rho, f);
      CHECK(inst.is_nonnegative(v));
      CHECK(q_evaluate(rho, apply_sigma(p, f)) == inst.times_q(v));
      CHECK(evaluate(plain, f) == Rational(inst.evaluate_at_one(v)));
    }
  }
}

TEST_CASE("evaluation at one on Laurent elements") {
  std::mt19937 rng(19);
  for (int i = 0; i < 20; ++i) {
    std::uniform_int_distribution<long> e(-5, 5);
    const long k = e(rng);
    CHECK(Inst::laurent().evaluate_at_one(ModuleElement::monomial(k)) == 1);
    const auto z = random_poly(rng, -4, 4, 5);
    Integer sum = 0;
    for (long j = -4; j <= 4; ++j) sum += z.coefficient(j);
    CHECK(Inst::laurent().evaluate_at_one(z) == sum);
  }
}

}  // TEST_SUITE
