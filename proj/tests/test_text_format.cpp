#include <string>

#include "doctest.h"
#include "rankcalc/text_format.hpp"
#include "support.hpp"

using namespace rankcalc;
using testing::error_code;
using testing::read_fixture;

namespace {

std::string parse_error_message(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) return e.what();
  }
  return {};
}

const std::string kTiny =
    "format rankcalc-presentation 1\n"
    "field QQ\n"
    "objects A B\n"
    "period 2\n"
    "hom A A 1\n"
    "hom B B 1\n"
    "id A 1\n"
    "id B 1\n"
    "compose A A A (1,1,1,1)\n"
    "compose B B B (1,1,1,1)\n"
    "sigma A B\n"
    "sigma B A\n"
    "sigmamap A A (1,1,1)\n"
    "sigmamap B B (1,1,1)\n";

}  // namespace

TEST_SUITE("text_format") {

TEST_CASE("fixtures are canonical") {
  for (const char* name : {"a1.trc", "a2.trc", "a3.trc"}) {
    CAPTURE(name);
    const std::string text = read_fixture(name);
    REQUIRE_FALSE(text.empty());
    const auto p = parse_presentation(text);
    CHECK(serialize_presentation(p) == text);
    CHECK(parse_presentation(serialize_presentation(p)) == p);
    CHECK(validate(p).ok());
  }
}

TEST_CASE("builder output roundtrips") {
  for (int n = 1; n <= 4; ++n) {
    const auto p = cluster_category_an(n);
    const auto text = serialize_presentation(p);
    CHECK(parse_presentation(text) == p);
    CHECK(serialize_presentation(parse_presentation(text)) == text);
  }
  CHECK(read_fixture("a1.trc") == serialize_presentation(cluster_category_an(1)));
  CHECK(read_fixture("a2.trc") == serialize_presentation(cluster_category_an(2)));
}

TEST_CASE("the A3 fixture carries the named morphisms and the non-AR triangle") {
  const auto p = parse_presentation(read_fixture("a3.trc"));
  for (const char* m : {"f_T1_T3", "alpha_T1_T2", "g_T3_S-1T2", "h_S-1T2_ST1"}) CHECK(p.find_morphism(m));
  CHECK(p.triangles().size() == 10);
  CHECK(p.triangles().back().name == "nonar.T1");
  for (const auto& t : p.triangles()) CHECK(check_triangle(p, t).ok());
  CHECK(p.generators().every_indecomposable);
}

TEST_CASE("comments, blank lines and ordering are canonicalized") {
  const std::string messy =
      "# a two-object category\n"
      "format rankcalc-presentation 1\n"
      "\n"
      "objects A B   # names\n"
      "sigma B A\n"
      "sigma A B\n"
      "hom B B 1\n"
      "hom A A 1\n"
      "id B 1\n"
      "id A 1\n"
      "compose B B B (1,1,1,1)\n"
      "compose A A A (1,1,1,1)\n"
      "sigmamap B B (1,1,1)\n"
      "sigmamap A A (1,1,1)\n"
      "period 2\n";
  const auto p = parse_presentation(messy);
  CHECK(serialize_presentation(p) == kTiny);
  CHECK(p == parse_presentation(kTiny));
}

TEST_CASE("duplicate object names are rejected with a location") {
  const std::string text = "format rankcalc-presentation 1\nobjects A B A\n";
  const auto msg = parse_error_message(text);
  CHECK(msg.find("line 2, column 13") == 0);
  CHECK(msg.find("duplicate object name 'A'") != std::string::npos);
}

TEST_CASE("parse errors carry line and column") {
  struct Case {
    std::string text;
    std::string prefix;
  };
  const std::string head = "format rankcalc-presentation 1\nobjects A B\n";
  const Case cases[] = {
      {"", "line 1, column 1"},
      {"format rankcalc-presentation 2\n", "line 1, column 30"},
      {"format something 1\n", "line 1, column 8"},
      {head + "hom A C 1\n", "line 3, column 7"},
      {head + "hom A B x\n", "line 3, column 9"},
      {head + "frobnicate\n", "line 3, column 1"},
      {head + "field GF2\n", "line 3, column 7"},
      {head + "id A 1 1\n", "line 3"},
      {head + "period 0\n", "line 3, column 8"},
      {head + "sigma A B\n", "line 2, column 1"},
      {head + "hom A A 1\nid A 1/0\n", "line 4, column 6"},
      {head + "hom A A 1\ncompose A A A (1,1,2,1)\n", "line 4, column 20"},
      {head + "triangle t f g h\n", "line 3, column 12"},
      {"format rankcalc-presentation 1\n", "line 2, column 1"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    const auto msg = parse_error_message(c.text);
    REQUIRE_FALSE(msg.empty());
    CHECK(msg.rfind(c.prefix, 0) == 0);
  }
}

TEST_CASE("morphism lines") {
  auto p = parse_presentation(kTiny + "morphism m A+B A b(1,1)=2\n");
  const auto* m = p.find_morphism("m");
  REQUIRE(m);
  CHECK(m->source.size() == 2);
  CHECK(m->block(0, 0) == Vector{2});
  CHECK(m->block(0, 1) == Vector{});
  CHECK(parse_presentation(serialize_presentation(p)) == p);
  CHECK(error_code([&] { parse_presentation(kTiny + "morphism m A A b(1,1)=1,2\n"); }) == Errc::parse_error);
  CHECK(error_code([&] { parse_presentation(kTiny + "morphism m A A b(1,1)=1\nmorphism m A A\n"); }) ==
        Errc::parse_error);
}

TEST_CASE("rank files") {
  const auto r = parse_rank_file(read_fixture("rho2.rf"));
  CHECK(r.category_path == "a3.trc");
  CHECK(r.kind == RankFile::Kind::coefficients);
  CHECK(r.entries.size() == 9);
  const auto v = parse_rank_file(read_fixture("rho2-values.rf"));
  CHECK(v.kind == RankFile::Kind::object_values);
  CHECK(v.entries[1] == std::make_pair(std::string("T2"), Rational(2)));

  const auto rho = RankFunction::orbit_indicator(testing::a3(), testing::a3()->id("T2"));
  CHECK(serialize_rank_function(rho, std::string("a3.trc")) == read_fixture("rho2.rf"));

  const auto frac = parse_rank_file("format rankcalc-rank 1\ncoef A 5/2\n");
  CHECK(frac.entries.front().second == Rational(5, 2));
  CHECK_FALSE(frac.category_path);

  CHECK(error_code([] { parse_rank_file("format rankcalc-rank 1\ncoef A 1\nvalue B 1\n"); }) == Errc::parse_error);
  CHECK(error_code([] { parse_rank_file("format rankcalc-rank 1\ncoef A 1\ncoef A 2\n"); }) == Errc::parse_error);
  CHECK(error_code([] { parse_rank_file("format rankcalc-rank 1\ncoef A 0.5\n"); }) == Errc::parse_error);
  CHECK(error_code([] { parse_rank_file("format rankcalc-rank 1\ninstance integers\n"); }) == Errc::parse_error);
}

TEST_CASE("q-value files") {
  const auto q = parse_qvalues_file(read_fixture("middle-periodic3.qv"));
  CHECK(q.instance == "periodic:3");
  CHECK(q.kind == RankFile::Kind::coefficients);
  CHECK(q.entries[4].second == parse_polynomial("x"));
  const auto i = parse_qvalues_file(read_fixture("rho2-integers.qv"));
  CHECK(i.kind == RankFile::Kind::object_values);
  CHECK(parse_qvalues_file("format rankcalc-qvalues 1\nvalue A 1\n").instance.empty());
  CHECK(error_code([] { parse_qvalues_file("format rankcalc-qvalues 1\nvalue A 1+\n"); }) == Errc::parse_error);
  CHECK(error_code([] { parse_qvalues_file("format rankcalc-rank 1\n"); }) == Errc::parse_error);
}

}  // TEST_SUITE
