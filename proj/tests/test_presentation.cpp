#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kuelsh/catalog.hpp"
#include "kuelsh/presentation.hpp"

using namespace kuelsh;

namespace {

const char* kLocal =
    "field 2 1\n"
    "vertices v\n"
    "arrow x: v -> v\n"
    "rel x.x\n";

}  // namespace

TEST_CASE("a one-vertex loop with x^2 = 0 parses") {
  Presentation p = parse_presentation(kLocal);
  CHECK(p.quiver.vertices.size() == 1);
  CHECK(p.quiver.arrows.size() == 1);
  CHECK(p.relations.size() == 1);
  CHECK(p.relations[0].terms.size() == 1);
  CHECK(p.relations[0].terms[0].path.arrows == std::vector<std::uint32_t>{0, 0});
  auto report = validate_presentation(p);
  CHECK(report.vertices == 1);
  CHECK(report.relations == 1);
}

TEST_CASE("coefficients, params and signs") {
  Presentation p = parse_presentation(
      "field 2 2\n"
      "param lambda = g\n"
      "vertices 1 2\n"
      "arrow a: 1 -> 1\n"
      "arrow s: 1 -> 2\n"
      "arrow t: 2 -> 1\n"
      "rel lambda*a.a - s.t\n"
      "rel (g+1)*a.a.a + 2*a.a # the 2* term vanishes mod 2\n"
      "form 1 = 0\n"
      "form a.a = 1/lambda\n");
  const Field& f = *p.field;
  CHECK(p.params.size() == 1);
  CHECK(p.params[0].second == f.generator());
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0].terms[0].coeff == f.generator());
  CHECK(p.relations[0].terms[1].coeff == 1);  // -1 = 1 in characteristic 2
  CHECK(p.relations[1].terms.size() == 1);    // zero-coefficient term dropped
  CHECK(p.relations[1].terms[0].coeff == f.parse("g+1"));
  REQUIRE(p.form.size() == 2);
  CHECK(p.form[0].path.trivial());
  CHECK(p.form[1].value == f.inv(f.generator()));
}

TEST_CASE("format/parse round-trip") {
  for (const char* name : {"Lambda2", "Lambda5", "Lambda9p"}) {
    Presentation p = catalog_lookup(name, Field::get(name == std::string("Lambda2") ? 3 : 2, 1), {});
    Presentation q = parse_presentation(format_presentation(p));
    CHECK(p == q);
  }
  Presentation p = parse_presentation(kLocal);
  CHECK(p == parse_presentation(format_presentation(p)));
}

TEST_CASE("parse errors carry line and column") {
  // unknown vertex in arrow line
  try {
    parse_presentation("field 2 1\nvertices a\narrow x: a -> b\n");
    FAIL("expected UnknownVertex");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_vertex);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  // non-composable path
  try {
    parse_presentation(
        "field 2 1\nvertices 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\nrel a.b\n");
    FAIL("expected NonComposablePath");
  } catch (const error& e) {
    CHECK(e.code() == errc::non_composable_path);
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
  // relation mixing a 1->2 path with a 2->1 path
  try {
    parse_presentation(
        "field 2 1\nvertices 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n"
        "arrow c: 2 -> 2\nrel a.c + b.a\n");
    FAIL("expected NonParallelRelation");
  } catch (const error& e) {
    CHECK(e.code() == errc::non_parallel_relation);
  }
  // admissibility: single arrows are not valid relation terms
  try {
    parse_presentation("field 2 1\nvertices v\narrow x: v -> v\nrel x\n");
    FAIL("expected NonAdmissibleRelation");
  } catch (const error& e) {
    CHECK(e.code() == errc::non_admissible_relation);
  }
  // no vertices at all
  try {
    parse_presentation("field 2 1\nvertices\n");
    FAIL("expected UnknownVertex");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_vertex);
  }
  // field line must come first
  CHECK_THROWS_AS(parse_presentation("vertices v\nfield 2 1\n"), error);
  // bad param reference
  try {
    parse_presentation(
        "field 2 1\nvertices v\narrow x: v -> v\nrel mu*x.x\n");
    FAIL("expected SyntaxError");
  } catch (const error& e) {
    CHECK(e.code() == errc::syntax_error);
  }
}

TEST_CASE("catalog entries parse and validate at their characteristics") {
  struct Row {
    const char* name;
    std::uint64_t p, k;
    bool lambda;
    std::size_t vertices, arrows, relations;
  };
  const Row rows[] = {
      {"Lambda2", 3, 1, false, 2, 3, 6},
      {"Lambda2p", 3, 1, false, 2, 3, 4},
      {"Lambda3", 2, 2, true, 2, 4, 7},
      {"Lambda3p", 2, 2, true, 2, 4, 4},
      {"Lambda5", 2, 1, false, 3, 5, 9},
      {"Lambda5p", 2, 1, false, 3, 5, 7},
      {"Lambda9", 2, 1, false, 4, 6, 6},
      {"Lambda9p", 2, 1, false, 4, 6, 4},
      {"A1", 3, 1, true, 3, 4, 4},
      {"A4", 2, 1, false, 4, 6, 4},
      {"T2222", 2, 2, true, 6, 10, 10},
      {"T333", 2, 1, false, 8, 11, 10},
      {"T244", 2, 1, false, 9, 12, 11},
      {"T236", 2, 1, false, 10, 13, 12},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    const Field& f = Field::get(r.p, r.k);
    std::map<std::string, std::uint64_t> params;
    if (r.lambda) params["lambda"] = r.k > 1 ? f.generator() : 2;
    Presentation p = catalog_lookup(r.name, f, params);
    auto report = validate_presentation(p);
    CHECK(report.vertices == r.vertices);
    CHECK(report.arrows == r.arrows);
    CHECK(report.relations == r.relations);
  }
}

TEST_CASE("catalog forms ship exactly where expected") {
  const Field& f3 = Field::get(3, 1);
  const Field& f2 = Field::get(2, 1);
  const Field& f4 = Field::get(2, 2);
  CHECK(!catalog_lookup("Lambda2", f3, {}).form.empty());
  CHECK(!catalog_lookup("Lambda2p", f3, {}).form.empty());
  CHECK(!catalog_lookup("Lambda3", f4, {{"lambda", f4.generator()}}).form.empty());
  CHECK(!catalog_lookup("Lambda3p", f4, {{"lambda", f4.generator()}}).form.empty());
  CHECK(!catalog_lookup("Lambda5", f2, {}).form.empty());
  CHECK(!catalog_lookup("Lambda5p", f2, {}).form.empty());
  CHECK(catalog_lookup("Lambda9", f2, {}).form.empty());
  CHECK(catalog_lookup("Lambda9p", f2, {}).form.empty());
  CHECK(catalog_lookup("A4", f2, {}).form.empty());
  CHECK(catalog_lookup("T333", f2, {}).form.empty());
}

TEST_CASE("catalog lookup errors") {
  const Field& f2 = Field::get(2, 1);
  const Field& f3 = Field::get(3, 1);
  const Field& f4 = Field::get(2, 2);
  try {
    catalog_lookup("Nope", f2, {});
    FAIL("expected UnknownName");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_name);
  }
  try {
    catalog_lookup("Lambda9", f3, {});  // symmetric only in characteristic 2
    FAIL("expected CharacteristicMismatch");
  } catch (const error& e) {
    CHECK(e.code() == errc::characteristic_mismatch);
  }
  try {
    catalog_lookup("Lambda3", f4, {});
    FAIL("expected MissingParam");
  } catch (const error& e) {
    CHECK(e.code() == errc::missing_param);
  }
  try {
    catalog_lookup("Lambda3", f4, {{"lambda", 1}});
    FAIL("expected ParamForbiddenValue");
  } catch (const error& e) {
    CHECK(e.code() == errc::param_forbidden_value);
  }
  try {
    catalog_lookup("Lambda3", f2, {{"lambda", 1}});  // F2 has no lambda outside {0,1}
    FAIL("expected ParamForbiddenValue");
  } catch (const error& e) {
    CHECK(e.code() == errc::param_forbidden_value);
  }
}
