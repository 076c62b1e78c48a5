#include "doctest.h"
#include "pfsemi/abstract_system.hpp"
#include "pfsemi/check_report.hpp"
#include "pfsemi/errors.hpp"
#include "pfsemi/trans_semigroup.hpp"

using namespace pfsemi;

TEST_CASE("parse the one-element system") {
  auto s = parse_system("size 1\nmul\n0\nmeet\n0\ndelta\n1\nend\n");
  CHECK(s.size() == 1);
  CHECK(s.mul(0, 0) == 0);
  CHECK(s.meet(0, 0) == 0);
  CHECK(s.delta().test(0, 0));
  CHECK_FALSE(s.chi().has_value());
}

TEST_CASE("serialize then parse is the identity") {
  auto s = extract_abstract(
      generate(2, std::vector{PartialMap{0, 0}, PartialMap{0, 1}}, true));
  CHECK(parse_system(serialize(s)) == s);
  auto no_chi = s.with_chi(std::nullopt);
  CHECK(parse_system(serialize(no_chi)) == no_chi);
  for (const auto& phi : enumerate_all(2, true, false)) {
    auto t = extract_abstract(phi);
    CHECK(parse_system(serialize(t)) == t);
  }
}

TEST_CASE("comments, blank lines and packed bit rows") {
  auto s = parse_system(
      "# a comment\n\nsize 2\nmul\n0 1\n1 1\nmeet\n0 0\n0 1\n"
      "delta\n10\n11\nchi\n1 1\n0 1\nend\n");
  CHECK(s.delta().test(0, 0));
  CHECK_FALSE(s.delta().test(0, 1));
  CHECK(s.chi()->test(0, 1));
}

TEST_CASE("the name is a label only") {
  auto s = parse_system("size 1\nmul\n0\nmeet\n0\ndelta\n1\nend\n");
  auto named = s.with_name("trivial");
  CHECK(named == s);
  auto text = serialize(named);
  CHECK(text.rfind("# trivial\n", 0) == 0);
}

TEST_CASE("parse errors name the line") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_system(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  // Entry 3 in a size-3 system on line 5.
  CHECK(line_of("size 3\nmul\n0 0 0\n1 1 1\n0 1 3\nmeet\n0 0 0\n0 1 0\n0 0 2\n"
                "delta\n1 1 1\n1 1 1\n0 1 1\nend\n") == 5);
  CHECK(line_of("size 0\n") == 1);
  CHECK(line_of("size 1\nmul\n0 0\n") == 3);
  CHECK(line_of("size 1\nmeet\n0\n") == 2);
  CHECK(line_of("size 1\nmul\n0\nmeet\n0\ndelta\n2\nend\n") == 7);
  CHECK(line_of("size 1\nmul\n0\nmeet\n0\ndelta\n1\n") > 0);
  CHECK(line_of("size 1\nmul\n0\nmeet\n0\ndelta\n1\nend\nextra\n") == 9);
  try {
    parse_system("size 1\nmul\nx\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("load_system names the system after its file") {
  auto s = load_system(PFSEMI_FIXTURE_DIR "/three.alg");
  CHECK(s.name() == "three.alg");
  CHECK(s.size() == 3);
  CHECK_THROWS(load_system(PFSEMI_FIXTURE_DIR "/missing.alg"));
}

TEST_CASE("construction checks index ranges") {
  CHECK_THROWS_AS(AbstractSystem(1, {1}, {0}, Relation(1)), UsageError);
  CHECK_THROWS_AS(AbstractSystem(2, {0}, {0}, Relation(2)), UsageError);
  CHECK_THROWS_AS(AbstractSystem(1, {0}, {0}, Relation(2)), UsageError);
  CHECK_THROWS_AS(AbstractSystem(0, {}, {}, Relation(0)), UsageError);
}

TEST_CASE("the adjoined element is a two-sided identity") {
  auto s = load_system(PFSEMI_FIXTURE_DIR "/three.alg");
  CHECK(star_mul(s, StarElement::e(), StarElement::elem(2)) == StarElement::elem(2));
  CHECK(star_mul(s, StarElement::elem(1), StarElement::e()) == StarElement::elem(1));
  CHECK(star_mul(s, StarElement::e(), StarElement::e()) == StarElement::e());
  CHECK(star_mul(s, StarElement::elem(0), StarElement::elem(1)) ==
        StarElement::elem(s.mul(0, 1)));
  auto range = star_range(s);
  REQUIRE(range.size() == 4);
  CHECK(range.back().is_e());
  CHECK(StarElement::e().code() == kWitnessE);
}
