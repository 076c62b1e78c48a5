#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pfsemi/errors.hpp"
#include "pfsemi/partial_map.hpp"

using namespace pfsemi;

namespace {
const PartialMap kId{0, 1};
const PartialMap kC0{0, 0};
const PartialMap kF{1, std::nullopt};
const PartialMap kNone{std::nullopt, std::nullopt};
}  // namespace

TEST_CASE("compose applies the right operand first") {
  CHECK(compose(kId, kF) == kF);
  CHECK(compose(kC0, kF) == PartialMap{0, std::nullopt});
  CHECK(compose(kF, kF) == kNone);
}

TEST_CASE("meet keeps the points where both maps agree") {
  CHECK(meet(kF, kF) == kF);
  CHECK(meet(kId, kC0) == PartialMap{0, std::nullopt});
  CHECK(meet(kF, kC0) == kNone);
}

TEST_CASE("domain and image") {
  CHECK(domain(kNone).empty());
  CHECK(image(kNone).empty());
  CHECK(domain(kF) == PointSet(0b01));
  CHECK(image(kF) == PointSet(0b10));
  CHECK(domain(kC0) == PointSet(0b11));
  CHECK(image(kC0) == PointSet(0b01));
}

TEST_CASE("fundamental relations") {
  CHECK(rel_zeta(kF, kF));
  CHECK(rel_zeta(PartialMap{0, std::nullopt}, kC0));
  CHECK_FALSE(rel_zeta(kC0, kId));
  CHECK(rel_delta(kF, kC0));
  CHECK_FALSE(rel_chi(kC0, kF));
  CHECK(rel_chi(kF, kC0));
}

TEST_CASE("invertibility") {
  CHECK(is_invertible(kNone));
  CHECK(is_invertible(PartialMap{1, 0}));
  CHECK_FALSE(is_invertible(kC0));
}

TEST_CASE("partial identities") {
  CHECK(identity_on(PointSet(0), 2) == kNone);
  CHECK(identity_on(PointSet(0b11), 2) == kId);
  CHECK(identity_on(PointSet(0b10), 2) == PartialMap{std::nullopt, 1});
}

TEST_CASE("all_maps lists every map once in table order") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto maps = all_maps(n);
    auto tables = oracle::all_tables(n);
    REQUIRE(maps.size() == tables.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
      CHECK(oracle::table_of(maps[i]) == tables[i]);
    }
    CHECK(std::is_sorted(maps.begin(), maps.end()));
  }
  CHECK_THROWS_AS(all_maps(0), UsageError);
  CHECK_THROWS_AS(all_maps(5), UsageError);
}

TEST_CASE("compose and meet agree with pointwise evaluation on bases 1 to 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto maps = all_maps(n);
    for (const auto& f : maps) {
      auto tf = oracle::table_of(f);
      for (const auto& g : maps) {
        auto tg = oracle::table_of(g);
        CHECK(oracle::table_of(compose(g, f)) == oracle::compose(tg, tf));
        CHECK(oracle::table_of(meet(f, g)) == oracle::meet(tf, tg));
        CHECK(rel_chi(f, g) == oracle::dom_subset(tf, tg));
        CHECK(rel_delta(f, g) == oracle::image_in_domain(tf, tg));
      }
      CHECK(is_invertible(f) == oracle::injective(tf));
    }
  }
}

TEST_CASE("composition is associative and meet is a semilattice on base 2") {
  auto maps = all_maps(2);
  for (const auto& f : maps) {
    CHECK(meet(f, f) == f);
    for (const auto& g : maps) {
      CHECK(meet(f, g) == meet(g, f));
      for (const auto& h : maps) {
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
        CHECK(meet(meet(f, g), h) == meet(f, meet(g, h)));
        // Left distributivity in composition form.
        CHECK(compose(meet(g, h), f) == meet(compose(g, f), compose(h, f)));
      }
    }
  }
}

TEST_CASE("semiadjacency is domain inclusion of the composite") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto maps = all_maps(n);
    for (const auto& f : maps) {
      for (const auto& g : maps) {
        CHECK(rel_delta(f, g) == rel_chi(f, compose(g, f)));
      }
    }
  }
}

TEST_CASE("map literals") {
  CHECK(parse_map("1,-") == kF);
  CHECK(to_literal(kF) == "1,-");
  CHECK(to_literal(kNone) == "-,-");
  for (const auto& f : all_maps(3)) {
    CHECK(parse_map(to_literal(f)) == f);
  }
  auto list = parse_map_list("0,0;0,1");
  REQUIRE(list.size() == 2);
  CHECK(list[0] == kC0);
  CHECK(list[1] == kId);
  CHECK_THROWS_AS(parse_map("2,0"), ParseError);
  CHECK_THROWS_AS(parse_map(""), ParseError);
  CHECK_THROWS_AS(parse_map("0,x"), ParseError);
}

TEST_CASE("construction rejects points outside the base set") {
  CHECK_THROWS_AS((PartialMap{0, 2}), UsageError);
  std::vector<std::optional<Point>> empty;
  CHECK_THROWS_AS(PartialMap{std::span<const std::optional<Point>>(empty)}, UsageError);
}

TEST_CASE("hash separates the base-3 maps") {
  std::set<std::size_t> seen;
  for (const auto& f : all_maps(3)) {
    seen.insert(std::hash<PartialMap>{}(f));
  }
  CHECK(seen.size() == 64);
}
