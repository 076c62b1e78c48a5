#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pfsemi/axioms.hpp"
#include "pfsemi/errors.hpp"
#include "pfsemi/trans_semigroup.hpp"

using namespace pfsemi;

namespace {
const PartialMap kId{0, 1};
const PartialMap kC0{0, 0};
const PartialMap kP{0, std::nullopt};

std::vector<std::vector<oracle::Table>> tables_of(
    const std::vector<TransSemigroup>& corpus) {
  std::vector<std::vector<oracle::Table>> out;
  for (const auto& phi : corpus) {
    std::vector<oracle::Table> fam;
    for (const auto& f : phi.elements()) fam.push_back(oracle::table_of(f));
    out.push_back(fam);
  }
  return out;
}
}  // namespace

TEST_CASE("generate closes a generator set") {
  CHECK(generate(2, std::vector{kId}, true).size() == 1);

  auto phi = generate(2, std::vector{kC0, kId}, true);
  REQUIRE(phi.size() == 3);
  CHECK(phi[0] == kP);
  CHECK(phi[1] == kC0);
  CHECK(phi[2] == kId);

  PartialMap none{std::nullopt, std::nullopt};
  auto zero = generate(2, std::vector{none}, false);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == none);

  CHECK_THROWS_AS(generate(2, std::vector<PartialMap>{}, true), UsageError);
  CHECK_THROWS_AS(generate(3, std::vector{kId}, true), UsageError);
}

TEST_CASE("generate over a closed family returns the family") {
  for (const auto& phi : enumerate_all(2, true, false)) {
    std::vector<PartialMap> elems(phi.elements().begin(), phi.elements().end());
    CHECK(generate(2, elems, true) == phi);
  }
}

TEST_CASE("constructor enforces closure") {
  CHECK_THROWS_AS(TransSemigroup(2, {kC0, kId}, true), IntegrityError);
  CHECK_NOTHROW(TransSemigroup(2, {kC0, kId}, false));
  CHECK_THROWS_AS(TransSemigroup(2, {}, false), UsageError);
  CHECK_THROWS_AS(TransSemigroup(2, {kId, PartialMap{0}}, false), UsageError);
  TransSemigroup dup(2, {kId, kId}, true);
  CHECK(dup.size() == 1);
}

TEST_CASE("extraction of the three-element example") {
  auto s = extract_abstract(generate(2, std::vector{kC0, kId}, true));
  // Canonical indices: p = 0, c0 = 1, id = 2.
  REQUIRE(s.size() == 3);
  CHECK(s.meet(2, 1) == 0);
  CHECK(s.mul(0, 1) == 0);
  CHECK(s.mul(1, 0) == 1);
  CHECK(s.mul(2, 2) == 2);
  for (std::size_t y = 0; y < 3; ++y) {
    CHECK(s.delta().test(0, y));
    CHECK(s.delta().test(1, y));
  }
  CHECK_FALSE(s.delta().test(2, 0));
  CHECK(s.delta().test(2, 1));
  CHECK(s.delta().test(2, 2));
  REQUIRE(s.chi());
  CHECK(s.chi()->test(0, 1));
  CHECK_FALSE(s.chi()->test(1, 0));
}

TEST_CASE("extraction of the identity") {
  auto s = extract_abstract(generate(2, std::vector{kId}, true));
  REQUIRE(s.size() == 1);
  CHECK(s.mul(0, 0) == 0);
  CHECK(s.meet(0, 0) == 0);
  CHECK(s.delta() == Relation::full(1));
  CHECK(*s.chi() == Relation::full(1));
}

TEST_CASE("extraction requires a meet-closed family") {
  auto phi = generate(2, std::vector{kC0, kId}, false);
  CHECK_THROWS_AS(extract_abstract(phi), UsageError);
}

TEST_CASE("enumeration counts against a powerset scan") {
  // Frozen from an independent powerset scan over all subsets.
  struct Row { std::size_t n; bool meet; bool inv; std::size_t count; };
  const Row rows[] = {
      {1, false, false, 3}, {1, false, true, 3}, {1, true, false, 3},
      {1, true, true, 3},   {2, false, false, 79}, {2, false, true, 34},
      {2, true, false, 63}, {2, true, true, 33},
  };
  for (const auto& r : rows) {
    CAPTURE(r.n);
    CAPTURE(r.meet);
    CAPTURE(r.inv);
    CHECK(enumerate_all(r.n, r.meet, r.inv).size() == r.count);
  }
}

TEST_CASE("base-2 enumeration lists exactly the closed families") {
  for (bool with_meet : {false, true}) {
    for (bool inv : {false, true}) {
      auto got = tables_of(enumerate_all(2, with_meet, inv));
      auto want = oracle::closed_families(2, with_meet, inv);
      std::set<std::vector<oracle::Table>> a(got.begin(), got.end());
      std::set<std::vector<oracle::Table>> b(want.begin(), want.end());
      CHECK(a.size() == got.size());
      CHECK(a == b);
    }
  }
}

TEST_CASE("enumeration order is increasing by membership mask") {
  auto pool = all_maps(2);
  std::uint64_t prev = 0;
  for (const auto& phi : enumerate_all(2, true, false)) {
    std::uint64_t mask = 0;
    for (const auto& f : phi.elements()) {
      auto at = std::find(pool.begin(), pool.end(), f) - pool.begin();
      mask |= std::uint64_t{1} << at;
    }
    CHECK(mask > prev);
    prev = mask;
  }
}

TEST_CASE("base-3 enumeration covers every family generated by two maps") {
  auto maps = all_maps(3);
  std::set<std::vector<oracle::Table>> want;
  auto close = [](std::vector<oracle::Table> gens) {
    std::set<oracle::Table> s(gens.begin(), gens.end());
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<oracle::Table> cur(s.begin(), s.end());
      for (auto& f : cur) {
        for (auto& g : cur) {
          grew |= s.insert(oracle::compose(g, f)).second;
          grew |= s.insert(oracle::meet(f, g)).second;
        }
      }
    }
    return std::vector<oracle::Table>(s.begin(), s.end());
  };
  for (std::size_t i = 0; i < maps.size(); ++i) {
    auto ti = oracle::table_of(maps[i]);
    want.insert(close({ti}));
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      want.insert(close({ti, oracle::table_of(maps[j])}));
    }
  }
  auto got = tables_of(enumerate_all(3, true, false));
  CHECK(got.size() == want.size());
  CHECK(std::set<std::vector<oracle::Table>>(got.begin(), got.end()) == want);
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(enumerate_all(0, true, false), UsageError);
  CHECK_THROWS_AS(enumerate_all(kMaxEnumerationBase + 1, true, false), UsageError);
}

TEST_CASE("extraction matches table lookup on the base-2 corpus") {
  auto corpus = enumerate_all(2, true, false);
  const auto& families = oracle::base2_families();
  std::map<std::vector<oracle::Table>, AbstractSystem> want;
  for (const auto& fam : families) want.emplace(fam, oracle::extract(fam));
  for (const auto& phi : corpus) {
    std::vector<oracle::Table> fam;
    for (const auto& f : phi.elements()) fam.push_back(oracle::table_of(f));
    REQUIRE(want.count(fam));
    CHECK(extract_abstract(phi) == want.at(fam));
  }
}

TEST_CASE("semiadjacency is a left ideal on every base-2 family") {
  for (const auto& phi : enumerate_all(2, false, false)) {
    for (const auto& f : phi.elements()) {
      for (const auto& g : phi.elements()) {
        if (!rel_delta(f, g)) continue;
        for (const auto& u : phi.elements()) {
          CHECK(rel_delta(compose(f, u), g));
        }
      }
    }
  }
}

TEST_CASE("index_of and invertible_only") {
  auto phi = generate(2, std::vector{kC0, kId}, true);
  CHECK(phi.index_of(kC0) == 1);
  CHECK_FALSE(phi.index_of(PartialMap{1, 0}).has_value());
  CHECK_FALSE(phi.invertible_only());
  CHECK(generate(2, std::vector{PartialMap{1, 0}}, true).invertible_only());
}
