#include "doctest.h"
#include "oracles.hpp"
#include "tensym/tensym.hpp"

using namespace tensym;

TEST_CASE("build_poset closes and validates") {
  SUBCASE("one-point poset") {
    const Poset p = build_poset(1, {});
    CHECK(p.n == 1);
    CHECK(p.leq(0, 0));
  }
  SUBCASE("two-chain is forced by closure") {
    const Poset p = build_poset(2, {{0, 1}});
    CHECK(p.leq(0, 1));
    CHECK_FALSE(p.leq(1, 0));
  }
  SUBCASE("transitivity is computed, never trusted") {
    const Poset p = build_poset(3, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
  }
  SUBCASE("a cycle is rejected") {
    CHECK_THROWS_AS(build_poset(2, {{0, 1}, {1, 0}}), CycleError);
    CHECK_THROWS_AS(build_poset(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
  }
  SUBCASE("out-of-range indices are rejected") {
    CHECK_THROWS_AS(build_poset(2, {{0, 2}}), IndexError);
    CHECK_THROWS_AS(build_poset(1, {{-1, 0}}), IndexError);
  }
  SUBCASE("empty carrier is rejected") { CHECK_THROWS_AS(build_poset(0, {}), ShapeError); }
}

TEST_CASE("upset_family canonical enumeration") {
  SUBCASE("one-point poset has empty set and carrier") {
    const auto fam = upset_family(build_poset(1, {}));
    CHECK(fam == std::vector<Mask>{0, 1});
  }
  SUBCASE("two-chain has three up-sets") {
    const auto fam = upset_family(build_poset(2, {{0, 1}}));
    CHECK(fam == std::vector<Mask>{0, mask_bit(1), mask_bit(0) | mask_bit(1)});
  }
  SUBCASE("two-antichain has all four subsets") {
    const auto fam = upset_family(build_poset(2, {}));
    CHECK(fam.size() == 4);
    CHECK(fam == oracles::upsets_by_filter(build_poset(2, {})));
  }
}

TEST_CASE("up-set family matches the subset-filter oracle on every small poset") {
  for (const Poset& p : enumerate_posets(5)) {
    const auto fam = upset_family(p);
    CHECK(fam == oracles::upsets_by_filter(p));
    // an up-set is named by its antichain of minimal elements
    CHECK(static_cast<int>(fam.size()) == oracles::count_antichains(p));
    CHECK(fam.front() == 0);
    CHECK(fam.back() == p.universe());
  }
}

TEST_CASE("canonical subset order sorts by size then lexicographically") {
  CHECK(mask_canonical_less(0, 1));
  // {0,3} before {1,2}
  CHECK(mask_canonical_less(mask_bit(0) | mask_bit(3), mask_bit(1) | mask_bit(2)));
  CHECK_FALSE(mask_canonical_less(mask_bit(1) | mask_bit(2), mask_bit(0) | mask_bit(3)));
  // size dominates
  CHECK(mask_canonical_less(mask_bit(3), mask_bit(0) | mask_bit(1)));
}

TEST_CASE("linear extension respects the order") {
  for (const Poset& p : enumerate_posets(5)) {
    const auto pos = linear_extension(p);
    for (int x = 0; x < p.n; ++x)
      for (int y = 0; y < p.n; ++y)
        if (x != y && p.leq(x, y)) CHECK(pos[x] < pos[y]);
  }
}

TEST_CASE("cover pairs of a chain are the consecutive steps") {
  const auto cov = cover_pairs(instances::chain_poset(3));
  CHECK(cov == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}
