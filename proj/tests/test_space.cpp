#include "doctest.h"
#include "oracles.hpp"
#include "tensym/tensym.hpp"

using namespace tensym;
using namespace tensym::instances;

TEST_CASE("validate_tms_space on the named instances") {
  SUBCASE("one-point space without the loop passes") {
    CHECK(validate_tms_space(point_space(false)).pass());
  }
  SUBCASE("one-point space with the loop passes") {
    CHECK(validate_tms_space(point_space(true)).pass());
  }
  SUBCASE("two-point antichain with swap and full relations passes") {
    const TmsSpace s = make_tms_space(antichain_poset(2), {1, 0}, Relation::full(2),
                                      Relation::full(2), 1);
    CHECK(validate_tms_space(s).pass());
  }
  SUBCASE("identity on a chain is not order-reversing") {
    const auto r = validate_tms_space(bad_space_chain2());
    CHECK_FALSE(r.pass());
    const Check* rev = r.find("g-order-reversing");
    REQUIRE(rev != nullptr);
    CHECK_FALSE(rev->pass);
    CHECK(rev->witness == std::vector<int>{0, 1});
    // the failure is isolated: S1 still passes with m=1
    CHECK(r.find("S1")->pass);
  }
  SUBCASE("the 16-element witness space passes at m=2") {
    CHECK(validate_tms_space(b16_space()).pass());
  }
  SUBCASE("S1 catches a g of the wrong order") {
    TmsSpace s = b16_space();
    s.m = 1;  // the 4-cycle squared is not the identity
    const auto r = validate_tms_space(s);
    CHECK_FALSE(r.find("S1")->pass);
  }
  SUBCASE("S2 catches an uncoupled relation pair") {
    const TmsSpace s = make_tms_space(antichain_poset(2), {1, 0},
                                      Relation::from_pairs(2, {{0, 0}}),
                                      Relation(2, {0, 0}), 1);
    const auto r = validate_tms_space(s);
    CHECK_FALSE(r.find("S2")->pass);
    CHECK(r.find("S3")->pass);
  }
  SUBCASE("the decreasing condition is its own named check") {
    // on a chain, a relation containing (0,1) but not (1,1) is not
    // up-closed in the first argument
    const TmsSpace s = make_tms_space(chain_poset(2), {1, 0},
                                      Relation::from_pairs(2, {{0, 1}}),
                                      Relation::from_pairs(2, {{0, 1}}), 1);
    const auto r = validate_tms_space(s);
    CHECK_FALSE(r.find("RG-decreasing")->pass);
  }
}

TEST_CASE("box operator along a relation") {
  const Relation empty(2, {0, 0});
  CHECK(box_along(empty, 0) == 3);  // empty preimages are inside anything
  const Relation full = Relation::full(2);
  CHECK(box_along(full, 0) == 0);
  CHECK(box_along(full, 3) == 3);
}

TEST_CASE("relation pair round-trip") {
  const auto r = Relation::from_pairs(3, {{0, 1}, {2, 0}, {2, 2}});
  CHECK(r.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {2, 0}, {2, 2}});
  CHECK(r.preimage(0) == mask_bit(2));
  CHECK(r.preimage(1) == mask_bit(0));
  CHECK_THROWS_AS(Relation::from_pairs(2, {{0, 5}}), IndexError);
}
