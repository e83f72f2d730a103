#include <doctest.h>

#include "ietflip/subgroup.hpp"
#include "ietflip/verify.hpp"
#include "test_util.hpp"

using namespace ietflip;
using tut::arc;
using tut::cp;
using tut::rat;

TEST_CASE("interval membership, wrapping included") {
  Interval I = arc(3, 4, 1, 4);  // [3/4, 1/4), through 0
  CHECK(I.contains_half_open(cp(3, 4)));
  CHECK(I.contains_half_open(cp(0)));
  CHECK(I.contains_half_open(cp(7, 8)));
  CHECK(!I.contains_half_open(cp(1, 4)));
  CHECK(!I.contains_half_open(cp(1, 2)));
  CHECK(I.contains_left_open(cp(1, 4)));
  CHECK(!I.contains_left_open(cp(3, 4)));
  CHECK(I.length() == rat(1, 2));
  CHECK(Interval::full_circle().contains_open(cp(1, 2)));
  CHECK_THROWS_AS(Interval::arc(cp(1, 3), cp(1, 3)), DomainError);
}

TEST_CASE("closed arc union") {
  auto got = merge_closed_arcs({arc(0, 1, 1, 4), arc(1, 4, 1, 2)});
  REQUIRE(got.size() == 1);  // touching arcs merge
  CHECK(got[0] == arc(0, 1, 1, 2));

  got = merge_closed_arcs({arc(1, 2, 7, 8), arc(0, 1, 1, 4)});
  CHECK(got.size() == 2);

  got = merge_closed_arcs({arc(0, 1, 2, 3), arc(1, 2, 1, 8)});  // covers everything
  REQUIRE(got.size() == 1);
  CHECK(got[0].is_full());

  CHECK(merge_closed_arcs({}).empty());

  // wrap-around merge
  got = merge_closed_arcs({arc(3, 4, 1, 8), arc(1, 8, 1, 4)});
  REQUIRE(got.size() == 1);
  CHECK(got[0] == arc(3, 4, 1, 4));
}

TEST_CASE("diameter of arc unions") {
  CHECK(closed_arcs_diameter({}) == rat(0));
  CHECK(closed_arcs_diameter({arc(0, 1, 1, 4)}) == rat(1, 4));
  // an arc of length >= 1/2 contains an antipodal pair
  CHECK(closed_arcs_diameter({arc(0, 1, 3, 5)}) == rat(1, 2));
  CHECK(closed_arcs_diameter({Interval::full_circle()}) == rat(1, 2));
  // antipodal pair across two arcs
  CHECK(closed_arcs_diameter({arc(0, 1, 1, 5), arc(2, 5, 3, 5)}) == rat(1, 2));
  // no antipodal pair: maximum sits at endpoints, not at 1/2
  auto arcs = std::vector<Interval>{arc(0, 1, 1, 20), arc(7, 20, 8, 20), arc(14, 20, 15, 20)};
  CHECK(closed_arcs_diameter(arcs) == rat(2, 5));
}

TEST_CASE("lambda membership examples") {
  SubgroupPresentation sixth({cp(1, 6)});
  CHECK(lambda_contains(sixth, cp(1, 2)));
  CHECK(!lambda_contains(sixth, cp(1, 4)));
  CHECK(lambda_contains(sixth, cp(0)));

  // rank-2: <sqrt(2) mod 1, 1/3> contains 2*sqrt(2) + 1/3 mod 1
  SubgroupPresentation L({CirclePoint(tut::sqrt2()), cp(1, 3)});
  CHECK(lambda_contains(L, CirclePoint(tut::sqrt2() * Scalar(2) + rat(1, 3))));
  CHECK(!lambda_contains(L, CirclePoint(tut::sqrt2() * rat(1, 2))));
  CHECK(!lambda_contains(L, cp(1, 4)));

  CHECK_THROWS_AS(SubgroupPresentation({}), DomainError);
}

TEST_CASE("lambda membership properties") {
  verify::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    std::vector<CirclePoint> gens;
    int ng = static_cast<int>(rng.range(1, 3));
    for (int j = 0; j < ng; ++j) gens.push_back(verify::random_point(rng, 12));
    SubgroupPresentation L(gens);
    for (const CirclePoint& g : gens) CHECK(lambda_contains(L, g));
    // closed under addition
    CirclePoint x = gens[static_cast<std::size_t>(rng.range(0, ng - 1))];
    CirclePoint y = gens[static_cast<std::size_t>(rng.range(0, ng - 1))];
    CHECK(lambda_contains(L, x + y));
    CHECK(lambda_contains(L, x - y));
  }
}
