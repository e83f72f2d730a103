#include <doctest.h>

#include <algorithm>

#include "ietflip/constructions.hpp"
#include "ietflip/lift.hpp"
#include "ietflip/verify.hpp"
#include "test_util.hpp"

using namespace ietflip;
using tut::arc;
using tut::cp;
using tut::rat;

namespace {
MapClass phi() { return exchange(arc(0, 1, 1, 4), arc(1, 4, 1, 2)); }
MapClass f132() { return make_132_flip(cp(1, 3), cp(2, 3)); }
MapClass f3() { return make_triple_flip(rat(1, 2), rat(1, 4), rat(1, 4)); }
}  // namespace

TEST_CASE("finitely supported permutations") {
  CHECK(FinPerm::make({}).empty());
  CHECK(FinPerm::make({{cp(1, 3), cp(1, 3)}}).empty());  // fixed pairs drop
  FinPerm swap2 = FinPerm::make({{cp(0), cp(1, 2)}, {cp(1, 2), cp(0)}});
  CHECK(swap2.pairs.size() == 2);
  CHECK_THROWS_AS(FinPerm::make({{cp(0), cp(1, 2)}}), DomainError);  // domain != range
}

TEST_CASE("one-sided lifts") {
  MapClass r = rotation(cp(1, 5));
  CHECK(left_lift(r) == right_lift(r));
  CHECK(left_lift(r).table().empty());

  Lift L = left_lift(phi());
  REQUIRE(L.table().size() == 3);
  CHECK(L(cp(0)) == cp(0));  // left-continuous through the wrap
  CHECK(L(cp(1, 4)) == cp(1, 2));
  CHECK(L(cp(1, 2)) == cp(1, 4));
  CHECK(L(cp(1, 8)) == cp(3, 8));
  CHECK(L.preimage(cp(1, 2)) == cp(1, 4));
  CHECK(lift_compose(L, L) == Lift::identity());

  Lift R = right_lift(phi());
  CHECK(R(cp(0)) == cp(1, 4));
  CHECK(!(L == R));

  CHECK_THROWS_AS(left_lift(f132()), DomainError);  // mixed orientations
}

TEST_CASE("lift table validation") {
  // a missing singular point is rejected
  CHECK_THROWS_AS(Lift::make(phi(), {}), DomainError);
  // colliding values are rejected
  std::map<CirclePoint, CirclePoint> bad = {
      {cp(0), cp(0)}, {cp(1, 4), cp(0)}, {cp(1, 2), cp(1, 4)}};
  CHECK_THROWS_AS(Lift::make(phi(), bad), DomainError);
}

TEST_CASE("hyper-clean enumeration: partial rotations") {
  MapClass p = partial_rotation(arc(0, 1, 1, 2), cp(1, 4));
  std::vector<Lift> ls = enumerate_hyperclean_lifts(p);
  REQUIRE(ls.size() == 2);
  auto o1 = continuity_profile(ls[0]).overall;
  auto o2 = continuity_profile(ls[1]).overall;
  CHECK(((o1 == OverallContinuity::all_left && o2 == OverallContinuity::all_right) ||
         (o1 == OverallContinuity::all_right && o2 == OverallContinuity::all_left)));
}

TEST_CASE("hyper-clean enumeration: 132-flip") {
  std::vector<Lift> q = enumerate_hyperclean_lifts(f132());
  REQUIRE(q.size() == 2);
  // the two lifts choose opposite sides at every singular point
  auto p0 = continuity_profile(q[0]).tags;
  auto p1 = continuity_profile(q[1]).tags;
  REQUIRE(p0.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(p0[i].first == p1[i].first);
    CHECK(p0[i].second != p1[i].second);
  }
  CHECK(continuity_profile(q[0]).overall == OverallContinuity::mixed);
  // they are mutually inverse, so q1 o q2 is the exact identity...
  CHECK(lift_invert(q[0]) == q[1]);
  CHECK(lift_compose(q[0], q[1]) == Lift::identity());
  // ...while each squares to a 3-cycle on {0, a, b}
  for (const Lift& L : q) {
    Lift sq = lift_compose(L, L);
    CHECK(sq.map_class().is_identity());
    CHECK(sq.table().size() == 3);
    CHECK(!sq.is_identity());
    CHECK(lift_order(L, 10) == std::optional<int>(6));
  }
}

TEST_CASE("hyper-clean enumeration: triple flip") {
  std::vector<Lift> t = enumerate_hyperclean_lifts(f3());
  REQUIRE(t.size() == 2);
  for (const Lift& L : t) {
    CHECK(lift_order(L, 10) == std::optional<int>(6));
    CHECK(!lift_compose(L, L).is_identity());
    CHECK(is_hyperclean(L));
  }
}

TEST_CASE("lift orders") {
  CHECK(lift_order(left_lift(phi()), 10) == std::optional<int>(2));
  CHECK(lift_order(left_lift(rotation(cp(1, 3))), 10) == std::optional<int>(3));
  CHECK(lift_order(Lift::identity(), 5) == std::optional<int>(1));
  // irrational rotation: no finite order within the bound
  Lift w = left_lift(rotation(CirclePoint(tut::sqrt2())));
  CHECK(!lift_order(w, 40).has_value());
}

TEST_CASE("clean witnesses") {
  Lift moved = Lift::make(MapClass::identity(), {{cp(0), cp(1, 2)}, {cp(1, 2), cp(0)}});
  CHECK(!is_clean({moved}));
  CHECK(is_clean({Lift::identity(), left_lift(phi())}));
  CHECK(!is_hyperclean(moved));  // isolated graph points
}

TEST_CASE("word evaluation") {
  std::vector<std::pair<std::string, Lift>> gens = {
      {"r", left_lift(rotation(cp(1, 3)))},
      {"L", left_lift(phi())},
      {"q", enumerate_hyperclean_lifts(f132())[0]},
  };
  CHECK(word_support(gens, "rrr").empty());
  CHECK(word_support(gens, "LL").empty());
  CHECK(word_support(gens, "rr'").empty());
  FinPerm qq = word_support(gens, "qq");
  CHECK(qq.pairs.size() == 3);  // the 3-cycle on {0, a, b}
  CHECK(qq.pairs.count(cp(0)) == 1);
  CHECK(qq.pairs.count(cp(1, 3)) == 1);
  CHECK(qq.pairs.count(cp(2, 3)) == 1);
  CHECK_THROWS_AS(word_support(gens, "r"), DomainError);   // not a relator
  CHECK_THROWS_AS(word_support(gens, "zz"), DomainError);  // unknown name
}

TEST_CASE("one-sided lifts appear among the hyper-clean ones") {
  verify::Rng rng(67);
  for (int i = 0; i < 30; ++i) {
    MapClass f = verify::random_class(rng, 5, false);
    if (rng.coin()) f = compose(global_flip(), f);  // sometimes all-reversing
    REQUIRE(in_iet_pm(f));
    std::vector<Lift> ls = enumerate_hyperclean_lifts(f);
    Lift L = left_lift(f), R = right_lift(f);
    CHECK(std::find(ls.begin(), ls.end(), L) != ls.end());
    CHECK(std::find(ls.begin(), ls.end(), R) != ls.end());
    for (const Lift& q : ls) {
      CHECK(is_hyperclean(q));
      CHECK(q.map_class() == f);
    }
    CHECK(ls.size() <= (1u << singularities(f).size()));
    // enumeration returns pairwise distinct lifts
    for (std::size_t a = 0; a < ls.size(); ++a) {
      for (std::size_t b = a + 1; b < ls.size(); ++b) CHECK(!(ls[a] == ls[b]));
    }
  }
}

TEST_CASE("projection to classes is a homomorphism") {
  verify::Rng rng(71);
  for (int i = 0; i < 30; ++i) {
    MapClass f = verify::random_class(rng, 5, false);
    MapClass g = verify::random_class(rng, 5, false);
    Lift Lf = rng.coin() ? left_lift(f) : right_lift(f);
    Lift Lg = rng.coin() ? left_lift(g) : right_lift(g);
    Lift both = lift_compose(Lf, Lg);
    CHECK(both.map_class() == compose(f, g));
    CHECK(lift_compose(both, lift_invert(both)) == Lift::identity());
    // evaluation agrees with the composite at assorted points
    for (int j = 0; j < 5; ++j) {
      CirclePoint x = verify::random_point(rng);
      CHECK(both(x) == Lf(Lg(x)));
    }
  }
}

TEST_CASE("order-2 classes lift to order-2 permutations") {
  verify::Rng rng(73);
  for (int i = 0; i < 30; ++i) {
    MapClass f = verify::random_exchange(rng);
    REQUIRE(compose(f, f) == MapClass::identity());
    CHECK(lift_order(left_lift(f), 4) == std::optional<int>(2));
  }
}

TEST_CASE("finite overrides survive composition and invert") {
  Lift L = left_lift(rotation(cp(1, 4)));
  Lift tweak = Lift::make(MapClass::identity(), {{cp(0), cp(1, 8)}, {cp(1, 8), cp(0)}});
  Lift mixed = lift_compose(L, tweak);
  CHECK(mixed.map_class() == rotation(cp(1, 4)));
  CHECK(mixed.table().size() == 2);
  CHECK(!is_hyperclean(mixed));
  CHECK(lift_compose(mixed, lift_invert(mixed)) == Lift::identity());
  CHECK(lift_invert(lift_invert(mixed)) == mixed);
}
