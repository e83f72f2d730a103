#include <doctest.h>

#include <algorithm>

#include "ietflip/blowup.hpp"
#include "ietflip/constructions.hpp"
#include "ietflip/verify.hpp"
#include "test_util.hpp"

using namespace ietflip;
using tut::arc;
using tut::cp;
using tut::rat;

namespace {
SidedPoint sp(long n, long d, Side s) { return {cp(n, d), s}; }
MapClass phi() { return exchange(arc(0, 1, 1, 4), arc(1, 4, 1, 2)); }
}  // namespace

TEST_CASE("hat and bar") {
  CHECK(hat(sp(0, 1, Side::plus)) == sp(0, 1, Side::minus));
  SidedPoint p = sp(1, 3, Side::minus);
  CHECK(hat(hat(p)) == p);
  CHECK(bar(p) == cp(1, 3));
}

TEST_CASE("blow-up evaluation") {
  CHECK(eval_blowup(rotation(cp(1, 4)), sp(0, 1, Side::plus)) == sp(1, 4, Side::plus));
  CHECK(eval_blowup(global_flip(), sp(0, 1, Side::plus)) == sp(0, 1, Side::minus));
  CHECK(eval_blowup(phi(), sp(1, 4, Side::minus)) == sp(1, 2, Side::minus));
  CHECK(eval_blowup(phi(), sp(1, 4, Side::plus)) == sp(0, 1, Side::plus));
}

TEST_CASE("cyclic order") {
  CHECK(cyclic_compare(sp(0, 1, Side::minus), sp(0, 1, Side::plus), sp(1, 2, Side::minus)));
  CHECK(!cyclic_compare(sp(0, 1, Side::plus), sp(0, 1, Side::minus), sp(1, 2, Side::minus)));
  CHECK(cyclic_compare(sp(1, 3, Side::plus), sp(2, 3, Side::minus), sp(1, 3, Side::minus)));
  CHECK_THROWS_AS(cyclic_compare(sp(0, 1, Side::plus), sp(0, 1, Side::plus),
                                 sp(1, 2, Side::minus)),
                  DomainError);
}

TEST_CASE("cleanhat sets") {
  CHECK(cleanhat_set(rotation(cp(1, 3))).empty());
  CHECK(cleanhat_set(phi()).empty());

  auto s = cleanhat_set(global_flip());
  REQUIRE(s.size() == 4);
  CHECK(std::count(s.begin(), s.end(), sp(0, 1, Side::minus)) == 1);
  CHECK(std::count(s.begin(), s.end(), sp(0, 1, Side::plus)) == 1);
  CHECK(std::count(s.begin(), s.end(), sp(1, 2, Side::minus)) == 1);
  CHECK(std::count(s.begin(), s.end(), sp(1, 2, Side::plus)) == 1);

  // one interior fixed base per reversed interval, two sides each
  CHECK(cleanhat_set(make_triple_flip(rat(1, 2), rat(1, 4), rat(1, 4))).size() == 6);
}

TEST_CASE("the action is a genuine action, randomized") {
  verify::Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    MapClass f = verify::random_class(rng, 5, true);
    MapClass g = verify::random_class(rng, 5, true);
    MapClass h = compose(f, g);
    std::vector<SidedPoint> pts;
    for (const CirclePoint& x : breakpoints(f)) {
      pts.push_back({x, Side::minus});
      pts.push_back({x, Side::plus});
    }
    for (const CirclePoint& x : breakpoints(g)) {
      pts.push_back({x, Side::minus});
      pts.push_back({x, Side::plus});
    }
    for (int j = 0; j < 10; ++j) {
      pts.push_back({verify::random_point(rng), rng.coin() ? Side::plus : Side::minus});
    }
    for (const SidedPoint& p : pts) {
      CHECK(eval_blowup(h, p) == eval_blowup(f, eval_blowup(g, p)));
    }
  }
}

TEST_CASE("projection is near-equivariant") {
  verify::Rng rng(53);
  for (int i = 0; i < 50; ++i) {
    MapClass f = verify::random_class(rng, 6, true);
    CirclePoint x = verify::random_point(rng, 997);  // almost surely off the breakpoints
    auto bps = breakpoints(f);
    if (std::find(bps.begin(), bps.end(), x) != bps.end()) continue;
    for (Side s : {Side::minus, Side::plus}) {
      CHECK(bar(eval_blowup(f, {x, s})) == f.eval_right(x));
    }
  }
}

TEST_CASE("hat-incompatibility projects onto the singular set") {
  verify::Rng rng(59);
  for (int i = 0; i < 40; ++i) {
    MapClass f = verify::random_class(rng, 6, true);
    std::vector<CirclePoint> sing = singularities(f);
    auto is_sing = [&sing](const CirclePoint& x) {
      return std::find(sing.begin(), sing.end(), x) != sing.end();
    };
    std::vector<SidedPoint> pts;
    for (const CirclePoint& x : breakpoints(f)) {
      pts.push_back({x, Side::minus});
      pts.push_back({x, Side::plus});
    }
    for (int j = 0; j < 10; ++j) {
      pts.push_back({verify::random_point(rng), rng.coin() ? Side::plus : Side::minus});
    }
    for (const SidedPoint& p : pts) {
      bool bad = !(eval_blowup(f, hat(p)) == hat(eval_blowup(f, p)));
      CHECK(bad == is_sing(bar(p)));
    }
  }
}

TEST_CASE("cleanhat size bound") {
  verify::Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    MapClass f = verify::random_class(rng, 6, true);
    int reversed = 0;
    for (const Branch& b : f.branches()) reversed += b.eps < 0;
    CHECK(cleanhat_set(f).size() <=
          4 * static_cast<std::size_t>(reversed) + 2 * breakpoints(f).size());
  }
}
