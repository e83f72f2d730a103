#include <doctest.h>

#include "ietflip/constructions.hpp"
#include "ietflip/verify.hpp"
#include "test_util.hpp"

using namespace ietflip;
using tut::cp;
using tut::rat;

TEST_CASE("fixed normal forms") {
  // two halves swapped = rotation by 1/2
  CHECK(from_keane(KeaneForm{{rat(1, 2), rat(1, 2)}, {1, 0}, {1, 1}}) ==
        rotation(cp(1, 2)));
  // one reversed interval = the global flip
  CHECK(from_keane(KeaneForm{{rat(1)}, {0}, {-1}}) == global_flip());
  CHECK(from_keane(KeaneForm{{rat(1)}, {0}, {1}}) == MapClass::identity());

  // 3-cycle form is a fixed point of the roundtrip
  KeaneForm k{{rat(1, 2), rat(1, 4), rat(1, 4)}, {1, 2, 0}, {1, 1, 1}};
  MapClass f = from_keane(k);
  CHECK(from_keane(keane_form(f)) == f);
}

TEST_CASE("length validation") {
  CHECK_THROWS_AS(from_keane(KeaneForm{{rat(1, 2), rat(1, 3)}, {1, 0}, {1, 1}}),
                  DomainError);  // sum != 1
  CHECK_THROWS_AS(from_keane(KeaneForm{{rat(3, 2), rat(-1, 2)}, {1, 0}, {1, 1}}),
                  DomainError);  // negative length
  CHECK_THROWS_AS(from_keane(KeaneForm{{rat(1, 2), rat(1, 2)}, {0, 0}, {1, 1}}),
                  DomainError);  // not a permutation
}

TEST_CASE("interval-model form of a rotation") {
  KeaneForm k = keane_form(rotation(cp(1, 3)));
  REQUIRE(k.size() == 2);
  CHECK(k.lengths[0] == rat(2, 3));
  CHECK(k.lengths[1] == rat(1, 3));
  CHECK(k.sigma == std::vector<int>{1, 0});
  CHECK(k.flips == std::vector<int>{1, 1});
}

TEST_CASE("roundtrips, randomized") {
  verify::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    MapClass f = verify::random_class(rng, 6, true);
    CHECK(from_keane(keane_form(f)) == f);

    // keane_form o from_keane reduces to the admissible representative
    KeaneForm k = verify::random_keane(rng, 1, 6, true);
    MapClass g = from_keane(k);
    CHECK(from_keane(keane_form(g)) == g);
  }
}

TEST_CASE("composition formula, randomized") {
  verify::Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    KeaneForm k = verify::random_keane(rng, 2, 6, false);
    int n = k.size();
    KeaneForm p = verify::random_keane(rng, n, n, false);
    std::vector<int> plus(n, 1);
    MapClass lhs = from_keane(KeaneForm{k.lengths, perm_compose(p.sigma, k.sigma), plus});
    MapClass rhs = compose(from_keane(KeaneForm{perm_act(k.sigma, k.lengths), p.sigma, plus}),
                           from_keane(KeaneForm{k.lengths, k.sigma, plus}));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("flipped placement reverses the interval") {
  // one flipped interval of length 1/2 placed in the second slot
  KeaneForm k{{rat(1, 2), rat(1, 2)}, {1, 0}, {-1, 1}};
  MapClass f = from_keane(k);
  // [0,1/2) reversed onto (1/2,1], [1/2,1) translated onto [0,1/2)
  CHECK(f.eval_right(cp(1, 8)) == cp(7, 8));
  CHECK(f.eval_right(cp(3, 8)) == cp(5, 8));
  CHECK(f.eval_right(cp(3, 4)) == cp(1, 4));
  CHECK(compose(f, f) == MapClass::identity());
}
