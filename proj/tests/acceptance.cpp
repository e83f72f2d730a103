// Acceptance gate: runs every verification suite at its pinned size and
// tolerance (all checks are exact) and prints one line per criterion.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "ietflip/verify.hpp"

namespace {

struct Criterion {
  const char* suite;
  const char* label;
};

constexpr Criterion kCriteria[] = {
    {"group", "group axioms on 1000 random triples"},
    {"keane", "rearrangement/composition formulas on 500 random forms"},
    {"comrot", "commutator block structure on 200 random classes"},
    {"lifts", "hyper-clean lift counts, orders, profiles"},
    {"involution", "left lifts of 100 exchanges square to the identity"},
    {"blowup", "blow-up action and finite hat-fixed sets"},
    {"genparro", "partial-rotation factorizations on 200 random classes"},
    {"arbsmall", "small-support sweep over 50 parameter tuples"},
    {"gadget", "u,v,w,s gadget at a = 3/16, theta = (sqrt(2)-1)/4"},
    {"lambda", "subgroup membership vs exhaustive enumeration, 500 queries"},
    {"serialization", "bit-exact roundtrips of 500 classes and lifts"},
};

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20260810;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);
  }

  int passed = 0;
  const int n = static_cast<int>(std::size(kCriteria));
  for (int i = 0; i < n; ++i) {
    auto results = ietflip::verify::run_suites(kCriteria[i].suite, seed, 10000);
    const auto& r = results.front();
    bool ok = r.passed();
    passed += ok;
    std::printf("criterion %2d [%-13s] %s  %s (%d checks%s%s)\n", i + 1, kCriteria[i].suite,
                ok ? "PASS" : "FAIL", kCriteria[i].label, r.total, ok ? "" : "; ",
                ok ? "" : r.detail.c_str());
  }
  std::printf("acceptance: %d/%d criteria passed\n", passed, n);
  return passed == n ? 0 : 1;
}
