#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ietflip/constructions.hpp"
#include "ietflip/keane.hpp"
#include "ietflip/lift.hpp"
#include "ietflip/map_class.hpp"

namespace ietflip::verify {

/// Deterministic generator for randomized suites (fixed engine, modulo
/// sampling, so runs reproduce across platforms).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// uniform-ish integer in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

// random exact data used by the suites (and handy in tests)
CirclePoint random_point(Rng& rng, long max_den = 64);
KeaneForm random_keane(Rng& rng, int min_n, int max_n, bool allow_flips);
MapClass random_class(Rng& rng, int max_n, bool allow_flips);
MapClass random_iet_plus(Rng& rng, int max_n, int min_sings);
MapClass random_exchange(Rng& rng);
MapClass random_partial_rotation(Rng& rng);

struct SuiteResult {
  std::string name;
  std::string detail;
  int total = 0;
  int failed = 0;
  bool passed() const { return total > 0 && failed == 0; }
};

/// Suite names, in acceptance order: group, keane, comrot, lifts, involution,
/// blowup, genparro, arbsmall, gadget, lambda, serialization.
std::vector<std::string> suite_names();

/// Runs one named suite (or "all"). order_bound caps lift-order searches.
std::vector<SuiteResult> run_suites(std::string_view name, std::uint64_t seed,
                                    int order_bound);

}  // namespace ietflip::verify
