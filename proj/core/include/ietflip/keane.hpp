#pragma once

#include <vector>

#include "ietflip/map_class.hpp"

namespace ietflip {

/// Lengths-and-permutation normal form of an interval exchange, extended
/// with flips: the circle is cut at 0 into intervals X_1..X_n of the given
/// lengths; X_i is placed into slot sigma(i) of the rearranged lengths,
/// reversed first when flips[i] == -1. Internally 0-based.
struct KeaneForm {
  std::vector<Scalar> lengths;  // positive, summing to 1
  std::vector<int> sigma;       // permutation of 0..n-1: interval i -> slot sigma[i]
  std::vector<int> flips;       // +1 or -1 per interval

  int size() const { return static_cast<int>(lengths.size()); }
  bool operator==(const KeaneForm&) const = default;
};

/// Build the class rearranging the intervals; throws bad_lengths when the
/// lengths are not positive with sum 1.
MapClass from_keane(const KeaneForm& k);

/// Interval-model normal form of f: the circle is cut at 0, at every
/// breakpoint, and at the points whose germ image crosses 0, so the pieces
/// rearrange inside [0,1]. Left inverse of from_keane on canonical classes.
KeaneForm keane_form(const MapClass& f);

/// (psi o sigma)(i) = psi(sigma(i)).
std::vector<int> perm_compose(const std::vector<int>& psi, const std::vector<int>& sigma);
/// (sigma . u)_k = u_{sigma^{-1}(k)}: lengths follow their interval to its slot.
std::vector<Scalar> perm_act(const std::vector<int>& sigma, const std::vector<Scalar>& u);
std::vector<int> perm_invert(const std::vector<int>& sigma);
bool is_permutation(const std::vector<int>& sigma);

}  // namespace ietflip
