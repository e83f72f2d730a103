#pragma once

#include <vector>

#include "ietflip/circle.hpp"

namespace ietflip {

/// Finitely generated subgroup of R/Z, given by a nonempty generator list.
struct SubgroupPresentation {
  std::vector<CirclePoint> generators;

  explicit SubgroupPresentation(std::vector<CirclePoint> gens);
};

/// Does x lie in the subgroup of R/Z generated by L?
///
/// Each point has exact coordinates (a, b) with value a + b*sqrt(m); after
/// clearing denominators the question is membership of an integer vector in
/// the Z-lattice spanned by the generator vectors together with (1, 0), the
/// wrap generator. Decided by integer column reduction (Hermite form).
bool lambda_contains(const SubgroupPresentation& L, const CirclePoint& x);

}  // namespace ietflip
