#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "ietflip/map_class.hpp"

namespace ietflip {

enum class Side : int { minus = -1, plus = +1 };

inline Side opposite(Side s) { return s == Side::plus ? Side::minus : Side::plus; }

/// Point of the blow-up S+- = S x {-,+}: every circle point doubled into the
/// two one-sided approaches x^-, x^+.
struct SidedPoint {
  CirclePoint base;
  Side side = Side::plus;

  bool operator==(const SidedPoint& o) const {
    return base == o.base && side == o.side;
  }
  std::strong_ordering operator<=>(const SidedPoint& o) const {
    if (auto c = base <=> o.base; c != 0) return c;
    return static_cast<int>(side) <=> static_cast<int>(o.side);
  }
};

inline SidedPoint hat(const SidedPoint& p) { return {p.base, opposite(p.side)}; }
inline CirclePoint bar(const SidedPoint& p) { return p.base; }

std::ostream& operator<<(std::ostream& os, const SidedPoint& p);

/// The genuine action of map classes on the blow-up, via one-sided limits:
/// for p = x^s the branch governing side s sends p to (eps*x + t)^(eps*s).
/// Unlike pointwise evaluation this is a group action at every point.
SidedPoint eval_blowup(const MapClass& f, const SidedPoint& p);

/// Is (p, q, r) positively ordered in the cyclic order induced by
/// x^- < x^+ < y^- < y^+ for x < y? Throws degenerate_triple on repeats.
bool cyclic_compare(const SidedPoint& p, const SidedPoint& q, const SidedPoint& r);

/// The finite set {p : f(p) = hat(p)}: only reversing branches contribute,
/// through the fixed points of x -> t - x lying in their domain.
std::vector<SidedPoint> cleanhat_set(const MapClass& f);

}  // namespace ietflip
