#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "ietflip/scalar.hpp"

namespace ietflip {

/// Point of the circle S = R/Z, stored as its exact representative in [0, 1).
class CirclePoint {
 public:
  CirclePoint() : v_() {}
  /// Reduces s modulo 1 (exact floor).
  explicit CirclePoint(const Scalar& s) : v_(s - Scalar(mpq_class(s.floor()))) {}

  const Scalar& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  friend CirclePoint operator+(const CirclePoint& p, const CirclePoint& q) {
    return CirclePoint(p.v_ + q.v_);
  }
  friend CirclePoint operator-(const CirclePoint& p, const CirclePoint& q) {
    return CirclePoint(p.v_ - q.v_);
  }
  CirclePoint operator-() const { return CirclePoint(-v_); }

  bool operator==(const CirclePoint& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const CirclePoint& o) const { return v_ <=> o.v_; }

 private:
  Scalar v_;
};

inline CirclePoint reduce_mod1(const Scalar& s) { return CirclePoint(s); }

/// Total order on the representatives in [0, 1): -1, 0 or +1.
inline int circle_compare(const CirclePoint& p, const CirclePoint& q) {
  return p.value().cmp(q.value());
}

/// Forward (counterclockwise) length from p to q, in [0, 1).
inline Scalar forward_len(const CirclePoint& p, const CirclePoint& q) {
  return (q - p).value();
}

/// Geodesic distance min(d, 1-d) for d = (p - q) mod 1; lands in [0, 1/2].
Scalar geodesic_dist(const CirclePoint& p, const CirclePoint& q);

std::ostream& operator<<(std::ostream& os, const CirclePoint& p);

/// Arc of the circle from lo counterclockwise to hi. The library reads it as
/// half-open [lo, hi) inside map data and as closed [lo, hi] in support and
/// block computations; wrapping past 0 is allowed (lo > hi). A full circle is
/// a distinguished value with lo = hi = 0.
class Interval {
 public:
  static Interval arc(const CirclePoint& lo, const CirclePoint& hi);
  static Interval full_circle();

  bool is_full() const { return full_; }
  const CirclePoint& lo() const { return lo_; }
  const CirclePoint& hi() const { return hi_; }

  /// (hi - lo) mod 1, or 1 for the full circle; always in (0, 1].
  Scalar length() const;

  bool contains_half_open(const CirclePoint& x) const;  // [lo, hi)
  bool contains_left_open(const CirclePoint& x) const;  // (lo, hi]
  bool contains_closed(const CirclePoint& x) const;     // [lo, hi]
  bool contains_open(const CirclePoint& x) const;       // (lo, hi)

  bool operator==(const Interval& o) const {
    return full_ == o.full_ && lo_ == o.lo_ && hi_ == o.hi_;
  }

 private:
  Interval(CirclePoint lo, CirclePoint hi, bool full)
      : lo_(lo), hi_(hi), full_(full) {}
  CirclePoint lo_, hi_;
  bool full_;
};

std::ostream& operator<<(std::ostream& os, const Interval& I);

/// Translate a closed arc by s.
Interval shift_arc(const Interval& I, const Scalar& s);

/// Do two closed arcs intersect?
bool closed_arcs_meet(const Interval& A, const Interval& B);

/// Canonical union of closed arcs: merged, sorted by lo; {full} if they
/// cover the circle.
std::vector<Interval> merge_closed_arcs(std::vector<Interval> arcs);

/// Diameter sup{d(x,y)} of a finite union of closed arcs; 0 when empty.
/// Equals 1/2 exactly when the union contains an antipodal pair; otherwise
/// the maximum is attained at arc endpoints.
Scalar closed_arcs_diameter(const std::vector<Interval>& arcs);

}  // namespace ietflip
