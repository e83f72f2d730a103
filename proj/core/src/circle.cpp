#include "ietflip/circle.hpp"

#include <algorithm>
#include <ostream>

namespace ietflip {

Scalar geodesic_dist(const CirclePoint& p, const CirclePoint& q) {
  Scalar d = forward_len(q, p);
  Scalar c = Scalar(1) - d;
  return d.cmp(c) <= 0 ? d : c;
}

std::ostream& operator<<(std::ostream& os, const CirclePoint& p) {
  return os << p.value();
}

Interval Interval::arc(const CirclePoint& lo, const CirclePoint& hi) {
  if (lo == hi) {
    throw DomainError(Errc::bad_parameters,
                      "degenerate arc endpoints; use Interval::full_circle()");
  }
  return Interval(lo, hi, false);
}

Interval Interval::full_circle() {
  return Interval(CirclePoint(), CirclePoint(), true);
}

Scalar Interval::length() const {
  if (full_) return Scalar(1);
  return forward_len(lo_, hi_);
}

bool Interval::contains_half_open(const CirclePoint& x) const {
  if (full_) return true;
  if (lo_ < hi_) return lo_ <= x && x < hi_;
  return x >= lo_ || x < hi_;
}

bool Interval::contains_left_open(const CirclePoint& x) const {
  if (full_) return true;
  if (lo_ < hi_) return lo_ < x && x <= hi_;
  return x > lo_ || x <= hi_;
}

bool Interval::contains_closed(const CirclePoint& x) const {
  if (full_) return true;
  if (lo_ < hi_) return lo_ <= x && x <= hi_;
  return x >= lo_ || x <= hi_;
}

bool Interval::contains_open(const CirclePoint& x) const {
  if (full_) return true;
  if (lo_ < hi_) return lo_ < x && x < hi_;
  return x > lo_ || x < hi_;
}

std::ostream& operator<<(std::ostream& os, const Interval& I) {
  if (I.is_full()) return os << "[0,1)";
  return os << '[' << I.lo() << ',' << I.hi() << ')';
}

Interval shift_arc(const Interval& I, const Scalar& s) {
  if (I.is_full()) return I;
  return Interval::arc(CirclePoint(I.lo().value() + s), CirclePoint(I.hi().value() + s));
}

bool closed_arcs_meet(const Interval& A, const Interval& B) {
  if (A.is_full() || B.is_full()) return true;
  return A.contains_closed(B.lo()) || A.contains_closed(B.hi()) ||
         B.contains_closed(A.lo());
}

std::vector<Interval> merge_closed_arcs(std::vector<Interval> arcs) {
  if (arcs.empty()) return {};
  for (const Interval& a : arcs) {
    if (a.is_full()) return {Interval::full_circle()};
  }
  // Cut the circle at every endpoint and classify elementary pieces by their
  // midpoints; closed arcs of positive length make the union the closure of
  // the covered pieces.
  std::vector<CirclePoint> pts;
  for (const Interval& a : arcs) {
    pts.push_back(a.lo());
    pts.push_back(a.hi());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::size_t n = pts.size();
  std::vector<bool> covered(n, false);
  bool all = true;
  for (std::size_t i = 0; i < n; ++i) {
    CirclePoint next = pts[(i + 1) % n];
    Scalar len = n == 1 ? Scalar(1) : forward_len(pts[i], next);
    CirclePoint mid(pts[i].value() + len / Scalar(2));
    for (const Interval& a : arcs) {
      if (a.contains_closed(mid)) {
        covered[i] = true;
        break;
      }
    }
    all = all && covered[i];
  }
  if (all) return {Interval::full_circle()};

  // Stitch maximal runs of covered pieces, cyclically.
  std::vector<Interval> out;
  std::size_t start = 0;
  while (covered[start]) ++start;  // exists: not all covered
  for (std::size_t off = 0; off < n; ++off) {
    std::size_t i = (start + off) % n;
    if (!covered[i]) continue;
    std::size_t j = i;
    std::size_t span = 1;
    while (covered[(j + 1) % n] && span < n) {
      j = (j + 1) % n;
      ++span;
      ++off;
    }
    out.push_back(Interval::arc(pts[i], pts[(j + 1) % n]));
  }
  std::sort(out.begin(), out.end(),
            [](const Interval& x, const Interval& y) { return x.lo() < y.lo(); });
  return out;
}

Scalar closed_arcs_diameter(const std::vector<Interval>& arcs) {
  if (arcs.empty()) return Scalar(0);
  Scalar half = Scalar::ratio(1, 2);
  for (const Interval& a : arcs) {
    if (a.is_full()) return half;
  }
  // Diameter 1/2 iff some arc meets the antipode of another.
  for (const Interval& a : arcs) {
    Interval as = shift_arc(a, half);
    for (const Interval& b : arcs) {
      if (closed_arcs_meet(as, b)) return half;
    }
  }
  // Otherwise the supremum is attained at endpoint pairs.
  std::vector<CirclePoint> ends;
  for (const Interval& a : arcs) {
    ends.push_back(a.lo());
    ends.push_back(a.hi());
  }
  Scalar best(0);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      Scalar d = geodesic_dist(ends[i], ends[j]);
      if (d.cmp(best) > 0) best = d;
    }
  }
  return best;
}

}  // namespace ietflip
