#include "ietflip/blowup.hpp"

#include <algorithm>
#include <ostream>

namespace ietflip {

std::ostream& operator<<(std::ostream& os, const SidedPoint& p) {
  return os << p.base << '^' << (p.side == Side::plus ? '+' : '-');
}

SidedPoint eval_blowup(const MapClass& f, const SidedPoint& p) {
  const Branch& b = p.side == Side::plus ? f.branch_right_at(p.base)
                                         : f.branch_left_at(p.base);
  Side out = b.eps > 0 ? p.side : opposite(p.side);
  return {b.apply(p.base), out};
}

namespace {
bool sided_less(const SidedPoint& p, const SidedPoint& q) { return p < q; }
}  // namespace

bool cyclic_compare(const SidedPoint& p, const SidedPoint& q, const SidedPoint& r) {
  if (p == q || q == r || p == r) {
    throw DomainError(Errc::degenerate_triple, "cyclic order needs three distinct points");
  }
  bool pq = sided_less(p, q), qr = sided_less(q, r), rp = sided_less(r, p);
  return (pq && qr) || (qr && rp) || (rp && pq);
}

std::vector<SidedPoint> cleanhat_set(const MapClass& f) {
  std::vector<SidedPoint> candidates;
  Scalar half = Scalar::ratio(1, 2);
  for (const Branch& b : f.branches()) {
    if (b.eps > 0) continue;
    // solutions of -x + t = x on the circle
    CirclePoint x1(b.t.value() / Scalar(2));
    CirclePoint x2(x1.value() + half);
    for (const CirclePoint& x : {x1, x2}) {
      candidates.push_back({x, Side::minus});
      candidates.push_back({x, Side::plus});
    }
  }
  for (const CirclePoint& x : breakpoints(f)) {
    candidates.push_back({x, Side::minus});
    candidates.push_back({x, Side::plus});
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<SidedPoint> out;
  for (const SidedPoint& p : candidates) {
    if (eval_blowup(f, p) == hat(p)) out.push_back(p);
  }
  return out;
}

}  // namespace ietflip
