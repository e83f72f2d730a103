#include "ietflip/constructions.hpp"

#include <algorithm>
#include <cassert>

namespace ietflip {

MapClass rotation(const CirclePoint& t) {
  return MapClass::from_branches({Branch{Interval::full_circle(), +1, t}});
}

MapClass global_flip() {
  return MapClass::from_branches({Branch{Interval::full_circle(), -1, CirclePoint()}});
}

namespace {

bool open_arcs_overlap(const Interval& A, const Interval& B) {
  if (A.is_full() || B.is_full()) return true;
  return A.contains_open(B.lo()) || A.contains_open(B.hi()) ||
         B.contains_open(A.lo()) || B.contains_open(A.hi()) || A.lo() == B.lo();
}

// Partition the circle along the given cut points and assign each elementary
// piece the branch data chosen by `pick` from its midpoint.
template <typename Pick>
MapClass assemble(std::vector<CirclePoint> cuts, Pick pick) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Branch> bs;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const CirclePoint& p = cuts[i];
    const CirclePoint& q = cuts[(i + 1) % cuts.size()];
    Scalar len = cuts.size() == 1 ? Scalar(1) : forward_len(p, q);
    CirclePoint mid(p.value() + len / Scalar(2));
    auto [eps, t] = pick(mid);
    Interval dom = cuts.size() == 1 ? Interval::full_circle() : Interval::arc(p, q);
    bs.push_back(Branch{dom, eps, t});
  }
  return MapClass::from_branches(std::move(bs));
}

}  // namespace

MapClass exchange(const Interval& I, const Interval& J) {
  if (I.is_full() || J.is_full()) {
    throw DomainError(Errc::overlap, "exchange needs two proper intervals");
  }
  if (!(I.length() == J.length())) {
    throw DomainError(Errc::length_mismatch, "exchanged intervals must have equal length");
  }
  if (open_arcs_overlap(I, J)) {
    throw DomainError(Errc::overlap, "exchanged intervals must be essentially disjoint");
  }
  CirclePoint tIJ = J.lo() - I.lo();
  CirclePoint tJI = I.lo() - J.lo();
  return assemble({I.lo(), I.hi(), J.lo(), J.hi()},
                  [&](const CirclePoint& mid) -> std::pair<int, CirclePoint> {
                    if (I.contains_open(mid)) return {+1, tIJ};
                    if (J.contains_open(mid)) return {+1, tJI};
                    return {+1, CirclePoint()};
                  });
}

MapClass partial_rotation(const Interval& I, const CirclePoint& theta) {
  Scalar L = I.length();
  // rotation amount inside the closed-up interval, reduced mod L
  Scalar th = theta.value();
  th -= Scalar(mpq_class((th / L).floor())) * L;
  if (th.is_zero()) return MapClass::identity();
  if (I.is_full()) return rotation(CirclePoint(th));

  CirclePoint A = I.lo(), B = I.hi();
  CirclePoint C(A.value() + (L - th));  // preimage of the closed-up wrap
  CirclePoint t1(th), t2(th - L);
  return assemble({A, C, B},
                  [&](const CirclePoint& mid) -> std::pair<int, CirclePoint> {
                    if (Interval::arc(A, C).contains_open(mid)) return {+1, t1};
                    if (Interval::arc(C, B).contains_open(mid)) return {+1, t2};
                    return {+1, CirclePoint()};
                  });
}

MapClass flip_on(const Interval& I) {
  if (I.is_full()) return global_flip();
  CirclePoint t(I.lo().value() + I.hi().value());
  return assemble({I.lo(), I.hi()},
                  [&](const CirclePoint& mid) -> std::pair<int, CirclePoint> {
                    if (I.contains_open(mid)) return {-1, t};
                    return {+1, CirclePoint()};
                  });
}

MapClass make_132_flip(const CirclePoint& a, const CirclePoint& b) {
  if (!(CirclePoint() < a && a < b)) {
    throw DomainError(Errc::bad_parameters, "need 0 < a < b < 1");
  }
  if (!(forward_len(a, b) == forward_len(b, CirclePoint()))) {
    throw DomainError(Errc::bad_parameters,
                      "need b - a = 1 - b so the exchanged intervals match");
  }
  CirclePoint zero;
  std::vector<Branch> bs = {
      Branch{Interval::arc(zero, a), -1, a},
      Branch{Interval::arc(a, b), +1, b - a},
      Branch{Interval::arc(b, zero), +1, a - b},
  };
  return MapClass::from_branches(std::move(bs));
}

MapClass make_triple_flip(const Scalar& l1, const Scalar& l2, const Scalar& l3) {
  if (l1.sign() <= 0 || l2.sign() <= 0 || l3.sign() <= 0 ||
      !(l1 + l2 + l3 == Scalar(1))) {
    throw DomainError(Errc::bad_parameters,
                      "triple flip needs three positive lengths summing to 1");
  }
  CirclePoint c0, c1(l1), c2(l1 + l2);
  auto self_flip = [](const CirclePoint& lo, const CirclePoint& hi) {
    return Branch{Interval::arc(lo, hi), -1, CirclePoint(lo.value() + hi.value())};
  };
  return MapClass::from_branches({self_flip(c0, c1), self_flip(c1, c2), self_flip(c2, c0)});
}

bool is_triple_flip(const MapClass& f) {
  const auto& bs = f.branches();
  if (bs.size() != 3) return false;
  for (const Branch& b : bs) {
    if (b.eps > 0) return false;
    if (!(b.t == CirclePoint(b.dom.lo().value() + b.dom.hi().value()))) return false;
  }
  return true;
}

bool is_132_flip(const MapClass& f) {
  const auto& bs = f.branches();
  if (bs.size() != 3) return false;
  int rev = -1;
  for (int i = 0; i < 3; ++i) {
    if (bs[i].eps < 0) {
      if (rev >= 0) return false;
      rev = i;
    }
  }
  if (rev < 0) return false;
  const Branch& R = bs[rev];
  // going counterclockwise from the reversed interval: R = [p,q), then [q,r),
  // then [r,p), the last two exchanged by translations
  const Branch* X = nullptr;
  const Branch* Y = nullptr;
  for (int i = 0; i < 3; ++i) {
    if (i == rev) continue;
    if (bs[i].dom.lo() == R.dom.hi()) X = &bs[i];
    else Y = &bs[i];
  }
  if (!X || !Y) return false;
  if (!(X->dom.hi() == Y->dom.lo()) || !(Y->dom.hi() == R.dom.lo())) return false;
  // R reverses onto itself
  if (!(R.t == CirclePoint(R.dom.lo().value() + R.dom.hi().value()))) return false;
  // X and Y swap
  const CirclePoint& q = X->dom.lo();
  const CirclePoint& r = Y->dom.lo();
  if (!(X->t == r - q) || !(Y->t == q - r)) return false;
  return forward_len(q, r) == forward_len(r, R.dom.lo());
}

CommutatorReport comrot(const MapClass& f, const CirclePoint& t) {
  if (!is_orientation_preserving(f)) {
    throw DomainError(Errc::precondition, "comrot expects an orientation-preserving class");
  }
  if (t.is_zero()) {
    throw DomainError(Errc::precondition, "comrot expects 0 < t < E(f)");
  }
  std::optional<Scalar> E = min_sing_gap(f);
  if (E && t.value().cmp(*E) >= 0) {
    throw DomainError(Errc::precondition, "comrot expects 0 < t < E(f)");
  }

  MapClass r = rotation(t);
  MapClass c = compose(invert(f), compose(r, compose(f, invert(r))));

  CommutatorReport rep{c, {}, {}, true};
  std::vector<CirclePoint> sing = singularities(f);
  if (sing.empty()) {
    if (!c.is_identity()) {
      throw DomainError(Errc::structure, "commutator of a rotation must vanish");
    }
    return rep;
  }

  auto fail = [](const char* what) -> CommutatorReport {
    throw DomainError(Errc::structure, what);
  };

  int k = static_cast<int>(sing.size());
  for (const CirclePoint& x : sing) {
    rep.blocks.push_back(Interval::arc(x, CirclePoint(x.value() + t.value())));
  }
  // each block must be carried by a single translation branch of c
  rep.block_perm.assign(k, -1);
  std::vector<const Branch*> moving;
  for (const Branch& b : c.branches()) {
    if (!b.is_identity()) moving.push_back(&b);
  }
  if (static_cast<int>(moving.size()) != k) {
    return fail("commutator must move exactly one branch per singularity block");
  }
  for (int i = 0; i < k; ++i) {
    const Branch* b = nullptr;
    for (const Branch* m : moving) {
      if (m->dom.lo() == sing[i]) b = m;
    }
    if (!b || b->eps < 0 || !(b->dom == rep.blocks[i] /* same [x, x+t) data */)) {
      return fail("block is not carried by a single translation branch");
    }
    CirclePoint dest = sing[i] + b->t;
    auto it = std::find(sing.begin(), sing.end(), dest);
    if (it == sing.end()) return fail("block translated off the block family");
    rep.block_perm[i] = static_cast<int>(it - sing.begin());
    if (rep.block_perm[i] == i) return fail("commutator preserves a block");
  }
  std::vector<bool> seen(k, false);
  for (int j : rep.block_perm) {
    if (seen[j]) return fail("block images collide");
    seen[j] = true;
  }
  // essential support is exactly the union of the blocks
  std::vector<Interval> support = essential_support(c);
  if (!(support == merge_closed_arcs(rep.blocks))) {
    return fail("essential support differs from the block union");
  }
  return rep;
}

MapClass arbsmall(const CirclePoint& rho, const Scalar& eps, const Scalar& eta,
                  const CirclePoint& lambda, const CirclePoint& lambda_prime) {
  const Scalar& r = rho.value();
  Scalar cap = r.cmp(Scalar(1) - r) <= 0 ? r : Scalar(1) - r;  // min(rho, 1-rho)
  auto pre = [](bool ok, const char* what) {
    if (!ok) throw DomainError(Errc::precondition, what);
  };
  pre(r.sign() > 0, "rho must be a proper interval length");
  pre(eps.sign() > 0 && (eps * Scalar(5)).cmp(cap) < 0, "need 0 < eps < min(rho,1-rho)/5");
  pre(eta.sign() > 0 && eta.cmp(eps) <= 0, "need 0 < eta <= eps");
  const Scalar& l = lambda.value();
  const Scalar& lp = lambda_prime.value();
  pre((Scalar(3) * eps).cmp(l) < 0 && l.cmp(Scalar(4) * eps) < 0, "need 3*eps < lambda < 4*eps");
  pre((Scalar(3) * eps).cmp(lp) < 0 && lp.cmp(Scalar(4) * eps) < 0,
      "need 3*eps < lambda' < 4*eps");
  pre(l.cmp(lp) <= 0, "need lambda <= lambda' so q carries [rho,rho+eta] into [lambda,5*eps]");

  Interval base = Interval::arc(CirclePoint(), rho);
  MapClass f = partial_rotation(base, CirclePoint(r - Scalar(2) * eps));
  MapClass c = comrot(f, CirclePoint(eta)).c;
  Interval shifted = Interval::arc(lambda, CirclePoint(l + r));
  MapClass q = partial_rotation(shifted, lambda_prime);
  return compose(q, compose(c, invert(q)));
}

std::vector<MapClass> decompose_partial_rotations(const MapClass& f) {
  if (!is_orientation_preserving(f)) {
    throw DomainError(Errc::not_orientation_preserving,
                      "partial-rotation decomposition applies to IET+ classes");
  }
  KeaneForm k = keane_form(f);
  int n = k.size();
  if (n == 1) return {};

  // bubble-sort the slot sequence; each swap is an adjacent transposition,
  // and sigma = tau_m o ... o tau_1 in swap order
  std::vector<int> seq = k.sigma;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r + 1 < n; ++r) {
      if (seq[r] > seq[r + 1]) {
        std::swap(seq[r], seq[r + 1]);
        swaps.push_back(r);
        changed = true;
      }
    }
  }

  std::vector<MapClass> factors;  // outermost first
  std::vector<Scalar> v = k.lengths;
  for (int r : swaps) {
    std::vector<int> tau(n);
    for (int i = 0; i < n; ++i) tau[i] = i;
    std::swap(tau[r], tau[r + 1]);
    factors.push_back(from_keane(KeaneForm{v, tau, std::vector<int>(n, 1)}));
    v = perm_act(tau, v);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

StabilizerGadget t_stabr_gadget(const CirclePoint& a, const CirclePoint& w_theta) {
  const Scalar& av = a.value();
  if (!(Scalar::ratio(1, 8).cmp(av) < 0 && av.cmp(Scalar::ratio(1, 4)) < 0)) {
    throw DomainError(Errc::precondition, "need 1/8 < a < 1/4");
  }
  if (w_theta.value().surd_part() == 0) {
    throw DomainError(Errc::precondition,
                      "w must have an irrational rotation coordinate to get infinite order");
  }
  Scalar b = Scalar(1) - Scalar(4) * av;
  CirclePoint a2(av * 2), a2b(av * 2 + b), a3b(av * 3 + b), zero;
  StabilizerGadget g{
      exchange(Interval::arc(zero, a), Interval::arc(a2b, a3b)),
      exchange(Interval::arc(a, a2), Interval::arc(a3b, zero)),
      partial_rotation(Interval::arc(zero, a2), w_theta),
      global_flip(),
  };
  return g;
}

}  // namespace ietflip
