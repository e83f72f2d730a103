#include "ietflip/map_class.hpp"

#include <algorithm>
#include <cassert>

namespace ietflip {

namespace {

// Start of the image arc of b, reading images as arcs of the same length:
// [lo+t, hi+t) for preserving branches, (t-hi, t-lo] for reversing ones.
CirclePoint image_start(const Branch& b) {
  if (b.eps > 0) return b.dom.is_full() ? b.t : b.dom.lo() + b.t;
  return b.dom.is_full() ? b.t : CirclePoint(b.t.value() - b.dom.hi().value());
}

void merge_adjacent(std::vector<Branch>& bs) {
  bool changed = true;
  while (changed && bs.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      std::size_t j = (i + 1) % bs.size();
      if (i == j) break;
      if (!bs[i].same_isometry(bs[j])) continue;
      assert(bs[i].dom.hi() == bs[j].dom.lo());
      if (bs[j].dom.hi() == bs[i].dom.lo()) {
        // the two pieces close up into the whole circle
        Branch whole{Interval::full_circle(), bs[i].eps, bs[i].t};
        bs = {whole};
      } else {
        bs[i].dom = Interval::arc(bs[i].dom.lo(), bs[j].dom.hi());
        bs.erase(bs.begin() + static_cast<std::ptrdiff_t>(j));
      }
      changed = true;
      break;
    }
  }
}

}  // namespace

MapClass MapClass::from_branches(std::vector<Branch> bs) {
  if (bs.empty()) throw DomainError(Errc::overlap, "no branches given");
  for (const Branch& b : bs) {
    if (b.eps != 1 && b.eps != -1) {
      throw DomainError(Errc::bad_parameters, "branch orientation must be +1 or -1");
    }
  }

  // domain partition
  bool any_full = false;
  for (const Branch& b : bs) any_full = any_full || b.dom.is_full();
  if (any_full) {
    if (bs.size() != 1) {
      throw DomainError(Errc::overlap, "a full-circle branch cannot coexist with others");
    }
  } else {
    std::sort(bs.begin(), bs.end(), [](const Branch& x, const Branch& y) {
      return x.dom.lo() < y.dom.lo();
    });
    for (std::size_t i = 0; i < bs.size(); ++i) {
      const Branch& cur = bs[i];
      const Branch& nxt = bs[(i + 1) % bs.size()];
      if (i + 1 < bs.size() && cur.dom.lo() == nxt.dom.lo()) {
        throw DomainError(Errc::overlap, "two branch domains share a left endpoint");
      }
      if (!(cur.dom.hi() == nxt.dom.lo())) {
        throw DomainError(Errc::overlap, "branch domains do not partition the circle");
      }
    }
  }

  // piecewise bijectivity: image interiors tile the circle
  if (bs.size() > 1) {
    std::vector<std::pair<CirclePoint, Scalar>> imgs;
    imgs.reserve(bs.size());
    for (const Branch& b : bs) imgs.emplace_back(image_start(b), b.dom.length());
    std::sort(imgs.begin(), imgs.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      const auto& cur = imgs[i];
      const auto& nxt = imgs[(i + 1) % imgs.size()];
      if (i + 1 < imgs.size() && cur.first == nxt.first) {
        throw DomainError(Errc::not_bijective, "two branch images overlap");
      }
      if (!(CirclePoint(cur.first.value() + cur.second) == nxt.first)) {
        throw DomainError(Errc::not_bijective, "branch images do not tile the circle");
      }
    }
  }

  if (!any_full) {
    merge_adjacent(bs);
    std::sort(bs.begin(), bs.end(), [](const Branch& x, const Branch& y) {
      return x.dom.lo() < y.dom.lo();
    });
  } else {
    // normalize the cut of a redundant single-branch presentation
    bs[0].dom = Interval::full_circle();
  }
  return MapClass(std::move(bs), canonical_tag{});
}

MapClass MapClass::identity() {
  return from_branches({Branch{Interval::full_circle(), +1, CirclePoint()}});
}

bool MapClass::is_identity() const {
  return bs_.size() == 1 && bs_[0].is_identity();
}

const Branch& MapClass::branch_right_at(const CirclePoint& x) const {
  for (const Branch& b : bs_) {
    if (b.dom.contains_half_open(x)) return b;
  }
  assert(false && "branch domains partition the circle");
  return bs_.front();
}

const Branch& MapClass::branch_left_at(const CirclePoint& x) const {
  for (const Branch& b : bs_) {
    if (b.dom.contains_left_open(x)) return b;
  }
  assert(false && "branch domains partition the circle");
  return bs_.front();
}

MapClass compose(const MapClass& f, const MapClass& g) {
  // refine at g's breakpoints and at g-preimages of f's breakpoints
  std::vector<CirclePoint> cuts = breakpoints(g);
  std::vector<CirclePoint> fcuts = breakpoints(f);
  for (const Branch& bg : g.branches()) {
    for (const CirclePoint& c : fcuts) {
      CirclePoint x = bg.eps > 0 ? CirclePoint(c.value() - bg.t.value())
                                 : CirclePoint(bg.t.value() - c.value());
      if (bg.dom.contains_half_open(x)) cuts.push_back(x);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto piece = [&](const CirclePoint& sample, const Interval& dom) {
    const Branch& bg = g.branch_right_at(sample);
    const Branch& bf = f.branch_right_at(bg.apply(sample));
    int eps = bf.eps * bg.eps;
    Scalar t = bf.eps > 0 ? bg.t.value() + bf.t.value()
                          : bf.t.value() - bg.t.value();
    return Branch{dom, eps, CirclePoint(t)};
  };

  if (cuts.empty()) {
    return MapClass::from_branches({piece(CirclePoint(), Interval::full_circle())});
  }
  assert(cuts.size() >= 2);

  std::vector<Branch> out;
  out.reserve(cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const CirclePoint& p = cuts[i];
    const CirclePoint& q = cuts[(i + 1) % cuts.size()];
    CirclePoint mid(p.value() + forward_len(p, q) / Scalar(2));
    out.push_back(piece(mid, Interval::arc(p, q)));
  }
  return MapClass::from_branches(std::move(out));
}

MapClass invert(const MapClass& f) {
  std::vector<Branch> out;
  out.reserve(f.branches().size());
  for (const Branch& b : f.branches()) {
    Interval dom = b.dom.is_full()
                       ? Interval::full_circle()
                       : Interval::arc(image_start(b),
                                       CirclePoint(image_start(b).value() + b.dom.length()));
    CirclePoint t = b.eps > 0 ? -b.t : b.t;
    out.push_back(Branch{dom, b.eps, t});
  }
  return MapClass::from_branches(std::move(out));
}

std::vector<CirclePoint> breakpoints(const MapClass& f) {
  std::vector<CirclePoint> out;
  for (const Branch& b : f.branches()) {
    if (!b.dom.is_full()) out.push_back(b.dom.lo());
  }
  return out;
}

namespace {

// one-sided limit of f at x: (base point, approach side as +-1)
std::pair<CirclePoint, int> germ_limit(const MapClass& f, const CirclePoint& x, int side) {
  const Branch& b = side > 0 ? f.branch_right_at(x) : f.branch_left_at(x);
  return {b.apply(x), b.eps * side};
}

}  // namespace

std::vector<CirclePoint> singularities(const MapClass& f) {
  std::vector<CirclePoint> out;
  for (const CirclePoint& x : breakpoints(f)) {
    auto [lbase, lside] = germ_limit(f, x, -1);
    auto [rbase, rside] = germ_limit(f, x, +1);
    bool glues = lbase == rbase && lside != rside;
    if (!glues) out.push_back(x);
  }
  return out;
}

std::pair<CirclePoint, CirclePoint> tau_pm(const MapClass& f, const CirclePoint& x) {
  if (!is_orientation_preserving(f)) {
    throw DomainError(Errc::not_orientation_preserving,
                      "tau is defined for orientation-preserving classes only");
  }
  return {f.branch_left_at(x).t, f.branch_right_at(x).t};
}

CirclePoint nu(const MapClass& f, const CirclePoint& x) {
  auto [tm, tp] = tau_pm(f, x);
  return tp - tm;
}

std::optional<Scalar> min_sing_gap(const MapClass& f) {
  std::vector<CirclePoint> sing = singularities(f);
  if (sing.size() < 2) return std::nullopt;
  std::optional<Scalar> best;
  for (std::size_t i = 0; i < sing.size(); ++i) {
    for (std::size_t j = i + 1; j < sing.size(); ++j) {
      Scalar d = geodesic_dist(sing[i], sing[j]);
      if (!best || d.cmp(*best) < 0) best = d;
    }
  }
  return best;
}

std::vector<Interval> essential_support(const MapClass& f) {
  std::vector<Interval> arcs;
  for (const Branch& b : f.branches()) {
    if (!b.is_identity()) arcs.push_back(b.dom);
  }
  return merge_closed_arcs(std::move(arcs));
}

Scalar support_diameter(const MapClass& f) {
  return closed_arcs_diameter(essential_support(f));
}

MapKind classify(const MapClass& f) {
  bool all_plus = true, all_minus = true;
  for (const Branch& b : f.branches()) {
    (b.eps > 0 ? all_minus : all_plus) = false;
  }
  if (all_plus) {
    if (f.branches().size() == 1 && f.branches()[0].dom.is_full()) {
      return f.branches()[0].t.is_zero() ? MapKind::identity : MapKind::rotation;
    }
    return MapKind::iet_plus;
  }
  if (all_minus) return MapKind::iet_minus;
  return MapKind::iet_bowtie;
}

const char* kind_name(MapKind k) {
  switch (k) {
    case MapKind::identity: return "identity";
    case MapKind::rotation: return "rotation";
    case MapKind::iet_plus: return "iet+";
    case MapKind::iet_minus: return "iet-";
    case MapKind::iet_bowtie: return "iet-bowtie";
  }
  return "?";
}

bool is_orientation_preserving(const MapClass& f) {
  for (const Branch& b : f.branches()) {
    if (b.eps < 0) return false;
  }
  return true;
}

bool is_orientation_reversing(const MapClass& f) {
  for (const Branch& b : f.branches()) {
    if (b.eps > 0) return false;
  }
  return true;
}

bool in_iet_pm(const MapClass& f) {
  return is_orientation_preserving(f) || is_orientation_reversing(f);
}

bool is_partial_rotation(const MapClass& f) {
  MapKind k = classify(f);
  if (k == MapKind::identity || k == MapKind::rotation) return true;
  if (k != MapKind::iet_plus) return false;

  std::vector<Branch> moving;
  for (const Branch& b : f.branches()) {
    if (!b.is_identity()) moving.push_back(b);
  }
  if (moving.size() != 2) return false;
  // order so that first ends where second starts
  if (moving[0].dom.hi() == moving[1].dom.lo()) {
    // keep
  } else if (moving[1].dom.hi() == moving[0].dom.lo()) {
    std::swap(moving[0], moving[1]);
  } else {
    return false;
  }
  // [A,C) -> x+t1, [C,B) -> x+t2 is the closed-up rotation of [A,B) iff
  // C+t1 = B and C+t2 = A.
  const CirclePoint& C = moving[1].dom.lo();
  const CirclePoint& B = moving[1].dom.hi();
  const CirclePoint& A = moving[0].dom.lo();
  return C + moving[0].t == B && C + moving[1].t == A;
}

std::vector<CirclePoint> translation_lengths(const MapClass& f) {
  std::vector<CirclePoint> out;
  for (const Branch& b : f.branches()) {
    if (b.eps > 0) out.push_back(b.t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_lambda(const MapClass& f, const SubgroupPresentation& L) {
  for (const Branch& b : f.branches()) {
    if (!lambda_contains(L, b.t)) return false;
    if (!b.dom.is_full() && !lambda_contains(L, b.dom.lo())) return false;
  }
  return true;
}

}  // namespace ietflip
