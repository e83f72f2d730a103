#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ietflip/circle.hpp"
#include "ietflip/subgroup.hpp"

namespace ietflip {

/// One isometric piece x -> eps*x + t on a half-open domain arc.
struct Branch {
  Interval dom;
  int eps;  // +1 or -1
  CirclePoint t;

  CirclePoint apply(const CirclePoint& x) const {
    return eps > 0 ? CirclePoint(x.value() + t.value())
                   : CirclePoint(t.value() - x.value());
  }
  bool is_identity() const { return eps > 0 && t.is_zero(); }
  bool same_isometry(const Branch& o) const { return eps == o.eps && t == o.t; }
  bool operator==(const Branch& o) const {
    return dom == o.dom && eps == o.eps && t == o.t;
  }
};

/// Piecewise isometric permutation of the circle up to finite indeterminacy
/// (an interval exchange with flips). Held in canonical form: branch domains
/// partition S, sorted by lo, and no two cyclically adjacent branches carry
/// the same isometry, so equality of classes is structural equality.
class MapClass {
 public:
  /// Canonicalize a branch list. The domains must partition S exactly and the
  /// open branch images must tile S (piecewise bijectivity).
  static MapClass from_branches(std::vector<Branch> bs);
  static MapClass identity();

  const std::vector<Branch>& branches() const { return bs_; }
  bool is_identity() const;

  /// Branch governing [x, x + d) for small d > 0.
  const Branch& branch_right_at(const CirclePoint& x) const;
  /// Branch governing (x - d, x) for small d > 0.
  const Branch& branch_left_at(const CirclePoint& x) const;
  /// Value of the right-continuous representative at x.
  CirclePoint eval_right(const CirclePoint& x) const {
    return branch_right_at(x).apply(x);
  }

  bool operator==(const MapClass& o) const { return bs_ == o.bs_; }

 private:
  struct canonical_tag {};
  MapClass(std::vector<Branch> bs, canonical_tag) : bs_(std::move(bs)) {}
  std::vector<Branch> bs_;
};

/// Group law: (f, g) -> f o g, exact on canonical forms.
MapClass compose(const MapClass& f, const MapClass& g);
MapClass invert(const MapClass& f);

/// Breakpoints of the canonical form, sorted; empty for one-branch classes.
std::vector<CirclePoint> breakpoints(const MapClass& f);

/// Points at which every lift of f is discontinuous: breakpoints whose
/// one-sided germs do not glue to a homeomorphism germ (f(x-) = y-, f(x+) =
/// y+ or the orientation-reversed pattern for a single y).
std::vector<CirclePoint> singularities(const MapClass& f);

/// One-sided translation values (tau-, tau+) at x, for orientation-preserving
/// classes only.
std::pair<CirclePoint, CirclePoint> tau_pm(const MapClass& f, const CirclePoint& x);
/// nu(x) = tau+(x) - tau-(x) in S; nonzero exactly on the singular set.
CirclePoint nu(const MapClass& f, const CirclePoint& x);

/// Minimal geodesic distance between distinct singularities; nullopt (infinity)
/// when there are fewer than two.
std::optional<Scalar> min_sing_gap(const MapClass& f);

/// Closure of the set where the germ of f differs from the identity germ:
/// the union of closures of non-identity branches, as merged closed arcs.
std::vector<Interval> essential_support(const MapClass& f);
Scalar support_diameter(const MapClass& f);

enum class MapKind { identity, rotation, iet_plus, iet_minus, iet_bowtie };

/// Finest matching kind; iet_plus/iet_minus mean all branches preserve/
/// reverse orientation. Elements of IET+- are exactly those whose kind is
/// not iet_bowtie.
MapKind classify(const MapClass& f);
const char* kind_name(MapKind k);

bool is_orientation_preserving(const MapClass& f);  // IET+
bool is_orientation_reversing(const MapClass& f);   // IET-
bool in_iet_pm(const MapClass& f);                  // IET+ or IET-

/// Acts as a rotation on one interval (closed up at its endpoints) and as the
/// identity elsewhere; genuine rotations and the identity count as the
/// full-circle case.
bool is_partial_rotation(const MapClass& f);

/// Translation values t over orientation-preserving branches (sorted, with
/// multiplicity).
std::vector<CirclePoint> translation_lengths(const MapClass& f);

/// Do all breakpoints and all branch translation data of f lie in <L>?
bool in_lambda(const MapClass& f, const SubgroupPresentation& L);

}  // namespace ietflip
