#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ietflip/map_class.hpp"

namespace ietflip {

/// Finitely supported permutation of the circle; fixed points are not stored,
/// so the domain and range agree as sets.
struct FinPerm {
  std::map<CirclePoint, CirclePoint> pairs;

  static FinPerm make(std::map<CirclePoint, CirclePoint> pairs);
  bool empty() const { return pairs.empty(); }
  bool operator==(const FinPerm&) const = default;
};

/// Genuine permutation of the circle representing a map class: the class plus
/// a finite table of values. The table must cover every singular point of the
/// class; everywhere else the value defaults to the (well-defined) germ value.
/// Validity — that the induced total map is a bijection of S — is checked by
/// a finite matching between table values and the points missed or doubled by
/// the branch images.
class Lift {
 public:
  static Lift make(MapClass cls, std::map<CirclePoint, CirclePoint> table);
  static Lift identity();

  const MapClass& map_class() const { return cls_; }
  const std::map<CirclePoint, CirclePoint>& table() const { return table_; }

  /// Value of the permutation at x.
  CirclePoint operator()(const CirclePoint& x) const;
  /// Unique preimage of y under the permutation.
  CirclePoint preimage(const CirclePoint& y) const;

  bool is_identity() const { return cls_.is_identity() && table_.empty(); }
  bool operator==(const Lift& o) const {
    return cls_ == o.cls_ && table_ == o.table_;
  }

 private:
  Lift(MapClass cls, std::map<CirclePoint, CirclePoint> table)
      : cls_(std::move(cls)), table_(std::move(table)) {}
  MapClass cls_;
  std::map<CirclePoint, CirclePoint> table_;
};

/// The left- (resp. right-) continuous representative. Bijective exactly for
/// classes in IET+-; throws not_bijective otherwise.
Lift left_lift(const MapClass& f);
Lift right_lift(const MapClass& f);

Lift lift_compose(const Lift& L1, const Lift& L2);
Lift lift_invert(const Lift& L);

/// Smallest n <= bound with L^n = id, or nullopt (the class may well have
/// infinite order).
std::optional<int> lift_order(const Lift& L, int bound = 10000);

/// All lifts whose graph has no isolated point: at the k singular points the
/// value is the left or the right limit, everywhere else it is forced to the
/// continuous germ value. Tries all 2^k side choices and keeps the bijective
/// ones. Throws bound_exceeded when k exceeds max_sing.
std::vector<Lift> enumerate_hyperclean_lifts(const MapClass& f, int max_sing = 20);

enum class Continuity { left, right };
enum class OverallContinuity { all_left, all_right, mixed };

/// Side chosen at each singular point; lifts with no singular point report
/// all_left (they are continuous, hence vacuously one-sided).
struct ContinuityProfile {
  std::vector<std::pair<CirclePoint, Continuity>> tags;
  OverallContinuity overall = OverallContinuity::all_left;
};

/// Throws precondition if some singular value is neither one-sided limit.
ContinuityProfile continuity_profile(const Lift& L);

bool is_hyperclean(const Lift& L);

/// Finite cleanness witness: no nonidentity member of the set is a finitely
/// supported permutation (identity class with nonempty table).
bool is_clean(const std::vector<Lift>& lifts);

/// Evaluate a word over named lifts (single-character names, apostrophe for
/// the inverse, e.g. "aba'"); the class-level product must be the identity
/// (throws class_not_identity otherwise). Returns the finitely supported
/// permutation by which the lifted word misses the identity — empty means the
/// relation lifts exactly.
FinPerm word_support(const std::vector<std::pair<std::string, Lift>>& gens,
                     std::string_view word);

}  // namespace ietflip
