#include "ietflip/lift.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace ietflip {

FinPerm FinPerm::make(std::map<CirclePoint, CirclePoint> pairs) {
  for (auto it = pairs.begin(); it != pairs.end();) {
    it = it->first == it->second ? pairs.erase(it) : std::next(it);
  }
  std::set<CirclePoint> dom, ran;
  for (const auto& [x, y] : pairs) {
    dom.insert(x);
    ran.insert(y);
  }
  if (dom != ran) {
    throw DomainError(Errc::not_bijective,
                      "finitely supported permutation must have equal domain and range");
  }
  FinPerm p;
  p.pairs = std::move(pairs);
  return p;
}

namespace {

// candidate points where the total map's bijectivity can fail
std::vector<CirclePoint> matching_points(const MapClass& cls,
                                         const std::map<CirclePoint, CirclePoint>& table) {
  std::vector<CirclePoint> W;
  for (const Branch& b : cls.branches()) {
    if (b.dom.is_full()) continue;
    if (b.eps > 0) {
      W.push_back(b.apply(b.dom.lo()));
      W.push_back(CirclePoint(b.dom.hi().value() + b.t.value()));
    } else {
      W.push_back(CirclePoint(b.t.value() - b.dom.hi().value()));
      W.push_back(b.apply(b.dom.lo()));
    }
  }
  for (const auto& [x, y] : table) {
    W.push_back(y);
    W.push_back(cls.eval_right(x));
  }
  std::sort(W.begin(), W.end());
  W.erase(std::unique(W.begin(), W.end()), W.end());
  return W;
}

// number of preimages of z under the induced total map
int coverage(const MapClass& cls, const std::map<CirclePoint, CirclePoint>& table,
             const CirclePoint& z) {
  int cover = 0;
  for (const Branch& b : cls.branches()) {
    CirclePoint x = b.eps > 0 ? CirclePoint(z.value() - b.t.value())
                              : CirclePoint(b.t.value() - z.value());
    if (b.dom.contains_half_open(x) && !table.count(x)) ++cover;
  }
  for (const auto& [x, y] : table) {
    if (y == z) ++cover;
  }
  return cover;
}

bool table_is_bijective(const MapClass& cls,
                        const std::map<CirclePoint, CirclePoint>& table) {
  for (const CirclePoint& z : matching_points(cls, table)) {
    if (coverage(cls, table, z) != 1) return false;
  }
  return true;
}

}  // namespace

Lift Lift::make(MapClass cls, std::map<CirclePoint, CirclePoint> table) {
  for (const CirclePoint& x : singularities(cls)) {
    if (!table.count(x)) {
      throw DomainError(Errc::precondition,
                        "lift table must assign a value at every singular point");
    }
  }
  if (!table_is_bijective(cls, table)) {
    throw DomainError(Errc::not_bijective, "lift table does not induce a bijection");
  }
  // normalization: drop redundant non-singular entries
  std::vector<CirclePoint> sing = singularities(cls);
  auto is_sing = [&sing](const CirclePoint& x) {
    return std::binary_search(sing.begin(), sing.end(), x);
  };
  for (auto it = table.begin(); it != table.end();) {
    if (!is_sing(it->first) && it->second == cls.eval_right(it->first)) {
      it = table.erase(it);
    } else {
      ++it;
    }
  }
  return Lift(std::move(cls), std::move(table));
}

Lift Lift::identity() { return Lift(MapClass::identity(), {}); }

CirclePoint Lift::operator()(const CirclePoint& x) const {
  auto it = table_.find(x);
  if (it != table_.end()) return it->second;
  return cls_.eval_right(x);
}

CirclePoint Lift::preimage(const CirclePoint& y) const {
  for (const auto& [x, v] : table_) {
    if (v == y) return x;
  }
  for (const Branch& b : cls_.branches()) {
    CirclePoint x = b.eps > 0 ? CirclePoint(y.value() - b.t.value())
                              : CirclePoint(b.t.value() - y.value());
    if (b.dom.contains_half_open(x) && !table_.count(x)) return x;
  }
  assert(false && "valid lifts are surjective");
  return CirclePoint();
}

namespace {

// one-sided limit values at x
CirclePoint left_value(const MapClass& f, const CirclePoint& x) {
  return f.branch_left_at(x).apply(x);
}
CirclePoint right_value(const MapClass& f, const CirclePoint& x) {
  return f.branch_right_at(x).apply(x);
}

Lift one_sided_lift(const MapClass& f, bool left) {
  if (!in_iet_pm(f)) {
    throw DomainError(Errc::not_bijective,
                      "one-sided representatives of mixed-orientation classes are not bijective");
  }
  std::map<CirclePoint, CirclePoint> table;
  for (const CirclePoint& x : singularities(f)) {
    table.emplace(x, left ? left_value(f, x) : right_value(f, x));
  }
  return Lift::make(f, std::move(table));
}

}  // namespace

Lift left_lift(const MapClass& f) { return one_sided_lift(f, true); }
Lift right_lift(const MapClass& f) { return one_sided_lift(f, false); }

Lift lift_compose(const Lift& L1, const Lift& L2) {
  MapClass c = compose(L1.map_class(), L2.map_class());
  std::set<CirclePoint> cand;
  for (const CirclePoint& x : breakpoints(L2.map_class())) cand.insert(x);
  for (const CirclePoint& x : breakpoints(c)) cand.insert(x);
  for (const auto& [x, y] : L2.table()) cand.insert(x);
  for (const auto& [y, v] : L1.table()) cand.insert(L2.preimage(y));
  for (const CirclePoint& y : breakpoints(L1.map_class())) cand.insert(L2.preimage(y));

  std::map<CirclePoint, CirclePoint> table;
  for (const CirclePoint& x : cand) table.emplace(x, L1(L2(x)));
  return Lift::make(std::move(c), std::move(table));
}

Lift lift_invert(const Lift& L) {
  MapClass ci = invert(L.map_class());
  std::set<CirclePoint> cand;
  for (const CirclePoint& y : breakpoints(ci)) cand.insert(y);
  for (const auto& [x, y] : L.table()) {
    cand.insert(y);
    cand.insert(L.map_class().eval_right(x));  // value displaced by the table
  }
  std::map<CirclePoint, CirclePoint> table;
  for (const CirclePoint& y : cand) table.emplace(y, L.preimage(y));
  return Lift::make(std::move(ci), std::move(table));
}

std::optional<int> lift_order(const Lift& L, int bound) {
  Lift acc = L;
  for (int n = 1; n <= bound; ++n) {
    if (acc.is_identity()) return n;
    acc = lift_compose(acc, L);
  }
  return std::nullopt;
}

std::vector<Lift> enumerate_hyperclean_lifts(const MapClass& f, int max_sing) {
  std::vector<CirclePoint> sing = singularities(f);
  int k = static_cast<int>(sing.size());
  if (k > max_sing) {
    throw DomainError(Errc::bound_exceeded,
                      "class has " + std::to_string(k) + " singular points, bound is " +
                          std::to_string(max_sing));
  }
  std::vector<CirclePoint> lv, rv;
  lv.reserve(k);
  rv.reserve(k);
  for (const CirclePoint& x : sing) {
    lv.push_back(left_value(f, x));
    rv.push_back(right_value(f, x));
  }
  std::vector<Lift> out;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::map<CirclePoint, CirclePoint> table;
    for (int i = 0; i < k; ++i) {
      table.emplace(sing[i], (mask >> i) & 1 ? rv[i] : lv[i]);
    }
    if (table_is_bijective(f, table)) {
      out.push_back(Lift::make(f, std::move(table)));
    }
  }
  return out;
}

ContinuityProfile continuity_profile(const Lift& L) {
  ContinuityProfile p;
  bool has_left = false, has_right = false;
  for (const CirclePoint& x : singularities(L.map_class())) {
    CirclePoint v = L(x);
    Continuity c;
    if (v == left_value(L.map_class(), x)) {
      c = Continuity::left;
      has_left = true;
    } else if (v == right_value(L.map_class(), x)) {
      c = Continuity::right;
      has_right = true;
    } else {
      throw DomainError(Errc::precondition,
                        "lift value at a singular point is neither one-sided limit");
    }
    p.tags.emplace_back(x, c);
  }
  p.overall = has_left && has_right ? OverallContinuity::mixed
              : has_right           ? OverallContinuity::all_right
                                    : OverallContinuity::all_left;
  return p;
}

bool is_hyperclean(const Lift& L) {
  std::vector<CirclePoint> sing = singularities(L.map_class());
  for (const auto& [x, v] : L.table()) {
    if (!std::binary_search(sing.begin(), sing.end(), x)) return false;  // isolated override
    if (!(v == left_value(L.map_class(), x)) && !(v == right_value(L.map_class(), x))) {
      return false;
    }
  }
  return true;
}

bool is_clean(const std::vector<Lift>& lifts) {
  for (const Lift& L : lifts) {
    if (L.map_class().is_identity() && !L.table().empty()) return false;
  }
  return true;
}

FinPerm word_support(const std::vector<std::pair<std::string, Lift>>& gens,
                     std::string_view word) {
  auto find = [&gens](char c) -> const Lift& {
    for (const auto& [name, L] : gens) {
      if (name.size() == 1 && name[0] == c) return L;
    }
    throw DomainError(Errc::bad_parameters,
                      std::string("unknown generator '") + c + "' in word");
  };
  Lift acc = Lift::identity();
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (c == ' ') continue;
    const Lift& g = find(c);
    bool inverse = i + 1 < word.size() && word[i + 1] == '\'';
    if (inverse) ++i;
    acc = lift_compose(acc, inverse ? lift_invert(g) : g);
  }
  if (!acc.map_class().is_identity()) {
    throw DomainError(Errc::class_not_identity,
                      "word is not a relator at the level of map classes");
  }
  return FinPerm::make(acc.table());
}

}  // namespace ietflip
