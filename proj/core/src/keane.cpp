#include "ietflip/keane.hpp"

#include <algorithm>
#include <cassert>

namespace ietflip {

bool is_permutation(const std::vector<int>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<int> perm_compose(const std::vector<int>& psi, const std::vector<int>& sigma) {
  assert(psi.size() == sigma.size());
  std::vector<int> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = psi[sigma[i]];
  return out;
}

std::vector<int> perm_invert(const std::vector<int>& sigma) {
  std::vector<int> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[sigma[i]] = static_cast<int>(i);
  return out;
}

std::vector<Scalar> perm_act(const std::vector<int>& sigma, const std::vector<Scalar>& u) {
  assert(sigma.size() == u.size());
  std::vector<Scalar> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[sigma[i]] = u[i];
  return out;
}

MapClass from_keane(const KeaneForm& k) {
  int n = k.size();
  if (n == 0 || static_cast<int>(k.sigma.size()) != n ||
      static_cast<int>(k.flips.size()) != n || !is_permutation(k.sigma)) {
    throw DomainError(Errc::bad_parameters, "malformed Keane data");
  }
  Scalar total(0);
  for (const Scalar& u : k.lengths) {
    if (u.sign() <= 0) throw DomainError(Errc::bad_lengths, "interval lengths must be positive");
    total += u;
  }
  if (!(total == Scalar(1))) {
    throw DomainError(Errc::bad_lengths, "interval lengths must sum to 1");
  }
  for (int fl : k.flips) {
    if (fl != 1 && fl != -1) throw DomainError(Errc::bad_parameters, "flips must be +1 or -1");
  }

  // U: partial sums of the source cuts, V: of the rearranged lengths
  std::vector<Scalar> U(n + 1, Scalar(0)), V(n + 1, Scalar(0));
  std::vector<Scalar> placed = perm_act(k.sigma, k.lengths);
  for (int i = 0; i < n; ++i) {
    U[i + 1] = U[i] + k.lengths[i];
    V[i + 1] = V[i] + placed[i];
  }

  std::vector<Branch> bs;
  bs.reserve(n);
  for (int i = 0; i < n; ++i) {
    Interval dom = n == 1 ? Interval::full_circle()
                          : Interval::arc(CirclePoint(U[i]), CirclePoint(U[i + 1]));
    int s = k.sigma[i];
    if (k.flips[i] > 0) {
      bs.push_back(Branch{dom, +1, CirclePoint(V[s] - U[i])});
    } else {
      // reversed placement: U_i -> V_{s+1}, approached from below
      bs.push_back(Branch{dom, -1, CirclePoint(U[i] + V[s + 1])});
    }
  }
  return MapClass::from_branches(std::move(bs));
}

KeaneForm keane_form(const MapClass& f) {
  // cuts: 0, breakpoints, and domain points where a germ image crosses 0
  std::vector<CirclePoint> cuts = breakpoints(f);
  cuts.push_back(CirclePoint());
  for (const Branch& b : f.branches()) {
    CirclePoint x = b.eps > 0 ? -b.t : b.t;  // preimage of 0 under the germ
    if (b.dom.contains_half_open(x)) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  int n = static_cast<int>(cuts.size());
  KeaneForm k;
  k.lengths.reserve(n);
  k.flips.reserve(n);
  // leftmost point of each piece's image within the cut-open interval [0,1]
  std::vector<std::pair<Scalar, int>> starts;
  starts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const CirclePoint& lo = cuts[i];
    const CirclePoint& hi = cuts[(i + 1) % n];
    Scalar len = n == 1 ? Scalar(1) : forward_len(lo, hi);
    const Branch& b = f.branch_right_at(lo);
    k.lengths.push_back(len);
    k.flips.push_back(b.eps);
    Scalar s = b.eps > 0 ? b.apply(lo).value()
                         : (b.t.value() - lo.value() - len);
    starts.emplace_back(CirclePoint(s).value(), i);
  }
  std::sort(starts.begin(), starts.end());
  k.sigma.assign(n, 0);
  for (int rank = 0; rank < n; ++rank) k.sigma[starts[rank].second] = rank;
  return k;
}

}  // namespace ietflip
