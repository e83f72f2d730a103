#include "ietflip/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ietflip/blowup.hpp"
#include "ietflip/subgroup.hpp"
#include "ietflip/text.hpp"

namespace ietflip::verify {

CirclePoint random_point(Rng& rng, long max_den) {
  long den = rng.range(2, max_den);
  long num = rng.range(0, den - 1);
  return CirclePoint(Scalar::ratio(num, den));
}

KeaneForm random_keane(Rng& rng, int min_n, int max_n, bool allow_flips) {
  int n = static_cast<int>(rng.range(min_n, max_n));
  std::vector<long> w(n);
  long total = 0;
  for (long& x : w) {
    x = rng.range(1, 9);
    total += x;
  }
  KeaneForm k;
  for (long x : w) k.lengths.push_back(Scalar::ratio(x, total));
  k.sigma.resize(n);
  std::iota(k.sigma.begin(), k.sigma.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(k.sigma[i], k.sigma[rng.range(0, i)]);
  }
  for (int i = 0; i < n; ++i) {
    k.flips.push_back(allow_flips && rng.coin() ? -1 : 1);
  }
  return k;
}

MapClass random_class(Rng& rng, int max_n, bool allow_flips) {
  return from_keane(random_keane(rng, 1, max_n, allow_flips));
}

MapClass random_iet_plus(Rng& rng, int max_n, int min_sings) {
  for (int tries = 0; tries < 1000; ++tries) {
    MapClass f = from_keane(random_keane(rng, 2, max_n, false));
    if (static_cast<int>(singularities(f).size()) >= min_sings) return f;
  }
  throw DomainError(Errc::structure, "random generator failed to hit the target shape");
}

MapClass random_exchange(Rng& rng) {
  const long Q = 60;
  long len = rng.range(1, Q / 2 - 1);
  long a = rng.range(0, Q - 2 * len);
  long c = rng.range(a + len, Q - len);
  auto pt = [Q](long k) { return CirclePoint(Scalar::ratio(k, Q)); };
  return exchange(Interval::arc(pt(a), pt(a + len)), Interval::arc(pt(c), pt(c + len)));
}

MapClass random_partial_rotation(Rng& rng) {
  const long Q = 60;
  long len = rng.range(2, Q - 1);
  long a = rng.range(0, Q - 1);
  long th = rng.range(1, len - 1);
  auto pt = [Q](long k) { return CirclePoint(Scalar::ratio(k, Q)); };
  return partial_rotation(Interval::arc(pt(a), pt((a + len) % Q)), pt(th));
}

namespace {

struct Check {
  SuiteResult res;
  explicit Check(std::string name) { res.name = std::move(name); }
  void expect(bool ok, const std::string& what) {
    ++res.total;
    if (!ok) {
      ++res.failed;
      if (res.detail.empty()) res.detail = "first failure: " + what;
    }
  }
  SuiteResult done(const std::string& summary) {
    if (res.failed == 0) res.detail = summary;
    return res;
  }
};

SuiteResult suite_group(std::uint64_t seed) {
  Rng rng(seed);
  Check ck("group");
  MapClass id = MapClass::identity();
  for (int i = 0; i < 1000; ++i) {
    MapClass f = random_class(rng, 6, true);
    MapClass g = random_class(rng, 6, true);
    MapClass h = random_class(rng, 6, true);
    bool ok = compose(compose(f, g), h) == compose(f, compose(g, h));
    ok = ok && compose(f, invert(f)) == id && compose(invert(f), f) == id;
    ok = ok && compose(f, id) == f && compose(id, f) == f;
    ck.expect(ok, "group axioms on triple " + std::to_string(i));
  }
  return ck.done("1000/1000 random triples: associativity, inverses, identity exact");
}

SuiteResult suite_keane(std::uint64_t seed) {
  Rng rng(seed);
  Check ck("keane");
  for (int i = 0; i < 500; ++i) {
    KeaneForm k = random_keane(rng, 1, 6, false);
    int n = k.size();
    MapClass f = from_keane(k);

    // direct evaluation of the rearrangement formula
    std::vector<Scalar> U(n + 1, Scalar(0)), V(n + 1, Scalar(0));
    std::vector<Scalar> placed = perm_act(k.sigma, k.lengths);
    for (int j = 0; j < n; ++j) {
      U[j + 1] = U[j] + k.lengths[j];
      V[j + 1] = V[j] + placed[j];
    }
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      for (const Scalar& frac : {Scalar(0), Scalar::ratio(1, 2)}) {
        CirclePoint x(U[j] + k.lengths[j] * frac);
        CirclePoint want(x.value() - U[j] + V[k.sigma[j]]);
        ok = ok && f.eval_right(x) == want;
      }
    }
    ck.expect(ok, "rearrangement formula, case " + std::to_string(i));

    // composition formula [[psi o sigma, u]] = [[psi, sigma._u]] o [[sigma, u]]
    KeaneForm psi = random_keane(rng, 1, 6, false);
    psi.lengths = k.lengths;
    while (static_cast<int>(psi.sigma.size()) != n) {
      psi = random_keane(rng, n, n, false);
      psi.lengths = k.lengths;
    }
    MapClass lhs = from_keane(KeaneForm{k.lengths, perm_compose(psi.sigma, k.sigma),
                                        std::vector<int>(n, 1)});
    MapClass rhs = compose(
        from_keane(KeaneForm{perm_act(k.sigma, k.lengths), psi.sigma, std::vector<int>(n, 1)}),
        f);
    ck.expect(lhs == rhs, "composition formula, case " + std::to_string(i));
  }
  return ck.done("500/500 random forms: rearrangement and composition formulas exact");
}

SuiteResult suite_comrot(std::uint64_t seed) {
  Rng rng(seed);
  Check ck("comrot");
  for (int i = 0; i < 200; ++i) {
    MapClass f = random_iet_plus(rng, 6, 2);
    Scalar E = *min_sing_gap(f);
    CirclePoint t(E * Scalar::ratio(rng.range(1, 15), 16));
    try {
      CommutatorReport rep = comrot(f, t);
      bool ok = rep.fixed_free && rep.blocks.size() == singularities(f).size();
      ck.expect(ok, "report shape, case " + std::to_string(i));
    } catch (const DomainError&) {
      ck.expect(false, "structure check failed, case " + std::to_string(i));
    }
  }
  return ck.done("200/200 random commutators: block translations exact, no block fixed");
}

SuiteResult suite_lifts(std::uint64_t seed, int order_bound) {
  Rng rng(seed);
  Check ck("lifts");
  int bound = std::max(order_bound, 10);

  MapClass f132 = make_132_flip(CirclePoint(Scalar::ratio(1, 3)),
                                CirclePoint(Scalar::ratio(2, 3)));
  std::vector<Lift> q = enumerate_hyperclean_lifts(f132);
  ck.expect(q.size() == 2, "132-flip has exactly 2 hyper-clean lifts");
  std::set<CirclePoint> want = {CirclePoint(), CirclePoint(Scalar::ratio(1, 3)),
                                CirclePoint(Scalar::ratio(2, 3))};
  for (const Lift& L : q) {
    Lift sq = lift_compose(L, L);
    ck.expect(!sq.is_identity(), "132-flip lift square is not the identity");
    std::set<CirclePoint> moved;
    for (const auto& [x, y] : sq.table()) moved.insert(x);
    ck.expect(sq.map_class().is_identity() && moved == want,
              "132-flip lift square is a 3-cycle on {0,a,b}");
    ck.expect(lift_order(L, bound) == std::optional<int>(6), "132-flip lift has order 6");
  }

  MapClass f3 = make_triple_flip(Scalar::ratio(1, 2), Scalar::ratio(1, 4),
                                 Scalar::ratio(1, 4));
  std::vector<Lift> t = enumerate_hyperclean_lifts(f3);
  ck.expect(t.size() == 2, "triple flip has exactly 2 hyper-clean lifts");
  for (const Lift& L : t) {
    ck.expect(lift_order(L, bound) == std::optional<int>(6), "triple-flip lift has order 6");
  }

  for (int i = 0; i < 100; ++i) {
    MapClass p = random_partial_rotation(rng);
    std::vector<Lift> ls = enumerate_hyperclean_lifts(p);
    bool ok = ls.size() == 2;
    if (ok) {
      auto o1 = continuity_profile(ls[0]).overall;
      auto o2 = continuity_profile(ls[1]).overall;
      ok = (o1 == OverallContinuity::all_left && o2 == OverallContinuity::all_right) ||
           (o1 == OverallContinuity::all_right && o2 == OverallContinuity::all_left);
    }
    ck.expect(ok, "partial rotation lifts, case " + std::to_string(i));
  }
  return ck.done("fixed flip witnesses and 100/100 partial rotations: counts, orders, profiles");
}

SuiteResult suite_involution(std::uint64_t seed) {
  Rng rng(seed);
  Check ck("involution");
  for (int i = 0; i < 100; ++i) {
    MapClass phi = random_exchange(rng);
    Lift L = left_lift(phi);
    ck.expect(lift_compose(L, L) == Lift::identity(),
              "left lift of an exchange squares to the identity, case " + std::to_string(i));
  }
  return ck.done("100/100 exchanges: left lift squares exactly to the identity");
}

SuiteResult suite_blowup(std::uint64_t seed) {
  Rng rng(seed);
  Check ck("blowup");
  for (int i = 0; i < 200; ++i) {
    MapClass f = random_class(rng, 5, true);
    MapClass g = random_class(rng, 5, true);
    MapClass h = compose(f, g);
    std::vector<SidedPoint> pts;
    for (const CirclePoint& x : breakpoints(f)) {
      pts.push_back({x, Side::minus});
      pts.push_back({x, Side::plus});
    }
    for (const CirclePoint& x : breakpoints(g)) {
      pts.push_back({x, Side::minus});
      pts.push_back({x, Side::plus});
    }
    for (int j = 0; j < 20; ++j) {
      pts.push_back({random_point(rng), rng.coin() ? Side::plus : Side::minus});
    }
    bool ok = true;
    for (const SidedPoint& p : pts) {
      ok = ok && eval_blowup(h, p) == eval_blowup(f, eval_blowup(g, p));
    }
    ck.expect(ok, "action homomorphism, case " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    MapClass f = random_class(rng, 6, true);
    int reversed = 0;
    for (const Branch& b : f.branches()) reversed += b.eps < 0;
    std::size_t bound = 4 * static_cast<std::size_t>(reversed) + 2 * breakpoints(f).size();
    ck.expect(cleanhat_set(f).size() <= bound,
              "cleanhat size bound, case " + std::to_string(i));
  }
  return ck.done("200/200 action pairs and 200/200 cleanhat bounds exact");
}

SuiteResult suite_genparro(std::uint64_t seed) {
  Rng rng(seed);
  Check ck("genparro");
  for (int i = 0; i < 200; ++i) {
    MapClass f = from_keane(random_keane(rng, 1, 6, false));
    KeaneForm k = keane_form(f);
    std::vector<CirclePoint> gens;
    for (const Scalar& u : k.lengths) gens.push_back(CirclePoint(u));
    SubgroupPresentation xi(gens);

    std::vector<MapClass> factors = decompose_partial_rotations(f);
    MapClass acc = MapClass::identity();
    bool ok = true;
    for (const MapClass& p : factors) {
      acc = compose(acc, p);
      ok = ok && is_partial_rotation(p) && in_lambda(p, xi);
    }
    int n = k.size();
    ok = ok && acc == f && static_cast<int>(factors.size()) <= n * (n - 1) / 2;
    ck.expect(ok, "decomposition, case " + std::to_string(i));
  }
  return ck.done("200/200 classes: factors recompose exactly and live in Xi_T");
}

SuiteResult suite_arbsmall(std::uint64_t /*seed*/) {
  Check ck("arbsmall");
  std::vector<std::pair<long, long>> rhos = {{1, 4}, {1, 3}, {2, 5}, {1, 2}, {3, 5}, {3, 4}};
  std::vector<std::pair<long, long>> eps_fracs = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
  int done = 0;
  for (auto [rn, rd] : rhos) {
    for (auto [en, ed] : eps_fracs) {
      for (int eta_div : {1, 2, 3}) {
        if (done >= 50) continue;
        Scalar rho = Scalar::ratio(rn, rd);
        Scalar cap = rho.cmp(Scalar(1) - rho) <= 0 ? rho : Scalar(1) - rho;
        Scalar eps = cap / Scalar(5) * Scalar::ratio(en, ed);
        Scalar eta = eps / Scalar(eta_div);
        Scalar lambda = eps * Scalar::ratio(13, 4);
        Scalar lambda2 = eps * Scalar::ratio(7, 2);
        MapClass out = arbsmall(CirclePoint(rho), eps, eta, CirclePoint(lambda),
                                CirclePoint(lambda2));
        bool ok = !out.is_identity() &&
                  support_diameter(out).cmp(Scalar(5) * eps) <= 0;
        ck.expect(ok, "tuple " + std::to_string(done));
        ++done;
      }
    }
  }
  return ck.done("50/50 parameter tuples: non-identity output, diameter <= 5*eps exact");
}

SuiteResult suite_gadget(std::uint64_t /*seed*/, int order_bound) {
  Check ck("gadget");
  int bound = std::max(order_bound, 10);
  CirclePoint a(Scalar::ratio(3, 16));
  CirclePoint theta(Scalar(mpq_class(-1, 4)) +
                    Scalar(mpq_class(0), mpq_class(1, 4), 2));  // (sqrt(2)-1)/4
  StabilizerGadget g = t_stabr_gadget(a, theta);
  MapClass id = MapClass::identity();
  ck.expect(compose(g.u, g.u) == id, "u has order 2");
  ck.expect(compose(g.v, g.v) == id, "v has order 2");
  ck.expect(compose(g.s, g.s) == id, "s has order 2");
  MapClass suv = compose(g.s, compose(g.u, g.v));
  ck.expect(is_triple_flip(suv), "s o u o v is a triple flip");
  std::vector<Lift> lifts = enumerate_hyperclean_lifts(suv);
  ck.expect(lifts.size() == 2, "s o u o v has exactly 2 hyper-clean lifts");
  for (const Lift& L : lifts) {
    ck.expect(!lift_compose(L, L).is_identity(), "no hyper-clean lift squares to the identity");
    ck.expect(lift_order(L, bound) == std::optional<int>(6), "hyper-clean lift has order 6");
  }
  return ck.done("a = 3/16 gadget: triple flip recognized, 2 lifts, none of order 2");
}

SuiteResult suite_lambda(std::uint64_t seed) {
  Rng rng(seed);
  Check ck("lambda");
  for (int i = 0; i < 500; ++i) {
    int ng = static_cast<int>(rng.range(1, 3));
    long d = 1;
    std::vector<long> nums, dens;
    for (int j = 0; j < ng; ++j) {
      long q = rng.range(2, 12);
      long p = rng.range(0, q - 1);
      nums.push_back(p);
      dens.push_back(q);
      d = std::lcm(d, q);
    }
    std::vector<CirclePoint> gens;
    for (int j = 0; j < ng; ++j) gens.push_back(CirclePoint(Scalar::ratio(nums[j], dens[j])));
    SubgroupPresentation L(gens);

    // exhaustive closure of the generated subgroup of Z/d
    std::set<long> sub = {0};
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<long> next = sub;
      for (long s : sub) {
        for (int j = 0; j < ng; ++j) {
          long e = (s + nums[j] * (d / dens[j])) % d;
          if (next.insert(e).second) grew = true;
        }
      }
      sub = next;
    }

    long q = rng.range(1, 24);
    long p = rng.range(0, q - 1);
    long g = std::gcd(p, q) == 0 ? q : std::gcd(p, q);
    long pr = p / g, qr = q / g;
    bool expected = d % qr == 0 && sub.count((pr * (d / qr)) % d) > 0;
    bool got = lambda_contains(L, CirclePoint(Scalar::ratio(p, q)));
    ck.expect(expected == got, "membership query, case " + std::to_string(i));
  }
  return ck.done("500/500 membership queries agree with exhaustive subgroup enumeration");
}

SuiteResult suite_serialization(std::uint64_t seed) {
  Rng rng(seed);
  Check ck("serialization");
  FieldSpec field(2);
  for (int i = 0; i < 500; ++i) {
    MapClass f = random_class(rng, 6, true);
    std::string s = map_text(f);
    MapClass f2 = parse_map(s, field);
    ck.expect(f2 == f && map_text(f2) == s, "class roundtrip, case " + std::to_string(i));

    if (i % 2 == 0) {
      MapClass g = from_keane(random_keane(rng, 1, 5, false));
      Lift L = rng.coin() ? left_lift(g) : right_lift(g);
      if (rng.coin()) {
        // graft a finitely supported deviation onto the lift
        CirclePoint p1 = random_point(rng), p2 = random_point(rng);
        if (!(p1 == p2)) {
          std::map<CirclePoint, CirclePoint> cyc = {{p1, p2}, {p2, p1}};
          L = lift_compose(L, Lift::make(MapClass::identity(), std::move(cyc)));
        }
      }
      std::string t = lift_text(L);
      Lift L2 = parse_lift(t, field);
      ck.expect(L2 == L && lift_text(L2) == t, "lift roundtrip, case " + std::to_string(i));
    }
    if (i % 25 == 0) {
      // quadratic-field data
      CirclePoint irr(Scalar(mpq_class(0), mpq_class(1, i + 2), 2));
      MapClass r = rotation(irr);
      std::string s2 = map_text(r);
      ck.expect(parse_map(s2, field) == r && map_text(parse_map(s2, field)) == s2,
                "quadratic rotation roundtrip, case " + std::to_string(i));
    }
  }
  return ck.done("500/500 classes and lifts roundtrip bit-exactly");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"group",    "keane",    "comrot", "lifts",  "involution",   "blowup",
          "genparro", "arbsmall", "gadget", "lambda", "serialization"};
}

std::vector<SuiteResult> run_suites(std::string_view name, std::uint64_t seed,
                                    int order_bound) {
  std::vector<SuiteResult> out;
  auto want = [&name](std::string_view n) { return name == "all" || name == n; };
  if (want("group")) out.push_back(suite_group(seed));
  if (want("keane")) out.push_back(suite_keane(seed + 1));
  if (want("comrot")) out.push_back(suite_comrot(seed + 2));
  if (want("lifts")) out.push_back(suite_lifts(seed + 3, order_bound));
  if (want("involution")) out.push_back(suite_involution(seed + 4));
  if (want("blowup")) out.push_back(suite_blowup(seed + 5));
  if (want("genparro")) out.push_back(suite_genparro(seed + 6));
  if (want("arbsmall")) out.push_back(suite_arbsmall(seed + 7));
  if (want("gadget")) out.push_back(suite_gadget(seed + 8, order_bound));
  if (want("lambda")) out.push_back(suite_lambda(seed + 9));
  if (want("serialization")) out.push_back(suite_serialization(seed + 10));
  if (out.empty()) {
    throw DomainError(Errc::bad_parameters,
                      "unknown suite '" + std::string(name) + "'; try 'all'");
  }
  return out;
}

}  // namespace ietflip::verify
