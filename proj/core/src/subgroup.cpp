#include "ietflip/subgroup.hpp"

#include <utility>

namespace ietflip {

SubgroupPresentation::SubgroupPresentation(std::vector<CirclePoint> gens)
    : generators(std::move(gens)) {
  if (generators.empty()) {
    throw DomainError(Errc::bad_parameters, "subgroup presentation needs at least one generator");
  }
}

namespace {

struct Col {
  mpz_class a, b;
};

// Membership of t in the Z-span of cols, all vectors in Z^2. Columns are
// reduced to a Hermite-style triangular basis {(d1, e), (0, d2)}.
bool in_lattice(std::vector<Col> cols, const Col& t) {
  // eliminate the first row down to a single pivot column
  mpz_class d1 = 0, e = 0;
  std::vector<mpz_class> row2;  // columns with zero first row
  for (const Col& c : cols) {
    if (sgn(c.a) == 0) {
      row2.push_back(c.b);
      continue;
    }
    if (sgn(d1) == 0) {
      d1 = abs(c.a);
      e = sgn(c.a) < 0 ? mpz_class(-c.b) : c.b;
      continue;
    }
    // gcd step: combine pivot (d1, e) with (c.a, c.b)
    mpz_class g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), d1.get_mpz_t(),
               c.a.get_mpz_t());
    mpz_class e2 = u * e + v * c.b;
    // the two eliminated combinations keep the lattice intact
    row2.push_back((d1 / g) * c.b - (c.a / g) * e);
    d1 = g;
    e = e2;
  }
  mpz_class d2 = 0;
  for (const mpz_class& z : row2) d2 = gcd(d2, z);

  // solve (t.a, t.b) = k*(d1, e) + l*(0, d2) over Z
  mpz_class k;
  if (sgn(d1) == 0) {
    if (sgn(t.a) != 0) return false;
    k = 0;
  } else {
    if (!mpz_divisible_p(t.a.get_mpz_t(), d1.get_mpz_t())) return false;
    k = t.a / d1;
  }
  mpz_class r = t.b - k * e;
  if (sgn(d2) == 0) return sgn(r) == 0;
  return mpz_divisible_p(r.get_mpz_t(), d2.get_mpz_t()) != 0;
}

}  // namespace

bool lambda_contains(const SubgroupPresentation& L, const CirclePoint& x) {
  // common denominator over generators, x, and the wrap generator 1
  mpz_class den = 1;
  auto fold = [&den](const Scalar& s) {
    den = lcm(den, s.rat_part().get_den());
    den = lcm(den, s.surd_part().get_den());
  };
  for (const CirclePoint& g : L.generators) fold(g.value());
  fold(x.value());

  auto col_of = [&den](const Scalar& s) {
    mpq_class a = s.rat_part() * den, b = s.surd_part() * den;
    return Col{a.get_num(), b.get_num()};
  };

  std::vector<Col> cols;
  cols.reserve(L.generators.size() + 1);
  for (const CirclePoint& g : L.generators) {
    // fields must agree (rationals embed everywhere)
    unify_fields(g.value(), x.value());
    cols.push_back(col_of(g.value()));
  }
  cols.push_back(Col{den, 0});  // the integer 1, i.e. wrapping around the circle
  return in_lattice(std::move(cols), col_of(x.value()));
}

}  // namespace ietflip
