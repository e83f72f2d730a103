#include "ietflip/scalar.hpp"

#include <ostream>

namespace ietflip {

bool is_valid_field_radicand(long m) {
  if (m == 0) return true;
  if (m < 2) return false;
  for (long d = 2; d * d <= m; ++d) {
    if (m % (d * d) == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(long m_) : m(m_) {
  if (!is_valid_field_radicand(m)) {
    throw DomainError(Errc::bad_parameters,
                      "field radicand must be 0 or a squarefree integer >= 2, got " +
                          std::to_string(m));
  }
}

Scalar::Scalar(mpq_class a, mpq_class b, long m)
    : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (m_ < 0 || m_ == 1) {
    throw DomainError(Errc::bad_parameters, "invalid field radicand " + std::to_string(m_));
  }
  if (m_ == 0 && sgn(b_) != 0) {
    throw DomainError(Errc::field_mismatch, "sqrt coefficient requires a quadratic field");
  }
  normalize();
}

void Scalar::normalize() {
  if (sgn(b_) == 0) {
    b_ = 0;
    m_ = 0;
  }
}

Scalar Scalar::sqrt_of(long m) {
  return Scalar(mpq_class(0), mpq_class(1), m);
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw DomainError(Errc::bad_parameters, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

long unify_fields(const Scalar& x, const Scalar& y) {
  long mx = x.field_m(), my = y.field_m();
  if (mx == my) return mx;
  if (mx == 0) return my;
  if (my == 0) return mx;
  throw DomainError(Errc::field_mismatch,
                    "cannot mix sqrt(" + std::to_string(mx) + ") with sqrt(" +
                        std::to_string(my) + ")");
}

int Scalar::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: |a| vs |b|sqrt(m), exactly a^2 vs m b^2
  mpq_class a2 = a_ * a_;
  mpq_class mb2 = b_ * b_ * m_;
  int c = ::cmp(a2, mb2);
  // c == 0 would mean sqrt(m) rational; impossible for valid radicands
  return c > 0 ? sa : sb;
}

mpz_class Scalar::floor() const {
  mpz_class fa;
  mpz_fdiv_q(fa.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
  if (sgn(b_) == 0) return fa;

  // floor(b*sqrt(m)) for b = p/q: floor(isqrt(m p^2) / q), shifted for p < 0
  // (b*sqrt(m) is irrational, so floor(-z) = -floor(z) - 1).
  mpz_class p = b_.get_num(), q = b_.get_den();
  mpz_class mp2 = p * p * m_;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), mp2.get_mpz_t());
  mpz_class fb;
  mpz_fdiv_q(fb.get_mpz_t(), s.get_mpz_t(), q.get_mpz_t());
  if (sgn(p) < 0) fb = -fb - 1;

  mpz_class n = fa + fb;  // floor is n or n + 1
  Scalar rem = *this - Scalar(mpq_class(n + 1));
  return rem.sign() >= 0 ? mpz_class(n + 1) : n;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  long m = unify_fields(x, y);
  return Scalar(x.a_ + y.a_, x.b_ + y.b_, m);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  long m = unify_fields(x, y);
  return Scalar(x.a_ - y.a_, x.b_ - y.b_, m);
}

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, m_); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  long m = unify_fields(x, y);
  return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * m, x.a_ * y.b_ + x.b_ * y.a_, m);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) throw DomainError(Errc::bad_parameters, "division by zero");
  long m = unify_fields(x, y);
  // 1/(a + b sqrt(m)) = (a - b sqrt(m)) / (a^2 - m b^2)
  mpq_class norm = y.a_ * y.a_ - y.b_ * y.b_ * m;
  Scalar conj(y.a_ / norm, -y.b_ / norm, m);
  return x * conj;
}

static std::string rat_str(const mpq_class& q) { return q.get_str(); }

std::string Scalar::str() const {
  if (is_rational()) return rat_str(a_);
  std::string out = rat_str(a_);
  out += sgn(b_) > 0 ? '+' : '-';
  out += rat_str(abs(b_));
  out += "*sqrt(";
  out += std::to_string(m_);
  out += ')';
  return out;
}

std::string Scalar::decimal(int digits) const {
  if (sign() < 0) throw DomainError(Errc::precondition, "decimal() expects a nonnegative value");
  mpz_class pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  Scalar scaled = *this * Scalar(mpq_class(pow10));
  mpz_class units = scaled.floor();
  mpz_class ip = units / pow10, fp = units % pow10;
  if (digits == 0) return ip.get_str();
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  // trim trailing zeros, keeping at least one digit
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  return ip.get_str() + "." + frac;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace ietflip
