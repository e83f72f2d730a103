#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "ietflip/errors.hpp"

namespace ietflip {

/// Coordinate field for circle points: Q when m == 0, otherwise Q(sqrt(m))
/// for a squarefree integer m >= 2.
struct FieldSpec {
  long m = 0;

  FieldSpec() = default;
  explicit FieldSpec(long m_);  // validates m == 0 or squarefree >= 2

  bool rational_only() const { return m == 0; }
  bool operator==(const FieldSpec&) const = default;
};

bool is_valid_field_radicand(long m);

/// Exact element a + b*sqrt(m) of Q(sqrt(m)). Rationals are kept canonical
/// (lowest terms, positive denominator); a value with b == 0 always carries
/// m == 0, so structural equality coincides with numeric equality.
///
/// Values from different quadratic fields may not be mixed; rationals embed
/// into any field. All arithmetic and ordering is exact — there is no
/// floating point anywhere in the decision paths.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), m_(0) {}
  Scalar(long n) : a_(n), b_(0), m_(0) {}
  Scalar(const mpq_class& a) : a_(a), b_(0), m_(0) {}
  Scalar(mpq_class a, mpq_class b, long m);

  /// sqrt(m) itself.
  static Scalar sqrt_of(long m);
  static Scalar ratio(long num, long den);

  const mpq_class& rat_part() const { return a_; }
  const mpq_class& surd_part() const { return b_; }
  long field_m() const { return m_; }
  bool is_rational() const { return m_ == 0; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  /// Exact sign: matching signs of a and b are decisive, otherwise a^2 is
  /// compared against m*b^2.
  int sign() const;
  /// Exact floor, via integer square roots and sign tests.
  mpz_class floor() const;

  int cmp(const Scalar& o) const { return (*this - o).sign(); }

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

  bool operator==(const Scalar& o) const {
    return m_ == o.m_ && a_ == o.a_ && b_ == o.b_;
  }
  std::strong_ordering operator<=>(const Scalar& o) const {
    int c = cmp(o);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  /// Canonical text form: `<rat>` or `<rat>(+|-)<rat>*sqrt(<m>)`.
  std::string str() const;

  /// Truncated decimal expansion of a nonnegative value, `digits` places.
  std::string decimal(int digits) const;

 private:
  mpq_class a_, b_;
  long m_;
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Common field of two values; throws field_mismatch for distinct radicands.
long unify_fields(const Scalar& x, const Scalar& y);

}  // namespace ietflip
