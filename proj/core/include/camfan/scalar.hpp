#ifndef CAMFAN_SCALAR_HPP
#define CAMFAN_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace camfan {

/// Exact field element: a rational, or a + b*sqrt(d) for a fixed square-free
/// positive integer d declared by the ambient group (d = 5 covers every
/// Coxeter matrix this library accepts).
///
/// A value with b == 0 has radicand 0 and mixes freely with values from any
/// field; arithmetic on two genuinely irrational values requires matching d.
/// All representations are canonical, so operator== is exact structural
/// equality and ordering is the ordering of real numbers.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(long v) : a_(v), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& a) : a_(a), b_(0), d_(0) { a_.canonicalize(); }

  static Scalar rational(const mpq_class& num, const mpq_class& den);
  static Scalar quadratic(const mpq_class& a, const mpq_class& b, int d);
  static Scalar sqrt_of(int d) { return quadratic(0, 1, d); }

  const mpq_class& rat() const { return a_; }
  const mpq_class& irr() const { return b_; }
  int radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && a_ == 0; }
  bool is_integer() const;

  /// -1, 0 or +1; the sign of the real number this value denotes.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

  Scalar inverse() const;

  /// Serialized form: "p", "p/q", "p/q+r/t√5", "p-r√5", ...
  std::string str() const;
  /// Accepts the output of str(); "sqrt5"/"sqrtD" is accepted as an ASCII
  /// alias for "√D". expected_d = 0 demands a rational.
  static Scalar parse(std::string_view text, int expected_d);

  double to_double() const;

  /// Total order usable as a map key (field order; rationals sort as reals).
  static int compare(const Scalar& x, const Scalar& y) { return (x - y).sign(); }

 private:
  void normalize_();
  mpq_class a_, b_;
  int d_;  // 0 when b_ == 0
};

using Vec = std::vector<Scalar>;

}  // namespace camfan

#endif
