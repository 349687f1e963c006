#ifndef KTRI_RATIONAL_HPP
#define KTRI_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ktri {

// Exact rational number. All arithmetic is exact; values are kept in
// canonical form (coprime numerator/denominator, positive denominator).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}          // NOLINT: implicit by design
  Rational(int n) : v_(n) {}           // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p/q", "p", and optional leading '-'.
  static Rational parse(std::string_view text);

  Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return wrap(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  Rational abs() const { return wrap(::abs(v_)); }
  Rational pow(unsigned long e) const;
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  // Canonical text form: "p/q", or just "p" when the denominator is 1.
  std::string str() const;
  double approx() const { return v_.get_d(); }

  static const Rational& zero();
  static const Rational& one();

  static Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
  static Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

 private:
  static Rational wrap(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ktri

#endif  // KTRI_RATIONAL_HPP
