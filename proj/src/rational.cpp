#include "ktri/rational.hpp"

#include <ostream>

#include "ktri/error.hpp"

namespace ktri {

Rational::Rational(long num, long den) {
  require(den != 0, "ZERO-DENOMINATOR", "rational with denominator 0");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  require(!text.empty(), "PARSE", "empty rational literal");
  std::string s(text);
  mpq_class v;
  if (v.set_str(s, 10) != 0) fail("PARSE", "bad rational literal '" + s + "'");
  require(v.get_den() != 0, "ZERO-DENOMINATOR", "rational literal '" + s + "' has denominator 0");
  return Rational(v);
}

Rational Rational::operator/(const Rational& o) const {
  require(!o.is_zero(), "ZERO-DENOMINATOR", "division by zero");
  return wrap(v_ / o.v_);
}

Rational Rational::pow(unsigned long e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  mpq_class out(num, den);
  out.canonicalize();
  return Rational(out);
}

std::string Rational::str() const { return v_.get_str(); }

const Rational& Rational::zero() {
  static const Rational z(0);
  return z;
}

const Rational& Rational::one() {
  static const Rational o(1);
  return o;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ktri
