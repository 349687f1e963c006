#include "ktri/lattice_value.hpp"

#include <sstream>

#include "ktri/error.hpp"

namespace ktri {

LatticeValue LatticeValue::scalar(Rational v) {
  LatticeValue x;
  x.scalar_ = true;
  x.comps_ = {std::move(v)};
  return x;
}

LatticeValue LatticeValue::vector(std::vector<Rational> comps) {
  require(!comps.empty(), "EMPTY-VECTOR", "vector lattice value needs dimension >= 1");
  LatticeValue x;
  x.scalar_ = false;
  x.comps_ = std::move(comps);
  return x;
}

LatticeValue LatticeValue::zero_like(const LatticeValue& shape) {
  if (shape.scalar_) return scalar(Rational(0));
  return vector(std::vector<Rational>(shape.dim(), Rational(0)));
}

const Rational& LatticeValue::as_rational() const {
  require(scalar_, "NOT-SCALAR", "operation requires a totally ordered (scalar) carrier");
  return comps_[0];
}

void LatticeValue::check_shape(const LatticeValue& o, const char* op) const {
  if (scalar_ != o.scalar_ || comps_.size() != o.comps_.size())
    fail("DIMENSION-MISMATCH", std::string(op) + " on values of different carriers (" + str() +
                                   " vs " + o.str() + ")");
}

LatticeValue LatticeValue::operator+(const LatticeValue& o) const {
  check_shape(o, "add");
  LatticeValue r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] += o.comps_[i];
  return r;
}

LatticeValue LatticeValue::operator-(const LatticeValue& o) const {
  check_shape(o, "subtract");
  LatticeValue r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] -= o.comps_[i];
  return r;
}

LatticeValue LatticeValue::operator-() const {
  LatticeValue r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

LatticeValue LatticeValue::join(const LatticeValue& o) const {
  check_shape(o, "join");
  LatticeValue r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    r.comps_[i] = Rational::max(comps_[i], o.comps_[i]);
  return r;
}

LatticeValue LatticeValue::meet(const LatticeValue& o) const {
  check_shape(o, "meet");
  LatticeValue r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    r.comps_[i] = Rational::min(comps_[i], o.comps_[i]);
  return r;
}

LatticeValue LatticeValue::abs() const { return join(-*this); }

LatticeValue LatticeValue::scaled(const Rational& c) const {
  LatticeValue r = *this;
  for (auto& x : r.comps_) x *= c;
  return r;
}

bool LatticeValue::operator==(const LatticeValue& o) const {
  return scalar_ == o.scalar_ && comps_ == o.comps_;
}

bool LatticeValue::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool LatticeValue::is_nonneg() const {
  for (const auto& c : comps_)
    if (c.sign() < 0) return false;
  return true;
}

std::string LatticeValue::str() const {
  if (scalar_) return comps_[0].str();
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) os << ", ";
    os << comps_[i].str();
  }
  os << ')';
  return os.str();
}

bool leq(const LatticeValue& a, const LatticeValue& b) {
  require(a.is_scalar() == b.is_scalar() && a.dim() == b.dim(), "DIMENSION-MISMATCH",
          "order comparison on values of different carriers");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.components()[i] > b.components()[i]) return false;
  return true;
}

LatticeValue join_all(const std::vector<LatticeValue>& xs) {
  require(!xs.empty(), "EMPTY-JOIN", "join of an empty list");
  LatticeValue r = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) r = r.join(xs[i]);
  return r;
}

}  // namespace ktri
