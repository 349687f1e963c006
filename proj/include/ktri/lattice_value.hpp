#ifndef KTRI_LATTICE_VALUE_HPP
#define KTRI_LATTICE_VALUE_HPP

#include <string>
#include <vector>

#include "ktri/rational.hpp"

namespace ktri {

// An element of one of the two supported carriers: an exact rational scalar,
// or a rational vector of fixed dimension with the componentwise order.
// Join and meet are componentwise max/min, |x| = x v (-x), and all
// operations are exact. The order is partial for vectors: leq() decides
// componentwise dominance, so !leq(a, b) does not imply leq(b, a).
class LatticeValue {
 public:
  LatticeValue() : scalar_(true), comps_(1) {}

  static LatticeValue scalar(Rational v);
  static LatticeValue vector(std::vector<Rational> comps);
  static LatticeValue zero_like(const LatticeValue& shape);

  bool is_scalar() const { return scalar_; }
  std::size_t dim() const { return comps_.size(); }
  const std::vector<Rational>& components() const { return comps_; }

  // Scalar accessor; errors on vector carriers.
  const Rational& as_rational() const;

  LatticeValue operator+(const LatticeValue& o) const;
  LatticeValue operator-(const LatticeValue& o) const;
  LatticeValue operator-() const;

  LatticeValue join(const LatticeValue& o) const;  // componentwise max
  LatticeValue meet(const LatticeValue& o) const;  // componentwise min
  LatticeValue abs() const;                        // x v (-x)
  LatticeValue scaled(const Rational& c) const;

  bool operator==(const LatticeValue& o) const;
  bool operator!=(const LatticeValue& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_nonneg() const;

  std::string str() const;  // "p/q" or "(p/q, p/q, ...)"

 private:
  void check_shape(const LatticeValue& o, const char* op) const;

  bool scalar_;
  std::vector<Rational> comps_;
};

// Componentwise order. For scalars this is the usual total order.
bool leq(const LatticeValue& a, const LatticeValue& b);

LatticeValue join_all(const std::vector<LatticeValue>& xs);

}  // namespace ktri

#endif  // KTRI_LATTICE_VALUE_HPP
