#ifndef KTRI_O_SEQUENCE_HPP
#define KTRI_O_SEQUENCE_HPP

#include <vector>

#include "ktri/lattice_value.hpp"

namespace ktri {

// A truncated decreasing-to-zero sequence: finitely many non-negative values,
// non-increasing in the index. Whether the truncation is acceptable is a
// separate question from validity: meets_horizon() reports if the last value
// is within the declared tolerance (exact zero by default).
class OSequence {
 public:
  explicit OSequence(std::vector<LatticeValue> values);

  const std::vector<LatticeValue>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const LatticeValue& at(std::size_t p) const { return values_[p]; }

  bool meets_horizon() const;  // last value exactly zero
  bool meets_horizon(const LatticeValue& tolerance) const;

  static OSequence constant_scalar(const Rational& v, std::size_t len);

 private:
  std::vector<LatticeValue> values_;
};

}  // namespace ktri

#endif  // KTRI_O_SEQUENCE_HPP
