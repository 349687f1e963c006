#include "ktri/o_sequence.hpp"

#include "ktri/error.hpp"

namespace ktri {

OSequence::OSequence(std::vector<LatticeValue> values) : values_(std::move(values)) {
  require(!values_.empty(), "EMPTY-SEQUENCE", "o-sequence needs at least one value");
  for (std::size_t p = 0; p < values_.size(); ++p) {
    require(values_[p].is_nonneg(), "NEGATIVE-ENTRY",
            "o-sequence entry " + std::to_string(p + 1) + " is negative");
    if (p + 1 < values_.size())
      require(leq(values_[p + 1], values_[p]), "NOT-NON-INCREASING",
              "o-sequence increases at position " + std::to_string(p + 1));
  }
}

bool OSequence::meets_horizon() const { return values_.back().is_zero(); }

bool OSequence::meets_horizon(const LatticeValue& tolerance) const {
  return leq(values_.back(), tolerance);
}

OSequence OSequence::constant_scalar(const Rational& v, std::size_t len) {
  return OSequence(std::vector<LatticeValue>(len, LatticeValue::scalar(v)));
}

}  // namespace ktri
