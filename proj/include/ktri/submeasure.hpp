#ifndef KTRI_SUBMEASURE_HPP
#define KTRI_SUBMEASURE_HPP

#include "ktri/set_function.hpp"

namespace ktri {

// A real-valued submeasure: monotone, 1-subadditive, zero at {}. Stands in
// for the topology it generates; a decreasing chain is "null" for it when
// the submeasure vanishes at the chain's deepest set. All three defining
// laws are checked exhaustively at construction.
class Submeasure {
 public:
  explicit Submeasure(SetFunction eval);

  const SetFunction& eval() const { return eval_; }
  Rational at(SetMask a) const { return eval_.eval(a).as_rational(); }
  const FiniteAlgebra& algebra() const { return eval_.algebra(); }

  // The chain's tail must be exactly null for the chain to count as
  // converging to {} in the generated topology.
  bool null_chain(const std::vector<SetMask>& chain) const;

 private:
  SetFunction eval_;
};

}  // namespace ktri

#endif  // KTRI_SUBMEASURE_HPP
