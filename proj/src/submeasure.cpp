#include "ktri/submeasure.hpp"

#include "ktri/error.hpp"

namespace ktri {

Submeasure::Submeasure(SetFunction eval) : eval_(std::move(eval)) {
  require(eval_.scalar_carrier(), "NOT-SCALAR", "submeasures are real-valued");
  const auto mono = is_monotone(eval_);
  require(mono.holds(), "NOT-MONOTONE",
          "submeasure must be monotone: " + (mono.witness ? mono.witness->str() : ""));
  const auto report = check_k_triangular(eval_, Rational(1));
  require(report.k_subadditive(), "NOT-SUBADDITIVE",
          "submeasure must be 1-subadditive; " +
              std::to_string(report.subadditivity_violation_count) + " violating pair(s)");
  // Zero at {} is already enforced by SetFunction construction.
}

bool Submeasure::null_chain(const std::vector<SetMask>& chain) const {
  require(!chain.empty(), "EMPTY-CHAIN", "need at least one chain set");
  return at(chain.back()).is_zero();
}

}  // namespace ktri
