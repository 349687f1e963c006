#ifndef KTRI_HARNESS_HPP
#define KTRI_HARNESS_HPP

#include "ktri/profiles.hpp"
#include "ktri/schur.hpp"

namespace ktri {

// The four instance-level limit-theorem checks. Each verifies the selected
// theorem's hypotheses on the concrete family at the declared horizons, then
// verifies its conclusions against regulators assembled the way the
// corresponding proofs assemble them. A conclusion failing on a
// hypothesis-satisfying family indicates an implementation bug, so these
// runs double as the core regression tests.
enum class TheoremId { BJ, N, VHS, S };

const char* theorem_name(TheoremId id);
TheoremId parse_theorem(const std::string& name);

struct HarnessFixtures {
  std::vector<std::vector<SetMask>> disjoint_seqs;
  std::vector<Chain> chains;
  std::optional<Submeasure> eta;         // VHS: the topology-generating submeasure
  std::optional<Regulator> sbound_reg;   // regulator for per-member (s)-boundedness
  std::optional<Regulator> continuity_reg;
  Rational k{1};
  PhiConfig phi;
};

struct HypothesisResult {
  std::string name;
  bool met = false;
  std::optional<Witness> witness;
  std::string detail;
};

struct ConclusionResult {
  std::string name;
  Verdict verdict = Verdict::HoldsAtHorizon;
  std::optional<Witness> witness;
  std::string regulator_desc;
};

struct HarnessReport {
  TheoremId theorem = TheoremId::BJ;
  std::string verdict;  // CONSISTENT | VIOLATION | HYPOTHESIS-NOT-MET
  std::vector<HypothesisResult> hypotheses;
  std::vector<ConclusionResult> conclusions;
  std::vector<SchurGapRow> gaps;  // filled for theorem S
  std::string equibound;

  bool consistent() const { return verdict == "CONSISTENT"; }
};

// Regulator bookkeeping, pinned once here:
//  - u            equibound, join over members of their exact bounds
//  - a            the supplied per-member property regulator (s-boundedness
//                 one, or the (k+1)-scaled continuity one when only that is
//                 given)
//  - fremlin(a,u) single regulator dominating capped shifted partial sums
//                 of J copies of a
//  - b            the family's pointwise-convergence regulator
//  - uniform (s)-boundedness is certified against 2(k+2)^2 (fremlin + b)
//  - uniform continuity / tau-continuity against (k+1) a_cont v the above
//  - limit-function conclusions add one more b on top
//  - the gap sup for theorem S is certified against (2k+2)(d + b + b),
//    d being the uniform-continuity regulator.
HarnessReport theorem_harness(const SetFunctionFamily& family, TheoremId theorem,
                              const HarnessFixtures& fixtures);

}  // namespace ktri

#endif  // KTRI_HARNESS_HPP
