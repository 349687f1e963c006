#ifndef KTRI_SET_FUNCTION_HPP
#define KTRI_SET_FUNCTION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ktri/algebra.hpp"
#include "ktri/certificate.hpp"
#include "ktri/lattice_value.hpp"
#include "ktri/rational.hpp"

namespace ktri {

// A positive bounded set function on a power-set algebra. Backed either by
// an explicit table over all 2^n member sets, or by signed atom weights with
// eval(A) = |sum of weights over A| (the absolute value of an additive
// measure, hence 1-triangular by construction).
class SetFunction {
 public:
  struct TableBacking {
    std::vector<LatticeValue> values;  // indexed by mask
  };
  struct SeriesBacking {
    std::vector<Rational> weights;  // weights[a-1] for atom a
  };

  static SetFunction from_table(FiniteAlgebra algebra, std::vector<LatticeValue> values);
  static SetFunction from_series(FiniteAlgebra algebra, std::vector<Rational> weights,
                                 std::optional<std::string> tail_bound_desc = {});

  const FiniteAlgebra& algebra() const { return algebra_; }
  int atoms() const { return algebra_.atoms(); }
  bool is_series_backed() const { return std::holds_alternative<SeriesBacking>(backing_); }
  const std::vector<Rational>& weights() const;
  const std::optional<std::string>& tail_bound_desc() const { return tail_bound_desc_; }

  LatticeValue eval(SetMask a) const;
  // Full table indexed by mask; computed once per call site that sweeps.
  std::vector<LatticeValue> materialize() const;

  // A least upper bound for eval over all member sets (exact).
  const LatticeValue& bound() const { return bound_; }
  bool scalar_carrier() const { return bound_.is_scalar(); }
  std::size_t carrier_dim() const { return bound_.dim(); }

  SetFunction scaled(const Rational& c) const;  // c >= 0

 private:
  SetFunction(FiniteAlgebra algebra, std::variant<TableBacking, SeriesBacking> backing,
              std::optional<std::string> tail_bound_desc);

  FiniteAlgebra algebra_;
  std::variant<TableBacking, SeriesBacking> backing_;
  LatticeValue bound_;
  std::optional<std::string> tail_bound_desc_;
};

// Outcome of the exhaustive two-inequality sweep over all ordered disjoint
// pairs (A, B):
//   upper:  m(A u B) <= m(A) + k m(B)
//   lower:  m(A) - k m(B) <= m(A u B)
// Witness lists are capped; the counts are always exact, so empty lists
// together with zero counts mean the inequality holds for every pair.
struct TriangularityReport {
  Rational k;
  std::size_t pairs_checked = 0;
  std::size_t subadditivity_violation_count = 0;
  std::size_t lower_violation_count = 0;
  std::vector<std::pair<SetMask, SetMask>> subadditivity_violations;  // capped sample
  std::vector<std::pair<SetMask, SetMask>> lower_violations;          // capped sample

  bool k_subadditive() const { return subadditivity_violation_count == 0; }
  bool k_triangular() const {
    return subadditivity_violation_count == 0 && lower_violation_count == 0;
  }
};

TriangularityReport check_k_triangular(const SetFunction& m, const Rational& k);

// Least k >= 0 making m k-triangular, as the max of the exact per-pair
// thresholds. nullopt when no finite k works (some pair has m(B) = 0 but
// m(A u B) != m(A)). Scalar carriers only.
std::optional<Rational> minimal_k(const SetFunction& m);

// v(m)(A) = sup { m(B) : B subset of A }, as an explicit table. Monotone by
// construction with v(m)(empty) = 0. Computed by the one-atom-removal
// recurrence v[A] = m[A] v max_i v[A \ {i}], which equals the full
// subset-of-subset sweep.
SetFunction semivariation(const SetFunction& m);

// Single-query variant, 2^|A| sweep; usable above the full-table size limit.
LatticeValue semivariation_at(const SetFunction& m, SetMask a);

// Both finite-chain inequalities for pairwise disjoint E_1..E_n, n >= 2:
//   m(E_1) - k sum_{q>=2} m(E_q) <= m(union) <= m(E_1) + k sum_{q>=2} m(E_q)
// plus the corollary m(E_1) <= m(union) + k sum_{q>=2} m(E_q).
Certificate finite_chain_check(const SetFunction& m, const std::vector<SetMask>& sets,
                               const Rational& k);

SetFunction make_series_setfunction(const std::vector<Rational>& weights, int atoms,
                                    std::optional<std::string> tail_bound_desc = {});

// Exhaustive monotonicity check. For scalar carriers the reported witness is
// the violating pair with the largest gap m(A) - m(B) (ties: larger |A|,
// then larger masks), which pins the most extreme failure.
Certificate is_monotone(const SetFunction& m);

}  // namespace ktri

#endif  // KTRI_SET_FUNCTION_HPP
