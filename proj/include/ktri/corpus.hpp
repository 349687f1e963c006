#ifndef KTRI_CORPUS_HPP
#define KTRI_CORPUS_HPP

#include <cstdint>

#include "ktri/family.hpp"

namespace ktri {

// The running example: eval(A) = |sum_{a in A} (-1)^a / a^2|, the absolute
// value of an absolutely convergent signed measure. 1-triangular and not
// monotone; eval({1,3}) = 10/9 > 31/36 = eval({1,2,3}).
SetFunction gen_measuroid(int atoms);

// Family m_j = scales[j] * m with declared limit limit_scale * m. The
// convergence regulator has constant rows sigma_l = sup_{j >= l} of
// |scales[j] - limit_scale| * bound(m), the exact deviation tails.
SetFunctionFamily gen_scaled_family(const SetFunction& m, const std::vector<Rational>& scales,
                                    const Rational& limit_scale);

// The sliding-hump adversary: m_j(A) = 1 if humps[j] is contained in A,
// else 0. Every member is verified 1-triangular at construction (which
// forces singleton humps; a split hump breaks subadditivity and is
// rejected). The family is deliberately not uniformly (s)-bounded along its
// own humps, and its declared limit (the zero function) is not pointwise
// attained at the horizon.
SetFunctionFamily gen_hump_family(int atoms, const std::vector<SetMask>& humps);

// Seeded rejection sampler for k-subadditive functions: a structurally
// 1-subadditive mixture (|signed series| + max-measure + capped additive),
// scaled to `bound`, then perturbed multiplicatively with a shrinking
// amplitude until the exhaustive k-subadditivity check passes. Errors with
// REJECTION-BUDGET when the budget is exhausted (expected for k < 1 and any
// nonzero bound).
SetFunction gen_random_ksubadditive(int atoms, const Rational& k, const Rational& bound,
                                    std::uint64_t seed);

struct RandomGenerationStats {
  std::size_t attempts = 0;
  std::size_t rejected = 0;
};

SetFunction gen_random_ksubadditive(int atoms, const Rational& k, const Rational& bound,
                                    std::uint64_t seed, RandomGenerationStats& stats);

// Seeded tuple of pairwise disjoint nonempty sets, at most max_parts of them.
std::vector<SetMask> gen_random_disjoint_tuple(const FiniteAlgebra& algebra,
                                               std::size_t max_parts, std::uint64_t seed);

// Constant-row regulator whose row is the running tail sup of the given
// value sequences: sigma_l = sup over every sequence of its values from
// step l on (clamped to the final step past a sequence's end). The smallest
// constant-row regulator that certifies the sequences' own decay.
Regulator tail_sup_regulator(const std::vector<std::vector<LatticeValue>>& profiles,
                             std::size_t size);

}  // namespace ktri

#endif  // KTRI_CORPUS_HPP
