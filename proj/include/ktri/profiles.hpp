#ifndef KTRI_PROFILES_HPP
#define KTRI_PROFILES_HPP

#include "ktri/family.hpp"
#include "ktri/submeasure.hpp"

namespace ktri {

// The tracked quantity along a disjoint sequence (C_h) or a decreasing
// chain (H_n): one value per step, either for a single member or as the
// join over the whole family.
struct DecayProfile {
  enum class Kind { DisjointSequence, Chain };
  Kind kind = Kind::DisjointSequence;
  bool uniform = false;
  std::vector<SetMask> labels;
  std::vector<LatticeValue> values;
};

struct ProfileResult {
  DecayProfile profile;
  Certificate certificate;
};

// A decreasing chain fixture. `truncated` declares the sets to be a finite
// prefix of an infinite chain shrinking to {}; untruncated chains must
// actually reach {} at their deepest set.
struct Chain {
  std::vector<SetMask> sets;
  bool truncated = false;
};

void validate_disjoint_sequence(const std::vector<SetMask>& sets, const FiniteAlgebra& algebra);
void validate_chain(const Chain& chain, const FiniteAlgebra& algebra);

// Values m_j(C_h) along a disjoint sequence (or the family join when
// `member` is empty), certified to (D)-vanish against `reg`.
ProfileResult s_bounded_profile(const SetFunctionFamily& family,
                                const std::vector<SetMask>& disjoint_seq,
                                std::optional<std::size_t> member, const Regulator& reg,
                                const PhiConfig& config);

// Single member: m_j(H_n) along the chain. Uniform: join_j v(m_j)(H_n),
// the semivariation join, which is the quantity whose decay defines uniform
// continuity from above at {}.
ProfileResult continuity_profile(const SetFunctionFamily& family, const Chain& chain,
                                 std::optional<std::size_t> member, const Regulator& reg,
                                 const PhiConfig& config);

// Continuity from above at {} w.r.t. `continuity_reg` forces (s)-boundedness
// w.r.t. the same regulator scaled by (k+1). `factor` defaults to that k+1;
// passing a smaller factor (e.g. k) exposes how sharp the scaling is.
Certificate sbounded_from_continuity_check(const SetFunction& m, const Rational& k,
                             const Regulator& continuity_reg, const std::vector<Chain>& chains,
                             const std::vector<std::vector<SetMask>>& disjoint_seqs,
                             const PhiConfig& config,
                             std::optional<Rational> factor = std::nullopt);

enum class InheritedProperty { SBounded, Continuous };

// The semivariation inherits (s)-boundedness against the same regulator and
// continuity from above at {} against the (k+1)-scaled one. `member` empty
// runs the uniform (whole family) version.
Certificate semivariation_inheritance_check(const SetFunctionFamily& family,
                                            InheritedProperty property,
                                            std::optional<std::size_t> member, const Rational& k,
                                            const Regulator& reg,
                                            const std::vector<std::vector<SetMask>>& disjoint_seqs,
                                            const std::vector<Chain>& chains,
                                            const PhiConfig& config);

// Transfer of decay from each member to the family join, for the quantity
// sup { m_j(A) : A subset of H_n \ W }. Needs the family uniformly
// (s)-bounded (checked on the supplied disjoint sequences); per-member decay
// w.r.t. `reg` must then force uniform decay w.r.t. the same regulator.
Certificate uniformity_transfer_check(const SetFunctionFamily& family, const Chain& chain,
                                      SetMask w, const Regulator& reg,
                                      const std::vector<std::vector<SetMask>>& disjoint_seqs,
                                      const PhiConfig& config);

// Continuity along chains that are null for the submeasure eta:
// (s)-boundedness is a separately labeled hypothesis, the conclusion tracks
// m_j(H_n) (or the family join) against `reg`.
Certificate tau_continuity_check(const SetFunctionFamily& family, const Submeasure& eta,
                                 const Chain& chain, std::optional<std::size_t> member,
                                 const Regulator& reg,
                                 const std::vector<std::vector<SetMask>>& disjoint_seqs,
                                 const PhiConfig& config);

}  // namespace ktri

#endif  // KTRI_PROFILES_HPP
