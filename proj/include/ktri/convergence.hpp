#ifndef KTRI_CONVERGENCE_HPP
#define KTRI_CONVERGENCE_HPP

#include <functional>

#include "ktri/certificate.hpp"

namespace ktri {

// Truncated (D)-convergence check: for every sampled phi there must be an
// n0 within the horizon with |seq[n] - limit| <= sup_t a_{t,phi(t)} for all
// n >= n0. Equivalently the last element must satisfy the bound; the witness
// of a violation is the last index that fails.
Certificate d_converges(const std::vector<LatticeValue>& seq, const LatticeValue& limit,
                        const Regulator& reg, const std::vector<IndexMap>& phis);

// Convenience overload sampling phis from the regulator shape.
Certificate d_converges(const std::vector<LatticeValue>& seq, const LatticeValue& limit,
                        const Regulator& reg, const PhiConfig& config);

// All strictly increasing index tuples over {0..n-1} with at least min_len
// entries. Intended for horizons small enough for full enumeration (n <= 16).
std::vector<std::vector<std::size_t>> all_subsequences(std::size_t n, std::size_t min_len);

// Instance check of the sub-subsequence principle: if the sequence fails to
// (D)-converge, some selected subsequence must have no tail-faithful
// sub-subsequence that converges, and that subsequence is reported as the
// witness. Tail-faithful means the sub-subsequence keeps its parent's last
// element, the finite stand-in for an infinite tail.
Certificate subsequence_principle_check(const std::vector<LatticeValue>& seq,
                                        const LatticeValue& limit, const Regulator& reg,
                                        const std::vector<std::vector<std::size_t>>& subsequences,
                                        const PhiConfig& config);

// Re-checks the fremlin_combine contract on sampled phis:
//   u ^ sum_{n=1..q} regulator_sup(regs[n-1], phi.shifted(n)) <= regulator_sup(combined, phi)
// for every q <= regs.size().
Certificate fremlin_property_check(const std::vector<Regulator>& regs, const LatticeValue& u,
                                   const Regulator& combined, const std::vector<IndexMap>& phis);

}  // namespace ktri

#endif  // KTRI_CONVERGENCE_HPP
