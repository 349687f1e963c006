#ifndef KTRI_FAMILY_HPP
#define KTRI_FAMILY_HPP

#include <optional>

#include "ktri/certificate.hpp"
#include "ktri/set_function.hpp"

namespace ktri {

// An indexed finite sequence m_1..m_J of set functions over one algebra,
// optionally with a declared pointwise limit m_0 and the regulator the
// convergence is claimed against. The equibound u (single element dominating
// every m_j everywhere) is computed at construction.
class SetFunctionFamily {
 public:
  SetFunctionFamily(std::vector<SetFunction> members, std::optional<SetFunction> declared_limit,
                    std::optional<Regulator> convergence_regulator);

  const std::vector<SetFunction>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const SetFunction& member(std::size_t j) const { return members_[j]; }  // 0-based
  const FiniteAlgebra& algebra() const { return members_[0].algebra(); }
  const LatticeValue& equibound() const { return equibound_; }

  const std::optional<SetFunction>& declared_limit() const { return declared_limit_; }
  const std::optional<Regulator>& convergence_regulator() const { return convergence_regulator_; }

  // Checks d_converges((m_j(A))_j -> m_0(A)) for every member set A against
  // the convergence regulator. Errors if either is missing.
  Certificate pointwise_convergence(const PhiConfig& config) const;

 private:
  std::vector<SetFunction> members_;
  std::optional<SetFunction> declared_limit_;
  std::optional<Regulator> convergence_regulator_;
  LatticeValue equibound_;
};

}  // namespace ktri

#endif  // KTRI_FAMILY_HPP
