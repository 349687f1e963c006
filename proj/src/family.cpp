#include "ktri/family.hpp"

#include "ktri/convergence.hpp"
#include "ktri/error.hpp"

namespace ktri {

SetFunctionFamily::SetFunctionFamily(std::vector<SetFunction> members,
                                     std::optional<SetFunction> declared_limit,
                                     std::optional<Regulator> convergence_regulator)
    : members_(std::move(members)),
      declared_limit_(std::move(declared_limit)),
      convergence_regulator_(std::move(convergence_regulator)) {
  require(!members_.empty(), "EMPTY-FAMILY", "a family needs at least one member");
  const FiniteAlgebra& alg = members_[0].algebra();
  equibound_ = members_[0].bound();
  for (const auto& m : members_) {
    require(m.algebra() == alg, "ALGEBRA-MISMATCH", "family members must share one algebra");
    equibound_ = equibound_.join(m.bound());
  }
  if (declared_limit_)
    require(declared_limit_->algebra() == alg, "ALGEBRA-MISMATCH",
            "declared limit must live on the family's algebra");
}

Certificate SetFunctionFamily::pointwise_convergence(const PhiConfig& config) const {
  require(declared_limit_.has_value(), "NO-DECLARED-LIMIT", "family has no declared limit");
  require(convergence_regulator_.has_value(), "NO-REGULATOR",
          "family has no convergence regulator");
  const auto& reg = *convergence_regulator_;
  const auto phis = sample_phis(reg.row_count(), reg.column_count(), config);

  std::vector<std::vector<LatticeValue>> member_tables;
  member_tables.reserve(members_.size());
  for (const auto& m : members_) member_tables.push_back(m.materialize());
  const auto limit_table = declared_limit_->materialize();

  Certificate overall;
  overall.regulator_used = reg;
  overall.horizons.regulator_rows = reg.row_count();
  overall.horizons.regulator_columns = reg.column_count();
  overall.horizons.sequence_length = members_.size();
  overall.horizons.phi_count = phis.size();
  overall.horizons.seed = config.seed;

  std::vector<LatticeValue> column(members_.size(), LatticeValue());
  for (SetMask a = 0; a < algebra().set_count(); ++a) {
    for (std::size_t j = 0; j < members_.size(); ++j) column[j] = member_tables[j][a];
    Certificate c = d_converges(column, limit_table[a], reg, phis);
    if (!c.holds()) {
      overall.verdict = Verdict::Violated;
      Witness w = *c.witness;
      w.what = "pointwise (D)-convergence fails on a member set";
      w.set_mask = a;
      overall.witness = std::move(w);
      return overall;
    }
  }
  overall.verdict = Verdict::HoldsAtHorizon;
  return overall;
}

}  // namespace ktri
