#include "ktri/profiles.hpp"

#include "ktri/convergence.hpp"
#include "ktri/error.hpp"

namespace ktri {

void validate_disjoint_sequence(const std::vector<SetMask>& sets, const FiniteAlgebra& algebra) {
  require(!sets.empty(), "EMPTY-SEQUENCE", "need at least one set");
  SetMask seen = 0;
  for (std::size_t h = 0; h < sets.size(); ++h) {
    require(algebra.contains(sets[h]), "SET-OUTSIDE-ALGEBRA",
            "set " + std::to_string(h + 1) + " not a member set");
    require(disjoint(sets[h], seen), "NON-DISJOINT",
            "set " + std::to_string(h + 1) + " (" + set_str(sets[h]) +
                ") overlaps an earlier one");
    seen |= sets[h];
  }
}

void validate_chain(const Chain& chain, const FiniteAlgebra& algebra) {
  require(!chain.sets.empty(), "EMPTY-CHAIN", "need at least one chain set");
  for (std::size_t i = 0; i < chain.sets.size(); ++i) {
    require(algebra.contains(chain.sets[i]), "SET-OUTSIDE-ALGEBRA",
            "chain set " + std::to_string(i + 1) + " not a member set");
    if (i + 1 < chain.sets.size()) {
      const SetMask cur = chain.sets[i];
      const SetMask nxt = chain.sets[i + 1];
      require(subset_of(nxt, cur) && nxt != cur, "NOT-DECREASING",
              "chain must be strictly decreasing at step " + std::to_string(i + 2));
    }
  }
  if (!chain.truncated)
    require(chain.sets.back() == 0, "NONEMPTY-INTERSECTION",
            "untruncated chain must reach {} (deepest set is " + set_str(chain.sets.back()) +
                "); declare it truncated if it is a prefix");
}

namespace {

LatticeValue zero_of(const SetFunctionFamily& family) {
  return LatticeValue::zero_like(family.equibound());
}

Certificate certify_decay(const std::vector<LatticeValue>& values, const LatticeValue& zero,
                          const Regulator& reg, const PhiConfig& config) {
  return d_converges(values, zero, reg, config);
}

std::vector<SetFunction> member_semivariations(const SetFunctionFamily& family) {
  std::vector<SetFunction> out;
  out.reserve(family.size());
  for (const auto& m : family.members()) out.push_back(semivariation(m));
  return out;
}

}  // namespace

ProfileResult s_bounded_profile(const SetFunctionFamily& family,
                                const std::vector<SetMask>& disjoint_seq,
                                std::optional<std::size_t> member, const Regulator& reg,
                                const PhiConfig& config) {
  validate_disjoint_sequence(disjoint_seq, family.algebra());
  if (member) require(*member < family.size(), "BAD-MEMBER-INDEX", "member index out of range");

  ProfileResult out;
  out.profile.kind = DecayProfile::Kind::DisjointSequence;
  out.profile.uniform = !member.has_value();
  out.profile.labels = disjoint_seq;
  for (SetMask c : disjoint_seq) {
    if (member) {
      out.profile.values.push_back(family.member(*member).eval(c));
    } else {
      LatticeValue v = zero_of(family);
      for (const auto& m : family.members()) v = v.join(m.eval(c));
      out.profile.values.push_back(std::move(v));
    }
  }
  out.certificate = certify_decay(out.profile.values, zero_of(family), reg, config);
  return out;
}

ProfileResult continuity_profile(const SetFunctionFamily& family, const Chain& chain,
                                 std::optional<std::size_t> member, const Regulator& reg,
                                 const PhiConfig& config) {
  validate_chain(chain, family.algebra());
  if (member) require(*member < family.size(), "BAD-MEMBER-INDEX", "member index out of range");

  ProfileResult out;
  out.profile.kind = DecayProfile::Kind::Chain;
  out.profile.uniform = !member.has_value();
  out.profile.labels = chain.sets;
  if (member) {
    for (SetMask h : chain.sets) out.profile.values.push_back(family.member(*member).eval(h));
  } else {
    const auto semis = member_semivariations(family);
    for (SetMask h : chain.sets) {
      LatticeValue v = zero_of(family);
      for (const auto& vm : semis) v = v.join(vm.eval(h));
      out.profile.values.push_back(std::move(v));
    }
  }
  out.certificate = certify_decay(out.profile.values, zero_of(family), reg, config);
  return out;
}

Certificate sbounded_from_continuity_check(const SetFunction& m, const Rational& k,
                             const Regulator& continuity_reg, const std::vector<Chain>& chains,
                             const std::vector<std::vector<SetMask>>& disjoint_seqs,
                             const PhiConfig& config, std::optional<Rational> factor) {
  SetFunctionFamily solo({m}, std::nullopt, std::nullopt);

  auto hypothesis_fail = [&](const std::string& what, const Certificate& inner) {
    Certificate cert;
    cert.verdict = Verdict::HypothesisNotMet;
    Witness w = inner.witness ? *inner.witness : Witness{};
    w.what = what + (inner.witness ? (": " + inner.witness->what) : "");
    cert.witness = std::move(w);
    return cert;
  };

  const auto report = check_k_triangular(m, k);
  if (!report.k_triangular()) {
    Certificate cert;
    cert.verdict = Verdict::HypothesisNotMet;
    Witness w;
    w.what = "function is not k-triangular at k=" + k.str();
    cert.witness = std::move(w);
    return cert;
  }
  for (const auto& chain : chains) {
    auto res = continuity_profile(solo, chain, 0, continuity_reg, config);
    if (!res.certificate.holds())
      return hypothesis_fail("continuity from above at {} fails", res.certificate);
  }

  const Rational scale = factor.value_or(k + Rational(1));
  const Regulator scaled = continuity_reg.scaled(scale);
  for (const auto& seq : disjoint_seqs) {
    auto res = s_bounded_profile(solo, seq, 0, scaled, config);
    if (!res.certificate.holds()) {
      Certificate cert = res.certificate;
      if (cert.witness)
        cert.witness->what =
            "(s)-boundedness fails against the " + scale.str() + "-scaled continuity regulator";
      return cert;
    }
  }
  Certificate cert;
  cert.verdict = Verdict::HoldsAtHorizon;
  cert.regulator_used = scaled;
  cert.detail = "scale factor " + scale.str();
  return cert;
}

Certificate semivariation_inheritance_check(const SetFunctionFamily& family,
                                            InheritedProperty property,
                                            std::optional<std::size_t> member, const Rational& k,
                                            const Regulator& reg,
                                            const std::vector<std::vector<SetMask>>& disjoint_seqs,
                                            const std::vector<Chain>& chains,
                                            const PhiConfig& config) {
  auto hypothesis_fail = [&](const std::string& what) {
    Certificate cert;
    cert.verdict = Verdict::HypothesisNotMet;
    Witness w;
    w.what = what;
    cert.witness = std::move(w);
    return cert;
  };

  // Hypothesis side: the property for the function(s) themselves.
  if (property == InheritedProperty::SBounded) {
    for (const auto& seq : disjoint_seqs)
      if (!s_bounded_profile(family, seq, member, reg, config).certificate.holds())
        return hypothesis_fail("(s)-boundedness hypothesis fails at horizon");
  } else {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (member && *member != j) continue;
      if (!check_k_triangular(family.member(j), k).k_triangular())
        return hypothesis_fail("member " + std::to_string(j + 1) + " is not k-triangular");
    }
    for (const auto& chain : chains)
      if (!continuity_profile(family, chain, member, reg, config).certificate.holds())
        return hypothesis_fail("continuity hypothesis fails at horizon");
  }

  // Conclusion side: the same property for the semivariation(s).
  std::vector<SetFunction> semis;
  for (const auto& m : family.members()) semis.push_back(semivariation(m));
  SetFunctionFamily vfamily(std::move(semis), std::nullopt, std::nullopt);

  const Regulator conclusion_reg =
      property == InheritedProperty::SBounded ? reg : reg.scaled(k + Rational(1));
  Certificate cert;
  cert.regulator_used = conclusion_reg;
  if (property == InheritedProperty::SBounded) {
    for (const auto& seq : disjoint_seqs) {
      auto res = s_bounded_profile(vfamily, seq, member, conclusion_reg, config);
      if (!res.certificate.holds()) return res.certificate;
    }
  } else {
    for (const auto& chain : chains) {
      auto res = continuity_profile(vfamily, chain, member, conclusion_reg, config);
      if (!res.certificate.holds()) return res.certificate;
    }
  }
  cert.verdict = Verdict::HoldsAtHorizon;
  return cert;
}

Certificate uniformity_transfer_check(const SetFunctionFamily& family, const Chain& chain,
                                      SetMask w, const Regulator& reg,
                                      const std::vector<std::vector<SetMask>>& disjoint_seqs,
                                      const PhiConfig& config) {
  validate_chain(chain, family.algebra());
  require(family.algebra().contains(w), "SET-OUTSIDE-ALGEBRA", "W not a member set");
  for (std::size_t i = 0; i < chain.sets.size(); ++i)
    require(subset_of(w, chain.sets[i]), "W-NOT-CONTAINED",
            "W must be contained in every chain set; fails at step " + std::to_string(i + 1));

  auto hypothesis_fail = [&](const std::string& what, const std::optional<Witness>& inner) {
    Certificate cert;
    cert.verdict = Verdict::HypothesisNotMet;
    Witness wit = inner ? *inner : Witness{};
    wit.what = what + (inner ? (": " + inner->what) : "");
    cert.witness = std::move(wit);
    return cert;
  };

  for (const auto& seq : disjoint_seqs) {
    auto res = s_bounded_profile(family, seq, std::nullopt, reg, config);
    if (!res.certificate.holds())
      return hypothesis_fail("family is not uniformly (s)-bounded at horizon",
                             res.certificate.witness);
  }

  // Per-member profiles sup { m_j(A) : A subset of H_n \ W }.
  const LatticeValue zero = LatticeValue::zero_like(family.equibound());
  std::vector<std::vector<LatticeValue>> per_member(family.size());
  for (std::size_t j = 0; j < family.size(); ++j)
    for (SetMask h : chain.sets)
      per_member[j].push_back(semivariation_at(family.member(j), h & ~w));

  for (std::size_t j = 0; j < family.size(); ++j) {
    Certificate c = d_converges(per_member[j], zero, reg, config);
    if (!c.holds())
      return hypothesis_fail("member " + std::to_string(j + 1) + " profile does not decay",
                             c.witness);
  }

  std::vector<LatticeValue> uniform;
  for (std::size_t i = 0; i < chain.sets.size(); ++i) {
    LatticeValue v = zero;
    for (std::size_t j = 0; j < family.size(); ++j) v = v.join(per_member[j][i]);
    uniform.push_back(std::move(v));
  }
  Certificate cert = d_converges(uniform, zero, reg, config);
  if (!cert.holds() && cert.witness)
    cert.witness->what = "uniform profile fails to decay although every member profile does";
  return cert;
}

Certificate tau_continuity_check(const SetFunctionFamily& family, const Submeasure& eta,
                                 const Chain& chain, std::optional<std::size_t> member,
                                 const Regulator& reg,
                                 const std::vector<std::vector<SetMask>>& disjoint_seqs,
                                 const PhiConfig& config) {
  require(eta.algebra() == family.algebra(), "ALGEBRA-MISMATCH",
          "submeasure must live on the family's algebra");
  validate_chain(chain, family.algebra());
  require(eta.null_chain(chain.sets), "NOT-TAU-NULL",
          "chain is not null for the submeasure: eta(deepest) = " +
              eta.at(chain.sets.back()).str());

  // (s)-boundedness is part of the definition but kept as its own labeled
  // hypothesis so a failure is attributed unambiguously.
  for (const auto& seq : disjoint_seqs) {
    auto res = s_bounded_profile(family, seq, member, reg, config);
    if (!res.certificate.holds()) {
      Certificate cert;
      cert.verdict = Verdict::HypothesisNotMet;
      Witness w = res.certificate.witness ? *res.certificate.witness : Witness{};
      w.what = "(s)-boundedness hypothesis fails: " + w.what;
      cert.witness = std::move(w);
      return cert;
    }
  }

  const LatticeValue zero = LatticeValue::zero_like(family.equibound());
  std::vector<LatticeValue> values;
  for (SetMask h : chain.sets) {
    if (member) {
      values.push_back(family.member(*member).eval(h));
    } else {
      LatticeValue v = zero;
      for (const auto& m : family.members()) v = v.join(m.eval(h));
      values.push_back(std::move(v));
    }
  }
  return d_converges(values, zero, reg, config);
}

}  // namespace ktri
