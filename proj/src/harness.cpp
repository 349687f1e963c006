#include "ktri/harness.hpp"

#include "ktri/convergence.hpp"
#include "ktri/error.hpp"

namespace ktri {

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::BJ: return "BJ";
    case TheoremId::N: return "N";
    case TheoremId::VHS: return "VHS";
    case TheoremId::S: return "S";
  }
  return "?";
}

TheoremId parse_theorem(const std::string& name) {
  if (name == "BJ" || name == "bj") return TheoremId::BJ;
  if (name == "N" || name == "n") return TheoremId::N;
  if (name == "VHS" || name == "vhs") return TheoremId::VHS;
  if (name == "S" || name == "s") return TheoremId::S;
  fail("BAD-THEOREM", "unknown theorem '" + name + "' (expected BJ, N, VHS or S)");
}

namespace {

struct HarnessContext {
  const SetFunctionFamily& family;
  const HarnessFixtures& fx;
  HarnessReport report;
  LatticeValue zero;

  explicit HarnessContext(const SetFunctionFamily& f, const HarnessFixtures& fixtures)
      : family(f), fx(fixtures), zero(LatticeValue::zero_like(f.equibound())) {}

  void hypothesis(const std::string& name, bool met, std::optional<Witness> witness,
                  std::string detail = {}) {
    report.hypotheses.push_back({name, met, std::move(witness), std::move(detail)});
  }

  void conclusion(const std::string& name, const Certificate& cert, std::string reg_desc) {
    report.conclusions.push_back({name, cert.verdict, cert.witness, std::move(reg_desc)});
  }

  bool all_hypotheses_met() const {
    for (const auto& h : report.hypotheses)
      if (!h.met) return false;
    return true;
  }
};

std::vector<Chain> canonical_tail_chains(const FiniteAlgebra& algebra) {
  // {1..N} > {2..N} > ... > {N} > {}
  std::vector<SetMask> sets;
  for (int i = 1; i <= algebra.atoms(); ++i)
    sets.push_back(algebra.ground() & ~((SetMask{1} << (i - 1)) - 1));
  sets.push_back(0);
  return {Chain{std::move(sets), false}};
}

void check_k_triangularity_hypothesis(HarnessContext& ctx, const Rational& k) {
  for (std::size_t j = 0; j < ctx.family.size(); ++j) {
    const auto report = check_k_triangular(ctx.family.member(j), k);
    if (!report.k_triangular()) {
      Witness w;
      w.what = "member " + std::to_string(j + 1) + " violates k-triangularity at k=" + k.str();
      w.indices = {static_cast<long>(j + 1)};
      if (!report.subadditivity_violations.empty())
        w.set_mask = report.subadditivity_violations[0].first;
      else if (!report.lower_violations.empty())
        w.set_mask = report.lower_violations[0].first;
      ctx.hypothesis("k-triangularity of every member", false, std::move(w));
      return;
    }
  }
  ctx.hypothesis("k-triangularity of every member", true, std::nullopt, "k=" + k.str());
}

void check_per_member_sboundedness(HarnessContext& ctx, const Regulator& reg) {
  for (std::size_t j = 0; j < ctx.family.size(); ++j) {
    for (const auto& seq : ctx.fx.disjoint_seqs) {
      auto res = s_bounded_profile(ctx.family, seq, j, reg, ctx.fx.phi);
      if (!res.certificate.holds()) {
        Witness w = res.certificate.witness ? *res.certificate.witness : Witness{};
        w.what = "member " + std::to_string(j + 1) + " not (s)-bounded at horizon: " + w.what;
        w.indices.insert(w.indices.begin(), static_cast<long>(j + 1));
        ctx.hypothesis("per-member (s)-boundedness", false, std::move(w));
        return;
      }
    }
  }
  ctx.hypothesis("per-member (s)-boundedness", true, std::nullopt,
                 std::to_string(ctx.fx.disjoint_seqs.size()) + " disjoint sequence(s)");
}

void check_per_member_continuity(HarnessContext& ctx, const Regulator& reg,
                                 const std::vector<Chain>& chains, const char* label) {
  for (std::size_t j = 0; j < ctx.family.size(); ++j) {
    for (const auto& chain : chains) {
      auto res = continuity_profile(ctx.family, chain, j, reg, ctx.fx.phi);
      if (!res.certificate.holds()) {
        Witness w = res.certificate.witness ? *res.certificate.witness : Witness{};
        w.what = "member " + std::to_string(j + 1) + " fails: " + w.what;
        w.indices.insert(w.indices.begin(), static_cast<long>(j + 1));
        ctx.hypothesis(label, false, std::move(w));
        return;
      }
    }
  }
  ctx.hypothesis(label, true, std::nullopt, std::to_string(chains.size()) + " chain(s)");
}

void check_pointwise_convergence(HarnessContext& ctx) {
  auto cert = ctx.family.pointwise_convergence(ctx.fx.phi);
  ctx.hypothesis("pointwise (D)-convergence to the declared limit", cert.holds(), cert.witness);
}

Certificate limit_sbounded(const HarnessContext& ctx, const SetFunction& limit,
                           const Regulator& reg) {
  SetFunctionFamily solo({limit}, std::nullopt, std::nullopt);
  Certificate last;
  last.verdict = Verdict::HoldsAtHorizon;
  for (const auto& seq : ctx.fx.disjoint_seqs) {
    last = s_bounded_profile(solo, seq, 0, reg, ctx.fx.phi).certificate;
    if (!last.holds()) return last;
  }
  return last;
}

Certificate limit_chain_decay(const HarnessContext& ctx, const SetFunction& limit,
                              const Regulator& reg, const std::vector<Chain>& chains) {
  SetFunctionFamily solo({limit}, std::nullopt, std::nullopt);
  Certificate last;
  last.verdict = Verdict::HoldsAtHorizon;
  for (const auto& chain : chains) {
    last = continuity_profile(solo, chain, 0, reg, ctx.fx.phi).certificate;
    if (!last.holds()) return last;
  }
  return last;
}

}  // namespace

HarnessReport theorem_harness(const SetFunctionFamily& family, TheoremId theorem,
                              const HarnessFixtures& fixtures) {
  HarnessContext ctx(family, fixtures);
  ctx.report.theorem = theorem;
  ctx.report.equibound = family.equibound().str();
  const Rational& k = fixtures.k;

  require(family.declared_limit().has_value(), "NO-DECLARED-LIMIT",
          "theorem harnesses need a declared pointwise limit");
  require(family.convergence_regulator().has_value(), "NO-REGULATOR",
          "theorem harnesses need the family's convergence regulator");
  const Regulator& b = *family.convergence_regulator();

  // Chains: theorem S defaults to the canonical tail chains of its ground set.
  std::vector<Chain> chains = fixtures.chains;
  if (chains.empty() && theorem == TheoremId::S) chains = canonical_tail_chains(family.algebra());
  if (theorem != TheoremId::BJ)
    require(!chains.empty(), "NO-CHAINS", "this theorem needs decreasing-chain fixtures");
  if (theorem == TheoremId::BJ)
    require(!fixtures.disjoint_seqs.empty(), "NO-DISJOINT-SEQS",
            "BJ needs disjoint-sequence fixtures");

  // Property regulators. When only the continuity regulator is given, the
  // per-member s-boundedness regulator is the (k+1)-scaled continuity one.
  std::optional<Regulator> a_cont = fixtures.continuity_reg;
  if (theorem != TheoremId::BJ)
    require(a_cont.has_value(), "NO-REGULATOR", "this theorem needs a continuity regulator");
  std::optional<Regulator> a_sb = fixtures.sbound_reg;
  std::string a_sb_desc = "supplied (s)-boundedness regulator";
  if (!a_sb && a_cont) {
    a_sb = a_cont->scaled(k + Rational(1));
    a_sb_desc = "(k+1)-scaled continuity regulator";
  }
  require(a_sb.has_value(), "NO-REGULATOR",
          "need an (s)-boundedness or continuity regulator fixture");
  require(a_sb->same_shape(b) && (!a_cont || a_cont->same_shape(b)), "REGULATOR-SHAPE",
          "fixture regulators must share one truncation shape");
  if (theorem == TheoremId::VHS) {
    require(fixtures.eta.has_value(), "NO-SUBMEASURE", "VHS needs a generating submeasure");
    for (const auto& chain : chains)
      require(fixtures.eta->null_chain(chain.sets), "NOT-TAU-NULL",
              "VHS chain fixtures must be null for the submeasure");
  }

  // --- Hypotheses ---------------------------------------------------------
  ctx.hypothesis("equiboundedness", true, std::nullopt, "u = " + family.equibound().str());
  check_k_triangularity_hypothesis(ctx, k);
  switch (theorem) {
    case TheoremId::BJ:
      check_per_member_sboundedness(ctx, *a_sb);
      break;
    case TheoremId::N:
    case TheoremId::S:
      check_per_member_continuity(ctx, *a_cont, chains, "per-member continuity from above at {}");
      break;
    case TheoremId::VHS:
      if (!fixtures.disjoint_seqs.empty()) check_per_member_sboundedness(ctx, *a_sb);
      check_per_member_continuity(ctx, *a_cont, chains, "per-member tau-continuity");
      break;
  }
  check_pointwise_convergence(ctx);

  if (!ctx.all_hypotheses_met()) {
    ctx.report.verdict = "HYPOTHESIS-NOT-MET";
    return ctx.report;
  }

  // --- Conclusions --------------------------------------------------------
  const LatticeValue& u = family.equibound();
  const Regulator fremlin_a =
      fremlin_combine(std::vector<Regulator>(family.size(), *a_sb), u);
  const Rational uniform_scale = (k + Rational(2)) * (k + Rational(2)) * Rational(2);
  const Regulator c_uniform = fremlin_a.added(b).scaled(uniform_scale);
  const std::string c_desc = "2(k+2)^2 (fremlin(" + a_sb_desc + ", u) + b)";
  const SetFunction& limit = *family.declared_limit();

  if (!fixtures.disjoint_seqs.empty()) {
    Certificate worst;
    worst.verdict = Verdict::HoldsAtHorizon;
    for (const auto& seq : fixtures.disjoint_seqs) {
      worst = s_bounded_profile(family, seq, std::nullopt, c_uniform, fixtures.phi).certificate;
      if (!worst.holds()) break;
    }
    ctx.conclusion("uniform (s)-boundedness", worst, c_desc);
    ctx.conclusion("limit function is (s)-bounded", limit_sbounded(ctx, limit, c_uniform.added(b)),
                   c_desc + " + b");
  }

  {
    const auto limit_report = check_k_triangular(limit, k);
    Certificate cert;
    cert.verdict = limit_report.k_triangular() ? Verdict::HoldsAtHorizon : Verdict::Violated;
    if (!limit_report.k_triangular()) {
      Witness w;
      w.what = "declared limit violates k-triangularity";
      if (!limit_report.subadditivity_violations.empty())
        w.set_mask = limit_report.subadditivity_violations[0].first;
      else if (!limit_report.lower_violations.empty())
        w.set_mask = limit_report.lower_violations[0].first;
      cert.witness = std::move(w);
    }
    ctx.conclusion("limit function is k-triangular", cert, "exhaustive pair sweep");
  }

  if (theorem != TheoremId::BJ) {
    const Regulator d_uniform = a_cont->scaled(k + Rational(1)).joined(c_uniform);
    const std::string d_desc = "(k+1) a_cont v " + c_desc;
    const char* concl_name = theorem == TheoremId::VHS ? "uniform tau-continuity"
                                                       : "uniform continuity from above at {}";
    Certificate worst;
    worst.verdict = Verdict::HoldsAtHorizon;
    for (const auto& chain : chains) {
      if (theorem == TheoremId::VHS) {
        // Def-style quantity: the join of the member values themselves.
        std::vector<LatticeValue> values;
        for (SetMask h : chain.sets) {
          LatticeValue v = ctx.zero;
          for (const auto& m : family.members()) v = v.join(m.eval(h));
          values.push_back(std::move(v));
        }
        worst = d_converges(values, ctx.zero, d_uniform, fixtures.phi);
      } else {
        worst = continuity_profile(family, chain, std::nullopt, d_uniform, fixtures.phi).certificate;
      }
      if (!worst.holds()) break;
    }
    ctx.conclusion(concl_name, worst, d_desc);

    const char* limit_name = theorem == TheoremId::VHS
                                 ? "limit function is tau-continuous"
                                 : "limit function is continuous from above at {}";
    ctx.conclusion(limit_name, limit_chain_decay(ctx, limit, d_uniform.added(b), chains),
                   d_desc + " + b");

    if (theorem == TheoremId::S) {
      ctx.report.gaps = schur_gap(family, family.algebra().atoms());
      std::vector<LatticeValue> gap_values;
      for (const auto& row : ctx.report.gaps) gap_values.push_back(row.gap);
      const Regulator gap_reg = d_uniform.added(b).added(b).scaled(Rational(2) * k + Rational(2));
      Certificate cert = d_converges(gap_values, ctx.zero, gap_reg, fixtures.phi);
      ctx.conclusion("whole-ground gap sup vanishes", cert, "(2k+2)(" + d_desc + " + b + b)");
    }
  }

  bool violated = false;
  for (const auto& c : ctx.report.conclusions)
    if (c.verdict != Verdict::HoldsAtHorizon) violated = true;
  ctx.report.verdict = violated ? "VIOLATION" : "CONSISTENT";
  return ctx.report;
}

}  // namespace ktri
