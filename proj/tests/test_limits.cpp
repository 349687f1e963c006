#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ktri/corpus.hpp"
#include "ktri/error.hpp"
#include "ktri/harness.hpp"
#include "oracles.hpp"

using namespace ktri;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }
LatticeValue s(long num, long den = 1) { return LatticeValue::scalar(q(num, den)); }

const PhiConfig kPhi{.random_count = 40, .seed = 1};

std::vector<SetMask> singletons(int count) {
  std::vector<SetMask> out;
  for (int a = 1; a <= count; ++a) out.push_back(SetMask{1} << (a - 1));
  return out;
}

Chain tail_chain(int atoms, int depth, bool truncated) {
  Chain chain;
  const SetMask ground = FiniteAlgebra(atoms).ground();
  for (int n = 1; n <= depth; ++n)
    chain.sets.push_back(ground & ~((SetMask{1} << (n - 1)) - 1));
  if (!truncated) chain.sets.push_back(0);
  chain.truncated = truncated;
  return chain;
}

std::vector<LatticeValue> profile_values(const SetFunction& m, const std::vector<SetMask>& sets) {
  std::vector<LatticeValue> out;
  for (SetMask a : sets) out.push_back(m.eval(a));
  return out;
}

SetFunctionFamily scaled_measuroid_family(int atoms, int members) {
  std::vector<Rational> scales;
  for (int j = 1; j <= members; ++j) scales.push_back(q(1) + q(1, j));
  return gen_scaled_family(gen_measuroid(atoms), scales, q(1));
}

Regulator seq_regulator(const SetFunctionFamily& family, const std::vector<SetMask>& seq,
                        std::size_t size) {
  std::vector<std::vector<LatticeValue>> profiles;
  for (const auto& m : family.members()) profiles.push_back(profile_values(m, seq));
  return tail_sup_regulator(profiles, size);
}

Regulator chain_regulator(const SetFunctionFamily& family, const Chain& chain, std::size_t size) {
  std::vector<std::vector<LatticeValue>> profiles;
  for (const auto& m : family.members()) profiles.push_back(profile_values(m, chain.sets));
  return tail_sup_regulator(profiles, size);
}

SetFunctionFamily hump_family(int atoms) {
  return gen_hump_family(atoms, singletons(atoms));
}

}  // namespace

TEST_CASE("s-bounded profiles") {
  SUBCASE("summable additive weights vanish along their singletons") {
    const SetFunction m =
        make_series_setfunction({q(1, 2), q(1, 4), q(1, 8), q(1, 16)}, 4);
    SetFunctionFamily solo({m}, std::nullopt, std::nullopt);
    const auto seq = singletons(4);
    const Regulator reg = seq_regulator(solo, seq, 4);
    const auto res = s_bounded_profile(solo, seq, 0, reg, kPhi);
    CHECK(res.certificate.holds());
    for (int h = 0; h < 4; ++h) CHECK(res.profile.values[h] == s(1, 2L << h));
  }

  SUBCASE("the zero family is flat at zero") {
    const FiniteAlgebra algebra(4);
    SetFunction z = SetFunction::from_table(
        algebra, std::vector<LatticeValue>(algebra.set_count(), s(0)));
    SetFunctionFamily family({z, z}, std::nullopt, std::nullopt);
    const auto res =
        s_bounded_profile(family, singletons(4), std::nullopt, Regulator::zero(4, 4, s(0)), kPhi);
    CHECK(res.certificate.holds());
    for (const auto& v : res.profile.values) CHECK(v == s(0));
  }

  SUBCASE("the hump family is never uniformly small along its humps") {
    const auto family = hump_family(6);
    const auto res = s_bounded_profile(family, singletons(6), std::nullopt,
                                       *family.convergence_regulator(), kPhi);
    REQUIRE(res.certificate.verdict == Verdict::Violated);
    for (const auto& v : res.profile.values) CHECK(v == s(1));  // sup_j m_j(C_h) = 1
    // while each single member alone does decay everywhere but at its own hump
    const auto single = s_bounded_profile(family, singletons(6), 2,
                                          *family.convergence_regulator(), kPhi);
    CHECK(single.profile.values[2] == s(1));
  }

  CHECK_THROWS_AS(s_bounded_profile(hump_family(3), {1, 3}, std::nullopt,
                                    Regulator::zero(3, 3, s(0)), kPhi),
                  Error);  // overlapping sequence
}

TEST_CASE("continuity profiles") {
  SUBCASE("the running example vanishes along its tail chain") {
    SetFunctionFamily solo({gen_measuroid(6)}, std::nullopt, std::nullopt);
    const Chain chain = tail_chain(6, 6, false);
    const Regulator reg = chain_regulator(solo, chain, 7);
    const auto res = continuity_profile(solo, chain, 0, reg, kPhi);
    CHECK(res.certificate.holds());
    CHECK(res.profile.values.back() == s(0));
  }

  SUBCASE("chain of the empty set alone") {
    SetFunctionFamily solo({gen_measuroid(3)}, std::nullopt, std::nullopt);
    const Chain chain{{0}, false};
    const auto res = continuity_profile(solo, chain, 0, Regulator::zero(2, 2, s(0)), kPhi);
    CHECK(res.certificate.holds());
    CHECK(res.profile.values == std::vector<LatticeValue>{s(0)});
  }

  SUBCASE("uniform hump profile stays at one over a truncated chain") {
    const auto family = hump_family(6);
    const Chain chain = tail_chain(6, 6, true);
    const auto res = continuity_profile(family, chain, std::nullopt,
                                        *family.convergence_regulator(), kPhi);
    REQUIRE(res.certificate.verdict == Verdict::Violated);
    for (const auto& v : res.profile.values) CHECK(v == s(1));
  }

  SUBCASE("uniform chain values never increase") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<SetFunction> members;
      for (int j = 0; j < 3; ++j) members.push_back(gen_random_ksubadditive(5, q(1), q(2), gen()));
      SetFunctionFamily family(std::move(members), std::nullopt, std::nullopt);
      const Chain chain = tail_chain(5, 5, false);
      const auto res = continuity_profile(family, chain, std::nullopt,
                                          Regulator::constant_rows(
                                              OSequence{{family.equibound()}}, 1)
                                              .scaled(q(1)),
                                          kPhi);
      for (std::size_t i = 0; i + 1 < res.profile.values.size(); ++i)
        CHECK(leq(res.profile.values[i + 1], res.profile.values[i]));
    }
  }

  SUBCASE("an untruncated chain must reach the empty set") {
    SetFunctionFamily solo({gen_measuroid(4)}, std::nullopt, std::nullopt);
    Chain bad = tail_chain(4, 3, false);
    bad.truncated = false;
    bad.sets.pop_back();  // drop {}
    CHECK_THROWS_WITH_AS(
        continuity_profile(solo, bad, 0, Regulator::zero(2, 2, s(0)), kPhi),
        doctest::Contains("NONEMPTY-INTERSECTION"), Error);
  }
}

TEST_CASE("continuity forces s-boundedness only after the (k+1) rescale") {
  // Singleton values of the alternating series run ahead of its chain
  // tails by a factor strictly between 1 and 2.
  const SetFunction m = gen_measuroid(12);
  const int depth = 6;
  const Chain chain = tail_chain(12, depth, true);
  SetFunctionFamily solo({m}, std::nullopt, std::nullopt);
  const Regulator cont_reg = chain_regulator(solo, chain, depth);
  const auto seq = singletons(depth);

  const auto scaled_ok =
      sbounded_from_continuity_check(m, q(1), cont_reg, {chain}, {seq}, kPhi);  // factor k+1 = 2
  CHECK(scaled_ok.holds());

  const auto mis_scaled = sbounded_from_continuity_check(m, q(1), cont_reg, {chain}, {seq}, kPhi, q(1));
  REQUIRE(mis_scaled.verdict == Verdict::Violated);
  REQUIRE(mis_scaled.witness.has_value());

  SUBCASE("zero function holds trivially") {
    const FiniteAlgebra algebra(12);
    const SetFunction z = SetFunction::from_table(
        algebra, std::vector<LatticeValue>(algebra.set_count(), s(0)));
    CHECK(sbounded_from_continuity_check(z, q(1), cont_reg, {chain}, {seq}, kPhi).holds());
  }

  SUBCASE("an additive measure holds even unscaled") {
    const SetFunction add = make_series_setfunction(
        {q(1, 2), q(1, 4), q(1, 8), q(1, 16), q(1, 32), q(1, 64)}, 6);
    SetFunctionFamily asolo({add}, std::nullopt, std::nullopt);
    const Chain achain = tail_chain(6, 6, false);
    const Regulator areg = chain_regulator(asolo, achain, 6);
    CHECK(sbounded_from_continuity_check(add, q(1), areg, {achain}, {singletons(6)}, kPhi, q(1)).holds());
  }
}

TEST_CASE("the semivariation inherits both properties") {
  const SetFunction m = gen_measuroid(5);
  SetFunctionFamily solo({m}, std::nullopt, std::nullopt);
  const Chain chain = tail_chain(5, 5, false);
  const auto seq = singletons(5);
  const Regulator cont_reg = chain_regulator(solo, chain, 6);
  const Regulator sb_reg = seq_regulator(solo, seq, 6);

  SUBCASE("continuity with the (k+1)-scaled conclusion regulator") {
    CHECK(semivariation_inheritance_check(solo, InheritedProperty::Continuous, 0, q(1), cont_reg,
                                          {}, {chain}, kPhi)
              .holds());
  }

  SUBCASE("s-boundedness with the identity regulator") {
    CHECK(semivariation_inheritance_check(solo, InheritedProperty::SBounded, 0, q(1), sb_reg,
                                          {seq}, {}, kPhi)
              .holds());
  }

  SUBCASE("random subadditive functions: s-boundedness for the raw family, continuity for the"
          " 1-triangular envelopes") {
    std::mt19937_64 gen(9);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<SetFunction> members, envelopes;
      for (int j = 0; j < 3; ++j) {
        members.push_back(gen_random_ksubadditive(6, q(1), q(2), gen()));
        envelopes.push_back(semivariation(members.back()));
      }
      SetFunctionFamily family(std::move(members), std::nullopt, std::nullopt);
      const auto fseq = singletons(6);
      const Regulator freg = seq_regulator(family, fseq, 6);
      CHECK(semivariation_inheritance_check(family, InheritedProperty::SBounded, std::nullopt,
                                            q(1), freg, {fseq}, {}, kPhi)
                .holds());
      // Continuity needs k-triangular members; the envelopes are.
      SetFunctionFamily vfamily(std::move(envelopes), std::nullopt, std::nullopt);
      const Chain fchain = tail_chain(6, 6, false);
      std::vector<std::vector<LatticeValue>> vprofiles;
      for (const auto& mem : vfamily.members())
        vprofiles.push_back(profile_values(mem, fchain.sets));
      const Regulator vreg = tail_sup_regulator(vprofiles, 6);
      CHECK(semivariation_inheritance_check(vfamily, InheritedProperty::Continuous, std::nullopt,
                                            q(1), vreg, {}, {fchain}, kPhi)
                .holds());
    }
  }

  SUBCASE("a failing hypothesis is reported as such") {
    const auto family = hump_family(5);
    const auto cert = semivariation_inheritance_check(
        family, InheritedProperty::SBounded, std::nullopt, q(1),
        *family.convergence_regulator(), {singletons(5)}, {}, kPhi);
    CHECK(cert.verdict == Verdict::HypothesisNotMet);
  }
}

TEST_CASE("per-member decay transfers to the family join") {
  SUBCASE("scaled copies with W = {}") {
    const auto family = scaled_measuroid_family(4, 6);
    const Chain chain = tail_chain(4, 4, false);
    // One regulator must carry both the uniform s-boundedness precondition
    // and the per-member subset-sup decay: join the two tail-sup builds.
    std::vector<std::vector<LatticeValue>> vprofiles;
    for (const auto& mem : family.members())
      vprofiles.push_back(profile_values(semivariation(mem), chain.sets));
    const Regulator vreg =
        tail_sup_regulator(vprofiles, 6).joined(seq_regulator(family, singletons(4), 6));
    const auto cert =
        uniformity_transfer_check(family, chain, 0, vreg, {singletons(4)}, kPhi);
    CHECK(cert.holds());
  }

  SUBCASE("chain pinned at W gives all-zero profiles") {
    const auto family = scaled_measuroid_family(4, 4);
    const SetMask w = parse_set("{1,2}", family.algebra());
    const Chain chain{{w}, true};
    const auto cert = uniformity_transfer_check(family, chain, w,
                                                Regulator::zero(4, 4, s(0)), {}, kPhi);
    CHECK(cert.holds());
  }

  SUBCASE("the hump family fails the precondition, not the conclusion") {
    const auto family = hump_family(5);
    const Chain chain = tail_chain(5, 5, true);
    const auto cert = uniformity_transfer_check(family, chain, 0,
                                                *family.convergence_regulator(),
                                                {singletons(5)}, kPhi);
    CHECK(cert.verdict == Verdict::HypothesisNotMet);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->what.find("uniformly") != std::string::npos);
  }

  CHECK_THROWS_AS(uniformity_transfer_check(scaled_measuroid_family(3, 3),
                                            Chain{{3, 1}, true}, 4,
                                            Regulator::zero(3, 3, s(0)), {}, kPhi),
                  Error);  // W outside the chain
}

TEST_CASE("continuity along submeasure-null chains") {
  const SetFunction m = gen_measuroid(5);
  SetFunctionFamily solo({m}, std::nullopt, std::nullopt);
  const auto seq = singletons(5);

  SUBCASE("eta = v(m) reproduces plain continuity") {
    const Submeasure eta(semivariation(m));
    const Chain chain = tail_chain(5, 5, false);
    const Regulator reg = chain_regulator(solo, chain, 6);
    const Regulator sreg = seq_regulator(solo, seq, 6).joined(reg);
    CHECK(eta.null_chain(chain.sets));
    CHECK(tau_continuity_check(solo, eta, chain, 0, sreg, {seq}, kPhi).holds());
  }

  SUBCASE("the zero submeasure makes every chain null") {
    const FiniteAlgebra algebra(5);
    const Submeasure eta(SetFunction::from_table(
        algebra, std::vector<LatticeValue>(algebra.set_count(), s(0))));
    const Chain chain{{algebra.ground(), parse_set("{4,5}", algebra)}, true};
    CHECK(eta.null_chain(chain.sets));
    const FiniteAlgebra za(5);
    const SetFunction z = SetFunction::from_table(
        za, std::vector<LatticeValue>(za.set_count(), s(0)));
    SetFunctionFamily zf({z}, std::nullopt, std::nullopt);
    CHECK(tau_continuity_check(zf, eta, chain, 0, Regulator::zero(3, 3, s(0)), {seq}, kPhi)
              .holds());
  }

  SUBCASE("a chain that is not null is rejected") {
    const Submeasure eta(semivariation(m));
    const Chain chain = tail_chain(5, 3, true);  // deepest set {3,4,5}, eta > 0
    CHECK_THROWS_WITH_AS(
        tau_continuity_check(solo, eta, chain, 0, Regulator::zero(3, 3, s(0)), {seq}, kPhi),
        doctest::Contains("NOT-TAU-NULL"), Error);
  }

  SUBCASE("submeasure construction enforces its three laws") {
    CHECK_THROWS_AS(Submeasure(gen_measuroid(3)), Error);  // not monotone
    const FiniteAlgebra a2(2);
    CHECK_THROWS_AS(Submeasure(SetFunction::from_table(a2, {s(0), s(0), s(0), s(1)})),
                    Error);  // not subadditive
    CHECK_NOTHROW(Submeasure(semivariation(gen_measuroid(4))));
  }
}

TEST_CASE("whole-ground gap table") {
  SUBCASE("scaled family gaps are (10/9)/j with witness {1,3}") {
    const auto family = scaled_measuroid_family(3, 12);
    const auto rows = schur_gap(family, 3);
    REQUIRE(rows.size() == 12);
    for (std::size_t j = 1; j <= rows.size(); ++j) {
      CHECK(rows[j - 1].gap == s(10, 9).scaled(q(1, static_cast<long>(j))));
      REQUIRE(rows[j - 1].witness.has_value());
      CHECK(*rows[j - 1].witness == parse_set("{1,3}", family.algebra()));
    }
  }

  SUBCASE("gap dominates every spot deviation, with equality at the witness") {
    const auto family = scaled_measuroid_family(3, 6);
    const auto rows = schur_gap(family, 3);
    const auto& limit = *family.declared_limit();
    for (std::size_t j = 0; j < rows.size(); ++j) {
      for (SetMask e = 0; e < 8; ++e)
        CHECK(leq((family.member(j).eval(e) - limit.eval(e)).abs(), rows[j].gap));
      CHECK((family.member(j).eval(*rows[j].witness) - limit.eval(*rows[j].witness)).abs() ==
            rows[j].gap);
    }
  }

  SUBCASE("a constant family has zero gaps") {
    const auto family = gen_scaled_family(gen_measuroid(3), {q(1), q(1), q(1)}, q(1));
    for (const auto& row : schur_gap(family, 3)) CHECK(row.gap == s(0));
  }

  SUBCASE("humps against the zero limit have gap one") {
    const auto family = hump_family(4);
    for (const auto& row : schur_gap(family, 4)) CHECK(row.gap == s(1));
  }

  CHECK_THROWS_AS(schur_gap(scaled_measuroid_family(3, 3), 4), Error);
  CHECK_THROWS_AS(
      schur_gap(SetFunctionFamily({gen_measuroid(3)}, std::nullopt, std::nullopt), 3), Error);
}

TEST_CASE("the uniform join over a finite family is an exact max") {
  const auto family = scaled_measuroid_family(4, 8);
  const auto seq = singletons(4);
  const auto res = s_bounded_profile(family, seq, std::nullopt,
                                     seq_regulator(family, seq, 8), kPhi);
  for (std::size_t h = 0; h < seq.size(); ++h) {
    LatticeValue mx = family.member(0).eval(seq[h]);
    for (std::size_t j = 1; j < family.size(); ++j)
      mx = mx.join(family.member(j).eval(seq[h]));
    CHECK(res.profile.values[h] == mx);
  }
}

namespace {

HarnessFixtures conforming_fixtures(const SetFunctionFamily& family, int atoms) {
  HarnessFixtures fx;
  fx.k = q(1);
  fx.phi = kPhi;
  fx.disjoint_seqs = {singletons(atoms)};
  fx.chains = {tail_chain(atoms, atoms, false)};
  const std::size_t size = family.convergence_regulator()->row_count();
  fx.sbound_reg = seq_regulator(family, fx.disjoint_seqs[0], size);
  fx.continuity_reg = chain_regulator(family, fx.chains[0], size);
  fx.eta = Submeasure(semivariation(*family.declared_limit()));
  return fx;
}

}  // namespace

TEST_CASE("theorem harnesses are consistent on conforming families") {
  const auto scaled = scaled_measuroid_family(3, 10);
  const auto constant = gen_scaled_family(gen_measuroid(3), std::vector<Rational>(8, q(1)), q(1));
  const auto additive = gen_scaled_family(
      make_series_setfunction({q(1, 2), q(1, 3), q(1, 4)}, 3), std::vector<Rational>(6, q(1)),
      q(1));

  for (const auto* family : {&scaled, &constant, &additive}) {
    const auto fx = conforming_fixtures(*family, 3);
    for (TheoremId id : {TheoremId::BJ, TheoremId::N, TheoremId::VHS, TheoremId::S}) {
      const auto report = theorem_harness(*family, id, fx);
      INFO(theorem_name(id), " verdict: ", report.verdict);
      CHECK(report.consistent());
    }
  }
}

TEST_CASE("theorem harnesses name the failing hump hypothesis") {
  const auto family = hump_family(6);
  HarnessFixtures fx;
  fx.k = q(1);
  fx.phi = kPhi;
  fx.disjoint_seqs = {singletons(6)};
  fx.chains = {tail_chain(6, 6, true)};
  fx.sbound_reg = *family.convergence_regulator();
  fx.continuity_reg = *family.convergence_regulator();
  const SetMask head = parse_set("{1,2,3}", family.algebra());
  std::vector<LatticeValue> eta_table;
  for (SetMask a = 0; a < family.algebra().set_count(); ++a)
    eta_table.push_back(s(popcount(a & head), 3));
  fx.eta = Submeasure(SetFunction::from_table(family.algebra(), std::move(eta_table)));

  for (TheoremId id : {TheoremId::BJ, TheoremId::N, TheoremId::VHS, TheoremId::S}) {
    const auto report = theorem_harness(family, id, fx);
    CHECK(report.verdict == "HYPOTHESIS-NOT-MET");
    bool some_named = false;
    for (const auto& h : report.hypotheses)
      if (!h.met && h.witness) some_named = true;
    CHECK(some_named);
  }
}

TEST_CASE("the schur harness pins the gap decay against its assembled regulator") {
  const auto family = scaled_measuroid_family(3, 10);
  auto fx = conforming_fixtures(family, 3);
  const auto report = theorem_harness(family, TheoremId::S, fx);
  REQUIRE(report.consistent());
  REQUIRE(report.gaps.size() == 10);
  for (std::size_t j = 1; j <= 10; ++j)
    CHECK(report.gaps[j - 1].gap == s(10, 9).scaled(q(1, static_cast<long>(j))));
}
