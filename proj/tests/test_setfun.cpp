#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ktri/corpus.hpp"
#include "ktri/error.hpp"
#include "oracles.hpp"

using namespace ktri;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }
LatticeValue s(long num, long den = 1) { return LatticeValue::scalar(q(num, den)); }

SetFunction zero_function(int atoms) {
  const FiniteAlgebra algebra(atoms);
  return SetFunction::from_table(algebra,
                                 std::vector<LatticeValue>(algebra.set_count(), s(0)));
}

SetFunction additive_abs(const std::vector<Rational>& weights) {
  return make_series_setfunction(weights, static_cast<int>(weights.size()));
}

}  // namespace

TEST_CASE("the running example takes its stated values") {
  const SetFunction m = gen_measuroid(3);
  CHECK(m.eval(parse_set("{1,3}", m.algebra())) == s(10, 9));
  CHECK(m.eval(parse_set("{1,2,3}", m.algebra())) == s(31, 36));
  CHECK(m.eval(0) == s(0));
  CHECK(m.eval(parse_set("{1}", m.algebra())) == s(1));
  CHECK(m.bound() == s(10, 9));  // positive part 1/4 vs negative part 1+1/9
}

TEST_CASE("set function construction rules") {
  const FiniteAlgebra a2(2);
  CHECK_THROWS_AS(SetFunction::from_table(a2, {s(1), s(0), s(0), s(0)}), Error);   // m({}) != 0
  CHECK_THROWS_AS(SetFunction::from_table(a2, {s(0), s(-1), s(0), s(0)}), Error);  // negative
  CHECK_THROWS_AS(SetFunction::from_table(a2, {s(0), s(1)}), Error);               // short table
  const SetFunction m = SetFunction::from_table(a2, {s(0), s(1), s(2), s(2)});
  CHECK(m.bound() == s(2));
  CHECK(m.scaled(q(1, 2)).eval(2) == s(1));
}

TEST_CASE("exhaustive triangularity checking") {
  SUBCASE("an absolute additive measure is 1-triangular on five atoms") {
    const SetFunction m = additive_abs({q(1, 2), q(1, 3), q(1, 5), q(1, 7), q(1, 11)});
    const auto report = check_k_triangular(m, q(1));
    CHECK(report.k_triangular());
    CHECK(report.pairs_checked == 243);  // 3^5 ordered disjoint pairs
  }

  SUBCASE("the zero function passes any k") {
    for (long k : {0L, 1L, 5L}) CHECK(check_k_triangular(zero_function(4), q(k)).k_triangular());
  }

  SUBCASE("k = 0 fails for the running example") {
    const SetFunction m = gen_measuroid(3);
    const auto report = check_k_triangular(m, q(0));
    CHECK(!report.k_triangular());
    CHECK(report.subadditivity_violation_count + report.lower_violation_count ==
          oracle::triangularity_violations_scan(m, q(0)));
  }

  SUBCASE("the example is 1-triangular out to eight atoms") {
    CHECK(check_k_triangular(gen_measuroid(8), q(1)).k_triangular());
  }

  SUBCASE("violation counts agree with the plain scan on random tables") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<LatticeValue> table{s(0)};
      for (int i = 1; i < 16; ++i) table.push_back(s(static_cast<long>(gen() % 6), 3));
      const SetFunction m = SetFunction::from_table(FiniteAlgebra(4), std::move(table));
      const Rational k(static_cast<long>(gen() % 3), 2);
      const auto report = check_k_triangular(m, k);
      CHECK(report.subadditivity_violation_count + report.lower_violation_count ==
            oracle::triangularity_violations_scan(m, k));
    }
  }
}

TEST_CASE("minimal k") {
  SUBCASE("additive measures sit exactly at k = 1") {
    const SetFunction m = additive_abs({q(1, 2), q(1, 3), q(1, 4)});
    const auto mk = minimal_k(m);
    REQUIRE(mk.has_value());
    CHECK(*mk == q(1));
  }

  SUBCASE("zero function needs no k at all") {
    const auto mk = minimal_k(zero_function(3));
    REQUIRE(mk.has_value());
    CHECK(*mk == q(0));
  }

  SUBCASE("the running example on three atoms, against the ratio scan") {
    const SetFunction m = gen_measuroid(3);
    const auto mk = minimal_k(m);
    REQUIRE(mk.has_value());
    CHECK(*mk == *oracle::minimal_k_scan(m));
    CHECK(leq(LatticeValue::scalar(*mk), s(1)));
    CHECK(check_k_triangular(m, *mk).k_triangular());
  }

  SUBCASE("no finite k exists when a null set grows the union") {
    const SetFunction m =
        SetFunction::from_table(FiniteAlgebra(2), {s(0), s(0), s(1), s(2)});
    CHECK(!minimal_k(m).has_value());
    CHECK(!oracle::minimal_k_scan(m).has_value());
  }

  SUBCASE("bisection brackets the reported minimum") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 8; ++trial) {
      const SetFunction m = gen_random_ksubadditive(5, q(2), q(3), gen());
      const auto mk = minimal_k(m);
      REQUIRE(mk.has_value());
      CHECK(check_k_triangular(m, *mk).k_triangular());
      if (!mk->is_zero()) {
        const Rational just_below = *mk * q((1 << 20) - 1, 1 << 20);
        CHECK(!check_k_triangular(m, just_below).k_triangular());
        Rational lo(0), hi = *mk + q(1);
        for (int step = 0; step < 40; ++step) {
          const Rational mid = (lo + hi) * q(1, 2);
          if (check_k_triangular(m, mid).k_triangular()) hi = mid;
          else lo = mid;
        }
        CHECK(lo < *mk);
        CHECK(*mk <= hi);
      }
    }
  }

  SUBCASE("vector carriers are rejected") {
    const FiniteAlgebra a1(1);
    const auto v0 = LatticeValue::vector({q(0), q(0)});
    const auto v1 = LatticeValue::vector({q(1), q(2)});
    const SetFunction m = SetFunction::from_table(a1, {v0, v1});
    CHECK_THROWS_AS(minimal_k(m), Error);
  }
}

TEST_CASE("semivariation") {
  const SetFunction m = gen_measuroid(3);

  SUBCASE("all eight subset values of the running example") {
    const auto values = m.materialize();
    const std::vector<Rational> expect{q(0),    q(1),     q(1, 4), q(3, 4),
                                       q(1, 9), q(10, 9), q(5, 36), q(31, 36)};
    for (SetMask a = 0; a < 8; ++a) CHECK(values[a] == LatticeValue::scalar(expect[a]));
    CHECK(semivariation_at(m, 7) == s(10, 9));  // attained at {1,3}
  }

  SUBCASE("matches the plain sweep everywhere, including random functions") {
    const SetFunction v = semivariation(m);
    for (SetMask a = 0; a < 8; ++a) CHECK(v.eval(a) == oracle::semivariation_sweep(m, a));

    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 10; ++trial) {
      const SetFunction r = gen_random_ksubadditive(5, q(1), q(2), gen());
      const SetFunction vr = semivariation(r);
      for (SetMask a = 0; a < r.algebra().set_count(); ++a)
        CHECK(vr.eval(a) == oracle::semivariation_sweep(r, a));
    }
  }

  SUBCASE("monotone, zero at the empty set, idempotent") {
    const SetFunction v = semivariation(m);
    CHECK(v.eval(0) == s(0));
    CHECK(is_monotone(v).holds());
    const SetFunction vv = semivariation(v);
    for (SetMask a = 0; a < 8; ++a) CHECK(vv.eval(a) == v.eval(a));
  }

  SUBCASE("a monotone function is its own semivariation") {
    const SetFunction mono = additive_abs({q(1, 2), q(1, 3), q(1, 5)});
    const SetFunction v = semivariation(mono);
    for (SetMask a = 0; a < 8; ++a) CHECK(v.eval(a) == mono.eval(a));
  }
}

TEST_CASE("finite chain inequalities") {
  const SetFunction m = gen_measuroid(3);
  const std::vector<SetMask> parts{1, 2, 4};  // {1}, {2}, {3}

  SUBCASE("the running example: 23/36 <= 31/36 <= 49/36") {
    CHECK(m.eval(1) - (m.eval(2) + m.eval(4)) == s(1) - s(13, 36));
    CHECK(finite_chain_check(m, parts, q(1)).holds());
  }

  SUBCASE("zero function holds with all sides zero") {
    CHECK(finite_chain_check(zero_function(3), parts, q(1)).holds());
  }

  SUBCASE("additive measures make the upper bound tight") {
    const SetFunction add = additive_abs({q(1, 2), q(1, 3), q(1, 4)});
    CHECK(finite_chain_check(add, parts, q(1)).holds());
    CHECK(add.eval(7) == add.eval(1) + add.eval(2) + add.eval(4));
  }

  SUBCASE("violations carry a witness") {
    const SetFunction bad =
        SetFunction::from_table(FiniteAlgebra(2), {s(0), s(1, 8), s(1, 8), s(1)});
    const auto cert = finite_chain_check(bad, {1, 2}, q(1));
    REQUIRE(cert.verdict == Verdict::Violated);
    CHECK(cert.witness.has_value());
  }

  CHECK_THROWS_AS(finite_chain_check(m, {3, 2}, q(1)), Error);  // overlap
  CHECK_THROWS_AS(finite_chain_check(m, {1}, q(1)), Error);     // too few
}

TEST_CASE("monotonicity checking") {
  SUBCASE("the running example reports the extreme witness pair") {
    const auto cert = is_monotone(gen_measuroid(3));
    REQUIRE(cert.verdict == Verdict::Violated);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->indices == std::vector<long>{5, 7});  // {1,3} inside {1,2,3}
    CHECK(*cert.witness->value == s(10, 9));
  }

  SUBCASE("zero and semivariation outputs are monotone") {
    CHECK(is_monotone(zero_function(4)).holds());
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 5; ++trial)
      CHECK(is_monotone(semivariation(gen_random_ksubadditive(5, q(1), q(1), gen()))).holds());
  }

  SUBCASE("at eight atoms the extreme pair moves to the odd set") {
    const SetFunction m = gen_measuroid(8);
    const auto cert = is_monotone(m);
    REQUIRE(cert.verdict == Verdict::Violated);
    // max gap = full positive part, attained by odds inside everything
    const SetMask odds = parse_set("{1,3,5,7}", m.algebra());
    const SetMask all = m.algebra().ground();
    CHECK(cert.witness->indices == std::vector<long>{odds, all});
  }
}

TEST_CASE("vector carriers are checked componentwise") {
  const FiniteAlgebra a2(2);
  auto v = [](long a, long b) { return LatticeValue::vector({Rational(a, 4), Rational(b, 4)}); };
  // Componentwise |additive|: both components are 1-triangular together.
  const SetFunction good = SetFunction::from_table(a2, {v(0, 0), v(1, 2), v(2, 1), v(3, 3)});
  CHECK(check_k_triangular(good, q(1)).k_triangular());
  // A violation in a single component is a violation of the vector order.
  const SetFunction bad = SetFunction::from_table(a2, {v(0, 0), v(1, 2), v(2, 1), v(8, 3)});
  const auto report = check_k_triangular(bad, q(1));
  CHECK(!report.k_subadditive());
  CHECK(is_monotone(good).holds());  // only subset pairs are compared
}

TEST_CASE("triangularity is scale-covariant") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 10; ++trial) {
    const SetFunction m = gen_random_ksubadditive(4, q(1), q(2), gen());
    const Rational c(1 + static_cast<long>(gen() % 7), 1 + static_cast<long>(gen() % 4));
    const SetFunction cm = m.scaled(c);
    for (long kk : {0L, 1L, 2L}) {
      const Rational k(kk);
      CHECK(check_k_triangular(m, k).k_triangular() ==
            check_k_triangular(cm, k).k_triangular());
    }
    // Profiles scale entrywise with the function.
    for (SetMask a = 0; a < m.algebra().set_count(); ++a)
      CHECK(semivariation_at(cm, a) == semivariation_at(m, a).scaled(c));
  }
}
