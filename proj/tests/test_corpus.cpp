#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ktri/corpus.hpp"
#include "ktri/corpus_files.hpp"
#include "ktri/error.hpp"

using namespace ktri;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }
LatticeValue s(long num, long den = 1) { return LatticeValue::scalar(q(num, den)); }

}  // namespace

TEST_CASE("the generated running example is 1-triangular and not monotone") {
  for (int atoms : {3, 5, 8}) {
    const SetFunction m = gen_measuroid(atoms);
    CHECK(check_k_triangular(m, q(1)).k_triangular());
    const auto mono = is_monotone(m);
    CHECK(mono.verdict == Verdict::Violated);
  }
  const auto witness = is_monotone(gen_measuroid(3)).witness;
  REQUIRE(witness.has_value());
  CHECK(witness->indices == std::vector<long>{5, 7});  // ({1,3}, {1,2,3})
}

TEST_CASE("scaled families") {
  const SetFunction m = gen_measuroid(3);

  SUBCASE("1 + 1/j scaling against the base limit") {
    std::vector<Rational> scales;
    for (long j = 1; j <= 8; ++j) scales.push_back(q(1) + q(1, j));
    const auto family = gen_scaled_family(m, scales, q(1));
    CHECK(family.equibound() == s(20, 9));
    CHECK(family.pointwise_convergence(PhiConfig{.random_count = 20, .seed = 3}).holds());
    const auto rows = schur_gap(family, 3);
    for (long j = 1; j <= 8; ++j) CHECK(rows[j - 1].gap == s(10, 9).scaled(q(1, j)));
  }

  SUBCASE("constant scaling gives zero gaps") {
    const auto family = gen_scaled_family(m, std::vector<Rational>(5, q(1)), q(1));
    for (const auto& row : schur_gap(family, 3)) CHECK(row.gap == s(0));
  }

  SUBCASE("2 - 1/j converges to the doubled function") {
    std::vector<Rational> scales;
    for (long j = 1; j <= 8; ++j) scales.push_back(q(2) - q(1, j));
    const auto family = gen_scaled_family(m, scales, q(2));
    CHECK(family.declared_limit()->eval(5) == s(20, 9));
    CHECK(family.pointwise_convergence(PhiConfig{.random_count = 20, .seed = 4}).holds());
  }
}

TEST_CASE("hump families") {
  std::vector<SetMask> humps;
  for (int a = 1; a <= 6; ++a) humps.push_back(SetMask{1} << (a - 1));
  const auto family = gen_hump_family(6, humps);

  SUBCASE("members are 1-triangular indicators") {
    for (const auto& m : family.members()) CHECK(check_k_triangular(m, q(1)).k_triangular());
    CHECK(family.member(2).eval(parse_set("{3}", family.algebra())) == s(1));
    CHECK(family.member(2).eval(family.algebra().ground()) == s(1));
    CHECK(family.member(2).eval(0) == s(0));
  }

  SUBCASE("uniform smallness fails along the humps") {
    const auto res = s_bounded_profile(family, humps, std::nullopt,
                                       *family.convergence_regulator(),
                                       PhiConfig{.random_count = 20, .seed = 5});
    CHECK(res.certificate.verdict == Verdict::Violated);
  }

  SUBCASE("split humps are rejected at construction") {
    CHECK_THROWS_WITH_AS(gen_hump_family(6, {parse_set("{1,2}", family.algebra())}),
                         doctest::Contains("HUMP-NOT-TRIANGULAR"), Error);
  }

  CHECK_THROWS_AS(gen_hump_family(6, {1, 1}), Error);  // overlapping humps
}

TEST_CASE("seeded k-subadditive generation") {
  SUBCASE("samples pass their own exhaustive check across seeds and k") {
    std::mt19937_64 seeds(101);
    for (long k : {1L, 2L, 3L}) {
      for (int i = 0; i < 12; ++i) {
        const std::uint64_t seed = seeds();
        RandomGenerationStats stats;
        const SetFunction m = gen_random_ksubadditive(4 + i % 5, q(k), q(2), seed, stats);
        CHECK(check_k_triangular(m, q(k)).k_subadditive());
        CHECK(m.eval(0) == s(0));
        CHECK(stats.attempts >= 1);
      }
    }
  }

  SUBCASE("the declared bound is attained exactly") {
    const SetFunction m = gen_random_ksubadditive(5, q(1), q(7, 3), 42);
    CHECK(m.bound() == s(7, 3));
  }

  SUBCASE("zero bound yields the zero function") {
    const SetFunction m = gen_random_ksubadditive(4, q(1), q(0), 1);
    for (SetMask a = 0; a < 16; ++a) CHECK(m.eval(a) == s(0));
  }

  SUBCASE("k = 0 exhausts the rejection budget loudly") {
    CHECK_THROWS_WITH_AS(gen_random_ksubadditive(4, q(0), q(1), 7),
                         doctest::Contains("REJECTION-BUDGET"), Error);
  }

  SUBCASE("the same seed reproduces the same function") {
    const SetFunction a = gen_random_ksubadditive(5, q(2), q(3), 99);
    const SetFunction b = gen_random_ksubadditive(5, q(2), q(3), 99);
    for (SetMask mask = 0; mask < 32; ++mask) CHECK(a.eval(mask) == b.eval(mask));
  }
}

TEST_CASE("random disjoint tuples") {
  std::mt19937_64 gen(11);
  const FiniteAlgebra algebra(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto parts = gen_random_disjoint_tuple(algebra, 8, gen());
    CHECK(parts.size() >= 2);
    SetMask seen = 0;
    for (SetMask p : parts) {
      CHECK(p != 0);
      CHECK(disjoint(p, seen));
      seen |= p;
    }
  }
}

TEST_CASE("the shipped corpus re-verifies and hashes stably") {
  const auto fixtures = standard_corpus();
  REQUIRE(fixtures.size() == 6);
  for (const auto& fx : fixtures) {
    const Fixture loaded = fixture_from_json(fx.payload);
    const auto failures = verify_expected_block(loaded);
    for (const auto& f : failures) FAIL_CHECK(fx.name, ": ", f);
    CHECK(fixture_checksum(fx.payload) == fixture_checksum(fx.payload));
  }
  // Regeneration is bit-stable.
  const auto again = standard_corpus();
  for (std::size_t i = 0; i < fixtures.size(); ++i)
    CHECK(fixture_checksum(fixtures[i].payload) == fixture_checksum(again[i].payload));
}

TEST_CASE("fixture serialization round-trips") {
  const SetFunction m = gen_measuroid(4);
  const SetFunction back = set_function_from_json(to_json(m));
  for (SetMask a = 0; a < 16; ++a) CHECK(back.eval(a) == m.eval(a));
  CHECK(to_json(back) == to_json(m));

  const Regulator reg = Regulator::constant_rows(
      OSequence{{s(1), s(1, 2), s(0)}}, 3);
  const Regulator reg_back = regulator_from_json(to_json(reg));
  CHECK(to_json(reg_back) == to_json(reg));

  const LatticeValue vec = LatticeValue::vector({q(1, 2), q(-3)});
  CHECK(lattice_value_from_json(to_json(vec)) == vec);
}
