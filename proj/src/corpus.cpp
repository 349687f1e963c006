#include "ktri/corpus.hpp"

#include <random>

#include "ktri/error.hpp"

namespace ktri {

SetFunction gen_measuroid(int atoms) {
  std::vector<Rational> weights;
  weights.reserve(atoms);
  for (int a = 1; a <= atoms; ++a) {
    Rational w = Rational(1) / Rational(static_cast<long>(a) * a);
    weights.push_back(a % 2 == 1 ? -w : w);
  }
  return make_series_setfunction(weights, atoms, "1/(N-1)");
}

SetFunctionFamily gen_scaled_family(const SetFunction& m, const std::vector<Rational>& scales,
                                    const Rational& limit_scale) {
  require(!scales.empty(), "EMPTY-FAMILY", "need at least one scale");
  require(limit_scale.sign() > 0, "BAD-LIMIT", "limit scale must be positive");
  std::vector<SetFunction> members;
  members.reserve(scales.size());
  for (const auto& s : scales) {
    require(s.sign() > 0, "BAD-SCALE", "scales must be positive");
    members.push_back(m.scaled(s));
  }

  // Deviation tails sigma_l = sup_{j >= l} |scales[j] - limit| * bound(m),
  // non-increasing by construction.
  std::vector<LatticeValue> sigma(scales.size(), LatticeValue::zero_like(m.bound()));
  for (std::size_t l = scales.size(); l-- > 0;) {
    LatticeValue dev = m.bound().scaled((scales[l] - limit_scale).abs());
    sigma[l] = l + 1 < scales.size() ? dev.join(sigma[l + 1]) : dev;
  }
  Regulator reg = Regulator::constant_rows(OSequence(std::move(sigma)), scales.size());
  return SetFunctionFamily(std::move(members), m.scaled(limit_scale), std::move(reg));
}

SetFunctionFamily gen_hump_family(int atoms, const std::vector<SetMask>& humps) {
  require(!humps.empty(), "EMPTY-FAMILY", "need at least one hump");
  const FiniteAlgebra algebra(atoms);
  SetMask seen = 0;
  for (SetMask h : humps) {
    require(h != 0 && algebra.contains(h), "BAD-HUMP", "humps must be nonempty member sets");
    require(disjoint(h, seen), "NON-DISJOINT", "humps must be pairwise disjoint");
    seen |= h;
  }

  std::vector<SetFunction> members;
  members.reserve(humps.size());
  for (SetMask hump : humps) {
    std::vector<LatticeValue> table;
    table.reserve(algebra.set_count());
    for (SetMask a = 0; a < algebra.set_count(); ++a)
      table.push_back(LatticeValue::scalar(subset_of(hump, a) ? Rational(1) : Rational(0)));
    SetFunction m = SetFunction::from_table(algebra, std::move(table));
    const auto report = check_k_triangular(m, Rational(1));
    require(report.k_triangular(), "HUMP-NOT-TRIANGULAR",
            "hump " + set_str(hump) + " yields a non-1-triangular indicator (" +
                std::to_string(report.subadditivity_violation_count) + " pair(s))");
    members.push_back(std::move(m));
  }

  // Zero declared limit with a visibly small regulator: the point of this
  // family is that hypotheses fail at the horizon.
  std::vector<LatticeValue> table(algebra.set_count(),
                                  LatticeValue::scalar(Rational(0)));
  SetFunction zero = SetFunction::from_table(algebra, std::move(table));
  std::vector<LatticeValue> sigma;
  for (std::size_t l = 1; l <= humps.size(); ++l)
    sigma.push_back(LatticeValue::scalar(Rational(1, 2 * static_cast<long>(l))));
  Regulator reg = Regulator::constant_rows(OSequence(std::move(sigma)), humps.size());
  return SetFunctionFamily(std::move(members), std::move(zero), std::move(reg));
}

namespace {

Rational small_rational(std::mt19937_64& gen) {
  const long num = static_cast<long>(gen() % 8);
  const long den = 1 + static_cast<long>(gen() % 8);
  return Rational(num, den);
}

// A structurally 1-subadditive table: |signed additive| + max-measure +
// capped additive, all with seeded coefficients.
std::vector<Rational> mixture_table(const FiniteAlgebra& algebra, std::mt19937_64& gen) {
  const int n = algebra.atoms();
  std::vector<Rational> signed_w(n), max_w(n), add_w(n);
  for (int a = 0; a < n; ++a) {
    signed_w[a] = small_rational(gen);
    if (gen() % 2) signed_w[a] = -signed_w[a];
    max_w[a] = small_rational(gen);
    add_w[a] = small_rational(gen);
  }
  const Rational cap = Rational(1) + small_rational(gen);

  std::vector<Rational> table(algebra.set_count(), Rational(0));
  for (SetMask s = 1; s < algebra.set_count(); ++s) {
    Rational sum(0), mx(0), add(0);
    for (int a = 0; a < n; ++a) {
      if (!(s & (SetMask{1} << a))) continue;
      sum += signed_w[a];
      mx = Rational::max(mx, max_w[a]);
      add += add_w[a];
    }
    table[s] = sum.abs() + mx + Rational::min(cap, add);
  }
  return table;
}

}  // namespace

SetFunction gen_random_ksubadditive(int atoms, const Rational& k, const Rational& bound,
                                    std::uint64_t seed) {
  RandomGenerationStats stats;
  return gen_random_ksubadditive(atoms, k, bound, seed, stats);
}

SetFunction gen_random_ksubadditive(int atoms, const Rational& k, const Rational& bound,
                                    std::uint64_t seed, RandomGenerationStats& stats) {
  require(atoms >= 1 && atoms <= 8, "BAD-ATOM-COUNT",
          "the exhaustive rejection check is limited to 8 atoms");
  require(k.sign() >= 0, "NEGATIVE-K", "k must be non-negative");
  require(bound.sign() >= 0, "BAD-BOUND", "bound must be non-negative");
  const FiniteAlgebra algebra(atoms);

  if (bound.is_zero())
    return SetFunction::from_table(
        algebra, std::vector<LatticeValue>(algebra.set_count(),
                                           LatticeValue::scalar(Rational(0))));

  std::mt19937_64 gen(seed);
  constexpr std::size_t kBudget = 24;
  Rational amplitude(1, 8);
  for (std::size_t attempt = 0; attempt < kBudget; ++attempt) {
    ++stats.attempts;
    std::vector<Rational> table = mixture_table(algebra, gen);

    for (SetMask s = 1; s < algebra.set_count(); ++s)
      if (!amplitude.is_zero())
        table[s] *= Rational(1) + amplitude * Rational(static_cast<long>(gen() % 5), 4);

    Rational raw_bound(0);
    for (const auto& v : table) raw_bound = Rational::max(raw_bound, v);
    if (raw_bound.is_zero()) {  // degenerate draw, retry
      ++stats.rejected;
      continue;
    }
    const Rational rescale = bound / raw_bound;

    std::vector<LatticeValue> values;
    values.reserve(table.size());
    for (const auto& v : table) values.push_back(LatticeValue::scalar(v * rescale));
    SetFunction candidate = SetFunction::from_table(algebra, std::move(values));
    if (check_k_triangular(candidate, k).k_subadditive()) return candidate;

    ++stats.rejected;
    // Shrinking amplitude converges back to the structurally valid base.
    amplitude = amplitude * Rational(1, 2);
    if (attempt + 4 >= kBudget) amplitude = Rational(0);
  }
  fail("REJECTION-BUDGET",
       "no k-subadditive sample within " + std::to_string(stats.attempts) + " attempts (k=" +
           k.str() + "); k < 1 admits (almost) no positive samples");
}

Regulator tail_sup_regulator(const std::vector<std::vector<LatticeValue>>& profiles,
                             std::size_t size) {
  require(!profiles.empty() && !profiles[0].empty(), "EMPTY-SEQUENCE",
          "need at least one nonempty profile");
  const LatticeValue zero = LatticeValue::zero_like(profiles[0][0]);
  std::vector<LatticeValue> sigma(size, zero);
  for (const auto& p : profiles) {
    std::vector<LatticeValue> tail(p.size(), zero);
    for (std::size_t i = p.size(); i-- > 0;)
      tail[i] = i + 1 < p.size() ? p[i].join(tail[i + 1]) : p[i];
    for (std::size_t l = 0; l < size; ++l)
      sigma[l] = sigma[l].join(tail[std::min(l, p.size() - 1)]);
  }
  return Regulator::constant_rows(OSequence(std::move(sigma)), size);
}

std::vector<SetMask> gen_random_disjoint_tuple(const FiniteAlgebra& algebra,
                                               std::size_t max_parts, std::uint64_t seed) {
  require(max_parts >= 2, "TOO-FEW-SETS", "need at least two parts");
  require(algebra.atoms() >= 2, "BAD-ATOM-COUNT", "need at least two atoms to split");
  std::mt19937_64 gen(seed);
  const std::size_t parts =
      2 + gen() % std::min<std::size_t>(max_parts - 1, static_cast<std::size_t>(algebra.atoms()) - 1);
  std::vector<SetMask> out(parts, 0);
  for (int a = 0; a < algebra.atoms(); ++a)
    out[gen() % parts] |= SetMask{1} << a;
  std::vector<SetMask> nonempty;
  for (SetMask s : out)
    if (s != 0) nonempty.push_back(s);
  if (nonempty.size() < 2) {
    // All atoms landed in one part; peel off its lowest atom.
    const SetMask s = nonempty[0];
    const SetMask low = s & (~s + 1);
    nonempty = {low, s & ~low};
  }
  return nonempty;
}

}  // namespace ktri
