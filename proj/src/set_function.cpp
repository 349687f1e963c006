#include "ktri/set_function.hpp"

#include <algorithm>

#include "ktri/error.hpp"

namespace ktri {

namespace {
constexpr std::size_t kWitnessCap = 64;
constexpr int kFullTableLimit = 16;  // beyond this, per-query sweeps only
}  // namespace

SetFunction::SetFunction(FiniteAlgebra algebra, std::variant<TableBacking, SeriesBacking> backing,
                         std::optional<std::string> tail_bound_desc)
    : algebra_(algebra), backing_(std::move(backing)), tail_bound_desc_(std::move(tail_bound_desc)) {
  if (const auto* t = std::get_if<TableBacking>(&backing_)) {
    require(t->values.size() == algebra_.set_count(), "BAD-TABLE",
            "table must list one value per member set");
    const LatticeValue& shape = t->values[0];
    require(t->values[0].is_zero(), "NONZERO-AT-EMPTY", "a set function must vanish at {}");
    bound_ = LatticeValue::zero_like(shape);
    for (const auto& v : t->values) {
      require(v.is_scalar() == shape.is_scalar() && v.dim() == shape.dim(), "DIMENSION-MISMATCH",
              "table values must share one carrier");
      require(v.is_nonneg(), "NEGATIVE-VALUE", "set functions here are positive");
      bound_ = bound_.join(v);
    }
  } else {
    const auto& w = std::get<SeriesBacking>(backing_).weights;
    require(w.size() >= static_cast<std::size_t>(algebra_.atoms()), "BAD-WEIGHTS",
            "need one weight per atom");
    // max |sum over A| is attained by taking all positive or all negative
    // weights, so the bound is exact.
    Rational pos(0), neg(0);
    for (int a = 0; a < algebra_.atoms(); ++a) {
      if (w[a].sign() > 0) pos += w[a];
      else neg -= w[a];
    }
    bound_ = LatticeValue::scalar(Rational::max(pos, neg));
  }
}

SetFunction SetFunction::from_table(FiniteAlgebra algebra, std::vector<LatticeValue> values) {
  return SetFunction(algebra, TableBacking{std::move(values)}, {});
}

SetFunction SetFunction::from_series(FiniteAlgebra algebra, std::vector<Rational> weights,
                                     std::optional<std::string> tail_bound_desc) {
  return SetFunction(algebra, SeriesBacking{std::move(weights)}, std::move(tail_bound_desc));
}

const std::vector<Rational>& SetFunction::weights() const {
  const auto* s = std::get_if<SeriesBacking>(&backing_);
  require(s != nullptr, "NOT-SERIES-BACKED", "set function has no weight series");
  return s->weights;
}

LatticeValue SetFunction::eval(SetMask a) const {
  require(algebra_.contains(a), "SET-OUTSIDE-ALGEBRA", "mask " + set_str(a) + " not a member set");
  if (const auto* t = std::get_if<TableBacking>(&backing_)) return t->values[a];
  const auto& w = std::get<SeriesBacking>(backing_).weights;
  Rational sum(0);
  for (int bit = 0; bit < algebra_.atoms(); ++bit)
    if (a & (SetMask{1} << bit)) sum += w[bit];
  return LatticeValue::scalar(sum.abs());
}

std::vector<LatticeValue> SetFunction::materialize() const {
  require(algebra_.atoms() <= kFullTableLimit, "HORIZON-TOO-LARGE",
          "full tables are limited to " + std::to_string(kFullTableLimit) + " atoms");
  if (const auto* t = std::get_if<TableBacking>(&backing_)) return t->values;
  const auto& w = std::get<SeriesBacking>(backing_).weights;
  // Signed sums by lowest-bit recurrence, then absolute values.
  std::vector<Rational> sums(algebra_.set_count(), Rational(0));
  for (SetMask a = 1; a < algebra_.set_count(); ++a) {
    const SetMask low = a & (~a + 1);
    sums[a] = sums[a ^ low] + w[__builtin_ctz(low)];
  }
  std::vector<LatticeValue> out;
  out.reserve(sums.size());
  for (auto& s : sums) out.push_back(LatticeValue::scalar(s.abs()));
  return out;
}

SetFunction SetFunction::scaled(const Rational& c) const {
  require(c.sign() >= 0, "NEGATIVE-SCALE", "scale must be non-negative");
  if (const auto* t = std::get_if<TableBacking>(&backing_)) {
    auto values = t->values;
    for (auto& v : values) v = v.scaled(c);
    return from_table(algebra_, std::move(values));
  }
  auto weights = std::get<SeriesBacking>(backing_).weights;
  for (auto& w : weights) w *= c;
  return from_series(algebra_, std::move(weights), tail_bound_desc_);
}

TriangularityReport check_k_triangular(const SetFunction& m, const Rational& k) {
  require(k.sign() >= 0, "NEGATIVE-K", "k must be non-negative");
  TriangularityReport report;
  report.k = k;
  const auto values = m.materialize();
  const SetMask ground = m.algebra().ground();
  for (SetMask a = 0;; ++a) {
    const SetMask comp = ground & ~a;
    for_each_subset(comp, [&](SetMask b) {
      ++report.pairs_checked;
      const LatticeValue rhs_upper = values[a] + values[b].scaled(k);
      const LatticeValue& u = values[a | b];
      if (!leq(u, rhs_upper)) {
        ++report.subadditivity_violation_count;
        if (report.subadditivity_violations.size() < kWitnessCap)
          report.subadditivity_violations.emplace_back(a, b);
      }
      // m(A) - k m(B) <= m(A u B), rearranged to avoid negatives.
      if (!leq(values[a], u + values[b].scaled(k))) {
        ++report.lower_violation_count;
        if (report.lower_violations.size() < kWitnessCap)
          report.lower_violations.emplace_back(a, b);
      }
    });
    if (a == ground) break;
  }
  return report;
}

std::optional<Rational> minimal_k(const SetFunction& m) {
  require(m.scalar_carrier(), "NOT-SCALAR",
          "minimal k is defined for totally ordered carriers only");
  const auto values = m.materialize();
  const SetMask ground = m.algebra().ground();
  Rational best(0);
  bool infeasible = false;
  for (SetMask a = 0; !infeasible; ++a) {
    const SetMask comp = ground & ~a;
    for_each_subset(comp, [&](SetMask b) {
      if (infeasible) return;
      const Rational& ma = values[a].as_rational();
      const Rational& mb = values[b].as_rational();
      const Rational& mu = values[a | b].as_rational();
      if (mb.is_zero()) {
        if (ma != mu) infeasible = true;
        return;
      }
      best = Rational::max(best, (mu - ma) / mb);
      best = Rational::max(best, (ma - mu) / mb);
    });
    if (a == ground) break;
  }
  if (infeasible) return std::nullopt;
  return best;
}

SetFunction semivariation(const SetFunction& m) {
  std::vector<LatticeValue> v = m.materialize();
  const std::size_t count = v.size();
  const int n = m.atoms();
  for (SetMask a = 1; a < count; ++a)
    for (int bit = 0; bit < n; ++bit)
      if (a & (SetMask{1} << bit)) v[a] = v[a].join(v[a ^ (SetMask{1} << bit)]);
  return SetFunction::from_table(m.algebra(), std::move(v));
}

LatticeValue semivariation_at(const SetFunction& m, SetMask a) {
  LatticeValue best = LatticeValue::zero_like(m.bound());
  for_each_subset(a, [&](SetMask b) { best = best.join(m.eval(b)); });
  return best;
}

Certificate finite_chain_check(const SetFunction& m, const std::vector<SetMask>& sets,
                               const Rational& k) {
  require(sets.size() >= 2, "TOO-FEW-SETS", "finite chain needs n >= 2 sets");
  SetMask seen = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    require(disjoint(sets[i], seen), "NON-DISJOINT",
            "set " + std::to_string(i + 1) + " (" + set_str(sets[i]) +
                ") overlaps an earlier one");
    seen |= sets[i];
  }

  const LatticeValue first = m.eval(sets[0]);
  LatticeValue rest = LatticeValue::zero_like(first);
  SetMask all = sets[0];
  for (std::size_t q = 1; q < sets.size(); ++q) {
    rest = rest + m.eval(sets[q]);
    all |= sets[q];
  }
  const LatticeValue whole = m.eval(all);
  const LatticeValue k_rest = rest.scaled(k);

  Certificate cert;
  cert.horizons.sequence_length = sets.size();
  auto violate = [&](const char* what, const LatticeValue& value) {
    cert.verdict = Verdict::Violated;
    Witness w;
    w.what = what;
    w.set_mask = all;
    w.value = value;
    cert.witness = std::move(w);
  };
  if (!leq(whole, first + k_rest))
    violate("upper finite-chain inequality fails: m(union) > m(E1) + k sum", whole);
  else if (!leq(first, whole + k_rest))
    // Lower inequality and its corollary form, one rearrangement apart.
    violate("lower finite-chain inequality fails: m(E1) - k sum > m(union)", first);
  else
    cert.verdict = Verdict::HoldsAtHorizon;
  return cert;
}

SetFunction make_series_setfunction(const std::vector<Rational>& weights, int atoms,
                                    std::optional<std::string> tail_bound_desc) {
  return SetFunction::from_series(FiniteAlgebra(atoms), weights, std::move(tail_bound_desc));
}

namespace {

struct MonotoneViolation {
  SetMask a = 0, b = 0;
  Rational gap;  // scalar carriers only
  bool valid = false;
};

bool better_witness(const MonotoneViolation& cand, const MonotoneViolation& best) {
  if (!best.valid) return true;
  if (cand.gap != best.gap) return cand.gap > best.gap;
  if (popcount(cand.a) != popcount(best.a)) return popcount(cand.a) > popcount(best.a);
  if (cand.a != best.a) return cand.a > best.a;
  return cand.b > best.b;
}

}  // namespace

Certificate is_monotone(const SetFunction& m) {
  const auto values = m.materialize();
  const SetMask ground = m.algebra().ground();
  Certificate cert;
  cert.horizons.sequence_length = values.size();

  // Detection over covers is enough (the order is transitive); the full
  // pair sweep below only runs to refine the witness.
  bool violated = false;
  for (SetMask a = 0; a < ground && !violated; ++a)
    for (int bit = 0; bit < m.atoms() && !violated; ++bit)
      if (!(a & (SetMask{1} << bit)) && !leq(values[a], values[a | (SetMask{1} << bit)]))
        violated = true;

  if (!violated) {
    cert.verdict = Verdict::HoldsAtHorizon;
    return cert;
  }

  MonotoneViolation best;
  for (SetMask b = 0;; ++b) {
    for_each_subset(b, [&](SetMask a) {
      if (a == b) return;
      if (leq(values[a], values[b])) return;
      MonotoneViolation cand;
      cand.a = a;
      cand.b = b;
      cand.valid = true;
      if (m.scalar_carrier()) cand.gap = values[a].as_rational() - values[b].as_rational();
      if (better_witness(cand, best)) best = cand;
    });
    if (b == ground) break;
  }

  cert.verdict = Verdict::Violated;
  Witness w;
  w.what = "monotonicity fails: m(" + set_str(best.a) + ") > m(" + set_str(best.b) + ")";
  w.set_mask = best.a;
  w.indices = {static_cast<long>(best.a), static_cast<long>(best.b)};
  w.value = m.eval(best.a);
  cert.witness = std::move(w);
  return cert;
}

}  // namespace ktri
