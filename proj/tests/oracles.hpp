#ifndef KTRI_TESTS_ORACLES_HPP
#define KTRI_TESTS_ORACLES_HPP

// Brute-force reference computations, deliberately independent of the
// library's own algorithms: plain sweeps and scans only. Tests compare the
// implementation against these on small instances.

#include "ktri/regulator.hpp"
#include "ktri/set_function.hpp"

namespace ktri::oracle {

// Direct submask sweep, no recurrence.
inline LatticeValue semivariation_sweep(const SetFunction& m, SetMask a) {
  LatticeValue best = m.eval(0);
  for (SetMask b = 0; b <= a; ++b)
    if (subset_of(b, a)) best = best.join(m.eval(b));
  return best;
}

// Plain row/column loop.
inline LatticeValue regulator_sup_loop(const Regulator& reg, const IndexMap& phi) {
  LatticeValue s = LatticeValue::zero_like(reg.bound());
  for (std::size_t t = 0; t < reg.row_count(); ++t)
    s = s.join(reg.entry(t, static_cast<std::size_t>(phi.at_row(t)) - 1));
  return s;
}

// Every index map {1..rows} -> {1..columns}, odometer order.
inline std::vector<IndexMap> all_index_maps(std::size_t rows, std::size_t columns) {
  std::vector<IndexMap> out;
  std::vector<int> cols(rows, 1);
  while (true) {
    out.push_back(IndexMap(cols));
    std::size_t t = 0;
    while (t < rows) {
      if (cols[t] < static_cast<int>(columns)) {
        ++cols[t];
        break;
      }
      cols[t] = 1;
      ++t;
    }
    if (t == rows) break;
  }
  return out;
}

// Largest per-pair threshold ratio, scanned directly.
inline std::optional<Rational> minimal_k_scan(const SetFunction& m) {
  const auto values = m.materialize();
  const SetMask ground = m.algebra().ground();
  Rational best(0);
  for (SetMask a = 0; a <= ground; ++a) {
    for (SetMask b = 0; b <= ground; ++b) {
      if (!disjoint(a, b) || !subset_of(a | b, ground)) continue;
      const Rational& ma = values[a].as_rational();
      const Rational& mb = values[b].as_rational();
      const Rational& mu = values[a | b].as_rational();
      if (mb.is_zero()) {
        if (ma != mu) return std::nullopt;
        continue;
      }
      best = Rational::max(best, (mu - ma) / mb);
      best = Rational::max(best, (ma - mu) / mb);
    }
    if (a == ground) break;
  }
  return best;
}

// Ordered disjoint pairs failing either inequality, counted directly.
inline std::size_t triangularity_violations_scan(const SetFunction& m, const Rational& k) {
  const auto values = m.materialize();
  const SetMask ground = m.algebra().ground();
  std::size_t violations = 0;
  for (SetMask a = 0; a <= ground; ++a) {
    for (SetMask b = 0; b <= ground; ++b) {
      if (!disjoint(a, b)) continue;
      const LatticeValue& u = values[a | b];
      if (!leq(u, values[a] + values[b].scaled(k))) ++violations;
      if (!leq(values[a], u + values[b].scaled(k))) ++violations;
    }
    if (a == ground) break;
  }
  return violations;
}

}  // namespace ktri::oracle

#endif  // KTRI_TESTS_ORACLES_HPP
