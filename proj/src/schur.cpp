#include "ktri/schur.hpp"

#include "ktri/error.hpp"

namespace ktri {

std::vector<SchurGapRow> schur_gap(const SetFunctionFamily& family, int atoms) {
  require(family.declared_limit().has_value(), "NO-DECLARED-LIMIT",
          "gap against a limit needs a declared limit");
  require(atoms == family.algebra().atoms(), "ALGEBRA-MISMATCH",
          "requested ground size differs from the family's algebra");
  require(atoms <= 20, "HORIZON-TOO-LARGE", "full sweeps are limited to 20 atoms");

  const auto limit_table = family.declared_limit()->materialize();
  std::vector<SchurGapRow> rows;
  rows.reserve(family.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    const auto table = family.member(j).materialize();
    LatticeValue gap = LatticeValue::zero_like(family.equibound());
    for (SetMask e = 0; e < table.size(); ++e) gap = gap.join((table[e] - limit_table[e]).abs());
    std::optional<SetMask> witness;
    for (SetMask e = 0; e < table.size(); ++e) {
      if ((table[e] - limit_table[e]).abs() == gap) {
        witness = e;
        break;
      }
    }
    rows.push_back(SchurGapRow{j + 1, std::move(gap), witness});
  }
  return rows;
}

}  // namespace ktri
