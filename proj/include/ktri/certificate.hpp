#ifndef KTRI_CERTIFICATE_HPP
#define KTRI_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ktri/lattice_value.hpp"
#include "ktri/regulator.hpp"

namespace ktri {

// Every check is evaluated at declared truncation horizons. HOLDS-AT-HORIZON
// therefore never claims more than what was actually quantified over;
// VIOLATED always carries reproducible witness data.
enum class Verdict { HoldsAtHorizon, Violated, HypothesisNotMet };

const char* verdict_name(Verdict v);

struct Witness {
  std::string what;                       // which inequality / hypothesis failed
  std::vector<long> indices;              // 1-based indices (j, n, h, ... as applicable)
  std::optional<std::uint32_t> set_mask;  // offending set, if any
  std::optional<LatticeValue> value;      // offending value, if any
  std::optional<std::string> phi;         // index map involved, if any

  std::string str() const;
};

struct Horizons {
  std::size_t regulator_rows = 0;
  std::size_t regulator_columns = 0;
  std::size_t sequence_length = 0;
  std::size_t phi_count = 0;
  std::uint64_t seed = 0;
};

struct Certificate {
  Verdict verdict = Verdict::HoldsAtHorizon;
  std::optional<Witness> witness;
  std::optional<Regulator> regulator_used;
  Horizons horizons;
  std::string detail;

  bool holds() const { return verdict == Verdict::HoldsAtHorizon; }
};

}  // namespace ktri

#endif  // KTRI_CERTIFICATE_HPP
