#ifndef KTRI_SERIALIZE_HPP
#define KTRI_SERIALIZE_HPP

#include <json.hpp>

#include "ktri/drewnowski.hpp"
#include "ktri/harness.hpp"

namespace ktri {

using Json = nlohmann::ordered_json;

// Record formats: rationals are always "p/q" strings (plain "p" when the
// denominator is 1), sets are arrays of atoms, matrices are row-major, and
// every record carries its horizons. Machine output never uses floats.

Json to_json(const Rational& r);
Json to_json(const LatticeValue& v);
Json to_json(const Regulator& reg);
Json to_json(const IndexMap& phi);
Json to_json(const Certificate& cert);
Json to_json(const SetFunction& m);
Json to_json(const DecayProfile& profile);
Json to_json(const HarnessReport& report);
Json to_json(const ExtractionTrace& trace);

Rational rational_from_json(const Json& j);
LatticeValue lattice_value_from_json(const Json& j);
Regulator regulator_from_json(const Json& j);
SetFunction set_function_from_json(const Json& j);

Json set_to_json(SetMask mask);
SetMask set_from_json(const Json& j, const FiniteAlgebra& algebra);

// A loaded fixture file. `type` is "set_function" or "family"; the optional
// blocks are present when the file supplies them.
struct Fixture {
  std::string type;
  std::optional<SetFunction> function;
  std::optional<SetFunctionFamily> family;
  Rational k{1};
  HarnessFixtures harness;  // seqs, chains, eta, property regulators
  Json expected = Json::array();
  Json raw;
};

Fixture load_fixture(const std::string& path);
Fixture fixture_from_json(const Json& j);

// Re-runs a fixture's expected-results block (exact equality for every
// entry). Returns human-readable failure lines; empty means everything
// re-verified.
std::vector<std::string> verify_expected_block(const Fixture& fixture);

// FNV-1a 64 over the canonical dump; used by the corpus manifest.
std::string fixture_checksum(const Json& j);

}  // namespace ktri

#endif  // KTRI_SERIALIZE_HPP
