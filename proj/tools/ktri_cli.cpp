// Command-line front end: fixture-driven checks, theorem harnesses, the
// extraction procedure, and corpus maintenance. Machine formats (records,
// csv) print rationals as p/q only; tables add decimal approximations for
// reading. Exit codes: 0 all checks pass, 1 violation with witness,
// 2 input error, 3 hypothesis not met.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "ktri/convergence.hpp"
#include "ktri/corpus.hpp"
#include "ktri/corpus_files.hpp"
#include "ktri/error.hpp"

namespace {

using namespace ktri;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;

struct Options {
  std::string fixture;
  std::string manifest;
  std::string dir = "fixtures";
  std::string theorem = "BJ";
  std::string format = "table";
  std::string weights = "alternating-power";
  std::string param = "2";
  std::string targets;
  std::string k_override;
  int atoms = 0;
  std::size_t levels = 6;
  std::size_t depth = 6;
  int width = 64;
  std::uint64_t seed = 0;
  std::size_t phi_random = 100;
};

std::string approx(const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", r.approx());
  return buf;
}

void echo_config(const Options& opt, const std::string& command) {
  std::cout << "config command=" << command;
  if (!opt.fixture.empty()) std::cout << " fixture=" << opt.fixture;
  if (!opt.manifest.empty()) std::cout << " manifest=" << opt.manifest;
  std::cout << " format=" << opt.format << " seed=" << opt.seed
            << " phi-random=" << opt.phi_random << "\n";
}

PhiConfig phi_config(const Options& opt) {
  PhiConfig config;
  config.random_count = opt.phi_random;
  config.seed = opt.seed;
  return config;
}

Rational fixture_k(const Fixture& fx, const Options& opt) {
  if (!opt.k_override.empty()) return Rational::parse(opt.k_override);
  return fx.k;
}

int cmd_check(const Options& opt) {
  echo_config(opt, "check");
  Fixture fx = load_fixture(opt.fixture);
  require(fx.function.has_value(), "PARSE", "check needs a set_function fixture");
  const SetFunction& m = *fx.function;
  const Rational k = fixture_k(fx, opt);

  const TriangularityReport report = check_k_triangular(m, k);
  const Certificate mono = is_monotone(m);
  std::optional<Rational> mk;
  if (m.scalar_carrier()) mk = minimal_k(m);

  if (opt.format == "records" || opt.format == "csv") {
    std::cout << "check k=" << k.str() << " pairs=" << report.pairs_checked
              << " subadditivity-violations=" << report.subadditivity_violation_count
              << " lower-violations=" << report.lower_violation_count << "\n";
    std::cout << "monotone verdict=" << verdict_name(mono.verdict);
    if (mono.witness) std::cout << " witness=" << mono.witness->what;
    std::cout << "\n";
    if (mk) std::cout << "minimal-k value=" << mk->str() << "\n";
  } else {
    std::cout << "k-triangularity at k = " << k.str() << ": "
              << (report.k_triangular() ? "zero violations" : "VIOLATED") << " ("
              << report.pairs_checked << " ordered disjoint pairs)\n";
    if (!report.subadditivity_violations.empty()) {
      const auto& [a, b] = report.subadditivity_violations[0];
      std::cout << "  subadditivity fails at A=" << set_str(a) << " B=" << set_str(b) << "\n";
    }
    if (!report.lower_violations.empty()) {
      const auto& [a, b] = report.lower_violations[0];
      std::cout << "  lower bound fails at A=" << set_str(a) << " B=" << set_str(b) << "\n";
    }
    std::cout << "monotone: " << verdict_name(mono.verdict);
    if (mono.witness) std::cout << " (" << mono.witness->what << ")";
    std::cout << "\n";
    if (mk)
      std::cout << "minimal k: " << mk->str() << " (~" << approx(*mk) << ")\n";
  }

  for (const auto& line : verify_expected_block(fx)) {
    std::cout << "expected-block FAILED: " << line << "\n";
    return kExitViolation;
  }
  return report.k_triangular() ? kExitOk : kExitViolation;
}

int cmd_semivar(const Options& opt) {
  echo_config(opt, "semivar");
  Fixture fx = load_fixture(opt.fixture);
  require(fx.function.has_value(), "PARSE", "semivar needs a set_function fixture");
  const SetFunction& m = *fx.function;
  require(m.atoms() <= 16, "HORIZON-TOO-LARGE", "full semivariation tables need <= 16 atoms");

  const SetFunction v = semivariation(m);
  const auto mv = m.materialize();
  const auto vv = v.materialize();

  if (opt.format == "csv") std::cout << "set,m,v,argmax\n";
  for (SetMask a = 0; a < m.algebra().set_count(); ++a) {
    // smallest subset attaining the sup
    SetMask argmax = a;
    for_each_subset(a, [&](SetMask b) {
      if (mv[b] == vv[a] && b <= argmax) argmax = b;
    });
    if (opt.format == "csv") {
      std::cout << set_str(a) << "," << vv[a].str() << "," << mv[a].str() << ","
                << set_str(argmax) << "\n";
    } else if (opt.format == "records") {
      std::cout << "semivar set=" << set_str(a) << " m=" << mv[a].str() << " v=" << vv[a].str()
                << " argmax=" << set_str(argmax) << "\n";
    } else {
      std::cout << set_str(a) << "  m=" << mv[a].str() << "  v=" << vv[a].str() << "  at B="
                << set_str(argmax) << "\n";
    }
  }
  return kExitOk;
}

int cmd_harness(const Options& opt) {
  echo_config(opt, "harness");
  Fixture fx = load_fixture(opt.fixture);
  require(fx.family.has_value(), "PARSE", "harness needs a family fixture");
  HarnessFixtures fixtures = fx.harness;
  fixtures.phi = phi_config(opt);
  if (!opt.k_override.empty()) fixtures.k = Rational::parse(opt.k_override);

  const HarnessReport report = theorem_harness(*fx.family, parse_theorem(opt.theorem), fixtures);
  if (opt.format == "records" || opt.format == "csv") {
    std::cout << to_json(report).dump() << "\n";
  } else {
    std::cout << "theorem " << theorem_name(report.theorem) << ": " << report.verdict << "\n";
    std::cout << "equibound u = " << report.equibound << "\n";
    for (const auto& h : report.hypotheses) {
      std::cout << "  hypothesis " << h.name << ": " << (h.met ? "met" : "NOT MET");
      if (!h.detail.empty()) std::cout << " (" << h.detail << ")";
      if (h.witness) std::cout << " -- " << h.witness->str();
      std::cout << "\n";
    }
    for (const auto& c : report.conclusions) {
      std::cout << "  conclusion " << c.name << ": " << verdict_name(c.verdict) << " [reg: "
                << c.regulator_desc << "]";
      if (c.witness) std::cout << " -- " << c.witness->str();
      std::cout << "\n";
    }
    for (const auto& g : report.gaps) {
      std::cout << "  gap j=" << g.j << " " << g.gap.str();
      if (g.witness) std::cout << " at " << set_str(*g.witness);
      std::cout << "\n";
    }
  }
  if (report.verdict == "CONSISTENT") return kExitOk;
  if (report.verdict == "HYPOTHESIS-NOT-MET") return kExitHypothesis;
  return kExitViolation;
}

OSequence drewnowski_targets(const Options& opt) {
  if (opt.targets.empty()) {
    std::vector<LatticeValue> t;
    for (std::size_t l = 1; l <= opt.levels; ++l)
      t.push_back(LatticeValue::scalar(Rational(1, static_cast<long>(l))));
    return OSequence(std::move(t));
  }
  std::vector<LatticeValue> t;
  std::istringstream is(opt.targets);
  std::string tok;
  while (std::getline(is, tok, ',')) t.push_back(LatticeValue::scalar(Rational::parse(tok)));
  return OSequence(std::move(t));
}

CountableSetFunction drewnowski_weights(const Options& opt) {
  if (opt.weights == "alternating-power")
    return CountableSetFunction::alternating_power(std::stol(opt.param));
  if (opt.weights == "geometric")
    return CountableSetFunction::geometric(Rational::parse(opt.param));
  if (opt.weights == "zero") return CountableSetFunction::zero();
  fail("PARSE", "unknown weights rule '" + opt.weights +
                    "' (expected alternating-power, geometric or zero)");
}

int cmd_drewnowski(const Options& opt) {
  echo_config(opt, "drewnowski");
  const CountableSetFunction m = drewnowski_weights(opt);
  const DisjointSetsRule c = DisjointSetsRule::singleton_stride(1);
  const OSequence targets = drewnowski_targets(opt);

  const ExtractionTrace trace =
      extract_continuous_subsequence(m, c, opt.levels, targets, opt.width);
  const Certificate verify = verify_restricted_continuity(trace, m, c, opt.depth, opt.seed);

  if (opt.format == "records" || opt.format == "csv") {
    Json j = to_json(trace);
    j["verification"] = to_json(verify);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "weights: " << trace.function_desc << ", sequence: " << trace.sequence_desc
              << ", width " << trace.width << "\n";
    for (const auto& l : trace.levels)
      std::cout << "  level " << l.level << ": residue " << l.chosen_residue << ", target "
                << l.target.str() << ", attained " << l.attained.str() << " (~"
                << approx(l.attained) << "), block starts at " << l.block_first << "\n";
    std::cout << "  indices:";
    for (long n : trace.output_indices) std::cout << " " << n;
    std::cout << "\n";
    std::cout << "verification at depth " << opt.depth << ": " << verdict_name(verify.verdict);
    if (verify.witness) std::cout << " -- " << verify.witness->str();
    std::cout << "\n";
  }
  return verify.holds() ? kExitOk : kExitViolation;
}

int cmd_schur_gap(const Options& opt) {
  echo_config(opt, "schur-gap");
  Fixture fx = load_fixture(opt.fixture);
  require(fx.family.has_value(), "PARSE", "schur-gap needs a family fixture");
  const int atoms = opt.atoms > 0 ? opt.atoms : fx.family->algebra().atoms();
  const auto rows = schur_gap(*fx.family, atoms);

  if (opt.format == "table") {
    for (const auto& r : rows) {
      std::cout << "j=" << r.j << "  gap=" << r.gap.str();
      if (r.gap.is_scalar()) std::cout << " (~" << approx(r.gap.as_rational()) << ")";
      if (r.witness) std::cout << "  at E=" << set_str(*r.witness);
      std::cout << "\n";
    }
  } else {
    std::cout << "j,gap,witness\n";
    for (const auto& r : rows) {
      std::cout << r.j << "," << r.gap.str() << ",";
      if (r.witness) std::cout << set_str(*r.witness);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_corpus_verify(const Options& opt) {
  echo_config(opt, "corpus-verify");
  std::ifstream in(opt.manifest);
  require(in.good(), "IO", "cannot open manifest '" + opt.manifest + "'");
  Json manifest;
  try {
    in >> manifest;
  } catch (const std::exception& e) {
    fail("PARSE", std::string("manifest: ") + e.what());
  }
  const std::string dir = opt.manifest.substr(0, opt.manifest.find_last_of('/') + 1);

  bool all_ok = true;
  for (const auto& entry : manifest.at("fixtures")) {
    const std::string name = entry.at("name").get<std::string>();
    const std::string file = dir + entry.at("file").get<std::string>();
    std::ifstream fin(file);
    if (!fin.good()) {
      std::cout << name << ": MISSING " << file << "\n";
      all_ok = false;
      continue;
    }
    Json payload;
    fin >> payload;
    const std::string checksum = fixture_checksum(payload);
    if (checksum != entry.at("checksum").get<std::string>()) {
      std::cout << name << ": CHECKSUM MISMATCH (" << checksum << ")\n";
      all_ok = false;
      continue;
    }
    const Fixture fx = fixture_from_json(payload);
    const auto failures = verify_expected_block(fx);
    if (failures.empty()) {
      std::cout << name << ": ok (" << fx.expected.size() << " expected value(s))\n";
    } else {
      all_ok = false;
      for (const auto& f : failures) std::cout << name << ": " << f << "\n";
    }
  }
  return all_ok ? kExitOk : kExitViolation;
}

int cmd_corpus_emit(const Options& opt) {
  echo_config(opt, "corpus-emit");
  write_corpus(opt.dir);
  std::cout << "wrote corpus to " << opt.dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-triangular set-function toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "table, records or csv");
    sub->add_option("--seed", opt.seed, "seed for sampled index maps");
    sub->add_option("--phi-random,--horizon-phi", opt.phi_random,
                    "random index maps per check");
  };

  auto* check = app.add_subcommand("check", "triangularity, monotonicity and minimal k");
  check->add_option("--fixture", opt.fixture)->required();
  check->add_option("--k", opt.k_override, "override the fixture's k");
  add_common(check);

  auto* semivar = app.add_subcommand("semivar", "full semivariation table");
  semivar->add_option("--fixture", opt.fixture)->required();
  add_common(semivar);

  auto* harness = app.add_subcommand("harness", "instance-level limit-theorem check");
  harness->add_option("--fixture", opt.fixture)->required();
  harness->add_option("--theorem", opt.theorem, "BJ, N, VHS or S")->required();
  harness->add_option("--k", opt.k_override, "override the fixture's k");
  add_common(harness);

  auto* drew = app.add_subcommand("drewnowski", "continuous-restriction extraction");
  drew->add_option("--weights", opt.weights, "alternating-power, geometric or zero");
  drew->add_option("--param", opt.param, "rule parameter (exponent or ratio)");
  drew->add_option("--levels", opt.levels);
  drew->add_option("--targets", opt.targets, "comma-separated level targets (default 1/l)");
  drew->add_option("--width,--horizon-width", opt.width, "residue search width");
  drew->add_option("--depth,--horizon-depth", opt.depth, "verification chain depth");
  add_common(drew);

  auto* gap = app.add_subcommand("schur-gap", "whole-ground gap table (plot-ready)");
  gap->add_option("--fixture", opt.fixture)->required();
  gap->add_option("--n", opt.atoms, "ground size (must match the fixture)");
  add_common(gap);

  auto* verify = app.add_subcommand("corpus-verify", "re-verify the fixture corpus");
  verify->add_option("--manifest", opt.manifest)->required();
  add_common(verify);

  auto* emit = app.add_subcommand("corpus-emit", "regenerate the fixture corpus");
  emit->add_option("--dir", opt.dir);
  add_common(emit);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(opt);
    if (semivar->parsed()) return cmd_semivar(opt);
    if (harness->parsed()) return cmd_harness(opt);
    if (drew->parsed()) return cmd_drewnowski(opt);
    if (gap->parsed()) return cmd_schur_gap(opt);
    if (verify->parsed()) return cmd_corpus_verify(opt);
    if (emit->parsed()) return cmd_corpus_emit(opt);
  } catch (const ktri::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
