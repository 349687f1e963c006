#include "ktri/corpus_files.hpp"

#include <filesystem>
#include <fstream>

#include "ktri/corpus.hpp"
#include "ktri/error.hpp"

namespace ktri {

namespace {

Json expected(const char* check, const char* provenance) {
  Json e;
  e["check"] = check;
  e["provenance"] = provenance;
  return e;
}

Json atoms_json(std::initializer_list<int> atoms) {
  Json a = Json::array();
  for (int x : atoms) a.push_back(x);
  return a;
}

Json tail_chain_json(int atoms, int depth, bool truncated) {
  // {1..N} > {2..N} > ... > {depth..N}, optionally closed off by {}.
  Json sets = Json::array();
  const FiniteAlgebra algebra(atoms);
  for (int n = 1; n <= depth; ++n) {
    Json s = Json::array();
    for (int a = n; a <= atoms; ++a) s.push_back(a);
    sets.push_back(std::move(s));
  }
  if (!truncated) sets.push_back(Json::array());
  Json chain;
  chain["sets"] = std::move(sets);
  chain["truncated"] = truncated;
  return chain;
}

Json singleton_seq_json(int count) {
  Json seq = Json::array();
  for (int a = 1; a <= count; ++a) seq.push_back(atoms_json({a}));
  return seq;
}

std::vector<LatticeValue> chain_values(const SetFunction& m, int depth, bool to_empty) {
  std::vector<LatticeValue> values;
  const SetMask ground = m.algebra().ground();
  for (int n = 1; n <= depth; ++n)
    values.push_back(m.eval(ground & ~((SetMask{1} << (n - 1)) - 1)));
  if (to_empty) values.push_back(m.eval(0));
  return values;
}

std::vector<LatticeValue> singleton_values(const SetFunction& m, int count) {
  std::vector<LatticeValue> values;
  for (int a = 1; a <= count; ++a) values.push_back(m.eval(SetMask{1} << (a - 1)));
  return values;
}

NamedFixture measuroid_fixture(int atoms) {
  SetFunction m = gen_measuroid(atoms);
  Json j;
  j["type"] = "set_function";
  j["k"] = "1";
  j["function"] = to_json(m);

  Json exp = Json::array();
  {
    Json e = expected("eval", "literature");
    e["set"] = atoms_json({1, 3});
    e["value"] = "10/9";
    exp.push_back(std::move(e));
  }
  {
    Json e = expected("eval", "literature");
    e["set"] = atoms_json({1, 2, 3});
    e["value"] = "31/36";
    exp.push_back(std::move(e));
  }
  {
    Json e = expected("eval", "definition");
    e["set"] = Json::array();
    e["value"] = "0";
    exp.push_back(std::move(e));
  }
  {
    Json e = expected("k_triangular", "literature");
    e["k"] = "1";
    exp.push_back(std::move(e));
  }
  if (atoms == 3) {
    Json e = expected("semivariation", "independent");
    e["set"] = atoms_json({1, 2, 3});
    e["value"] = "10/9";
    exp.push_back(std::move(e));
    Json e2 = expected("minimal_k", "independent");
    e2["value"] = "1";
    exp.push_back(std::move(e2));
    Json e3 = expected("not_monotone", "literature");
    e3["witness_a"] = atoms_json({1, 3});
    e3["witness_b"] = atoms_json({1, 2, 3});
    exp.push_back(std::move(e3));
  }
  j["expected"] = std::move(exp);

  NamedFixture fx;
  fx.name = "measuroid_n" + std::to_string(atoms);
  fx.description = "alternating 1/n^2 series function on " + std::to_string(atoms) + " atoms";
  fx.payload = std::move(j);
  return fx;
}

NamedFixture scaled_family_fixture() {
  constexpr int kAtoms = 3;
  constexpr int kMembers = 20;
  SetFunction base = gen_measuroid(kAtoms);
  std::vector<Rational> scales;
  for (int i = 1; i <= kMembers; ++i) scales.push_back(Rational(1) + Rational(1, i));
  SetFunctionFamily family = gen_scaled_family(base, scales, Rational(1));

  Json j;
  j["type"] = "family";
  j["k"] = "1";
  Json fam;
  fam["algebra"] = Json{{"atoms", kAtoms}};
  Json members = Json::array();
  for (const auto& m : family.members()) members.push_back(to_json(m));
  fam["members"] = std::move(members);
  fam["declared_limit"] = to_json(*family.declared_limit());
  fam["convergence_regulator"] = to_json(*family.convergence_regulator());
  j["family"] = std::move(fam);

  Json fixtures;
  fixtures["disjoint_seqs"] = Json::array({singleton_seq_json(kAtoms)});
  fixtures["chains"] = Json::array({tail_chain_json(kAtoms, kAtoms, false)});
  // Property regulators from the members' own worst-case decay.
  std::vector<std::vector<LatticeValue>> seq_profiles, chain_profiles;
  for (const auto& m : family.members()) {
    seq_profiles.push_back(singleton_values(m, kAtoms));
    chain_profiles.push_back(chain_values(m, kAtoms, true));
  }
  fixtures["sbound_regulator"] = to_json(tail_sup_regulator(seq_profiles, kMembers));
  fixtures["continuity_regulator"] = to_json(tail_sup_regulator(chain_profiles, kMembers));
  // The monotone 1-subadditive envelope of the limit generates the topology.
  fixtures["eta"] = to_json(semivariation(*family.declared_limit()));
  j["fixtures"] = std::move(fixtures);

  Json exp = Json::array();
  {
    Json e = expected("schur_gap", "independent");
    e["j"] = 1;
    e["value"] = "10/9";
    e["witness"] = atoms_json({1, 3});
    exp.push_back(std::move(e));
  }
  {
    Json e = expected("schur_gap", "independent");
    e["j"] = 2;
    e["value"] = "5/9";
    e["witness"] = atoms_json({1, 3});
    exp.push_back(std::move(e));
  }
  {
    Json e = expected("member_eval", "independent");
    e["j"] = 1;
    e["set"] = atoms_json({1, 3});
    e["value"] = "20/9";
    exp.push_back(std::move(e));
  }
  exp.push_back(expected("pointwise_converges", "independent"));
  j["expected"] = std::move(exp);

  NamedFixture fx;
  fx.name = "scaled_measuroid_family_n3";
  fx.description = "members (1+1/j) times the running example, limit the example itself";
  fx.payload = std::move(j);
  return fx;
}

NamedFixture additive_family_fixture() {
  constexpr int kAtoms = 4;
  constexpr int kMembers = 10;
  std::vector<Rational> weights{Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5)};
  SetFunction base = make_series_setfunction(weights, kAtoms);
  std::vector<Rational> scales(kMembers, Rational(1));
  SetFunctionFamily family = gen_scaled_family(base, scales, Rational(1));

  Json j;
  j["type"] = "family";
  j["k"] = "1";
  Json fam;
  fam["algebra"] = Json{{"atoms", kAtoms}};
  Json members = Json::array();
  for (const auto& m : family.members()) members.push_back(to_json(m));
  fam["members"] = std::move(members);
  fam["declared_limit"] = to_json(*family.declared_limit());
  fam["convergence_regulator"] = to_json(*family.convergence_regulator());
  j["family"] = std::move(fam);

  Json fixtures;
  fixtures["disjoint_seqs"] = Json::array({singleton_seq_json(kAtoms)});
  fixtures["chains"] = Json::array({tail_chain_json(kAtoms, kAtoms, false)});
  std::vector<std::vector<LatticeValue>> seq_profiles{singleton_values(base, kAtoms)};
  std::vector<std::vector<LatticeValue>> chain_profiles{chain_values(base, kAtoms, true)};
  fixtures["sbound_regulator"] = to_json(tail_sup_regulator(seq_profiles, kMembers));
  fixtures["continuity_regulator"] = to_json(tail_sup_regulator(chain_profiles, kMembers));
  fixtures["eta"] = to_json(semivariation(base));
  j["fixtures"] = std::move(fixtures);

  Json exp = Json::array();
  {
    Json e = expected("member_eval", "definition");
    e["j"] = 1;
    e["set"] = atoms_json({1, 2});
    e["value"] = "5/6";
    exp.push_back(std::move(e));
  }
  exp.push_back(expected("pointwise_converges", "definition"));
  j["expected"] = std::move(exp);

  NamedFixture fx;
  fx.name = "additive_family_n4";
  fx.description = "constant family of one positive additive measure";
  fx.payload = std::move(j);
  return fx;
}

NamedFixture hump_family_fixture() {
  constexpr int kAtoms = 10;
  std::vector<SetMask> humps;
  for (int a = 1; a <= kAtoms; ++a) humps.push_back(SetMask{1} << (a - 1));
  SetFunctionFamily family = gen_hump_family(kAtoms, humps);

  Json j;
  j["type"] = "family";
  j["k"] = "1";
  Json fam;
  fam["algebra"] = Json{{"atoms", kAtoms}};
  Json members = Json::array();
  for (const auto& m : family.members()) members.push_back(to_json(m));
  fam["members"] = std::move(members);
  fam["declared_limit"] = to_json(*family.declared_limit());
  fam["convergence_regulator"] = to_json(*family.convergence_regulator());
  j["family"] = std::move(fam);

  Json fixtures;
  Json seq = Json::array();
  for (int a = 1; a <= kAtoms; ++a) seq.push_back(atoms_json({a}));
  fixtures["disjoint_seqs"] = Json::array({std::move(seq)});
  fixtures["chains"] = Json::array({tail_chain_json(kAtoms, kAtoms, true)});
  const Regulator& b = *family.convergence_regulator();
  fixtures["sbound_regulator"] = to_json(b);
  fixtures["continuity_regulator"] = to_json(b);
  // Null exactly on sets missing the first half of the atoms, so the
  // truncated tail chain is null while humps persist inside it.
  std::vector<LatticeValue> eta_table;
  const FiniteAlgebra algebra(kAtoms);
  const SetMask head = (SetMask{1} << (kAtoms / 2)) - 1;
  for (SetMask a = 0; a < algebra.set_count(); ++a)
    eta_table.push_back(LatticeValue::scalar(Rational(popcount(a & head), kAtoms / 2)));
  fixtures["eta"] = to_json(SetFunction::from_table(algebra, std::move(eta_table)));
  j["fixtures"] = std::move(fixtures);

  Json exp = Json::array();
  {
    Json e = expected("member_eval", "independent");
    e["j"] = 3;
    e["set"] = atoms_json({3});
    e["value"] = "1";
    exp.push_back(std::move(e));
  }
  {
    Json e = expected("member_eval", "definition");
    e["j"] = 3;
    e["set"] = Json::array();
    e["value"] = "0";
    exp.push_back(std::move(e));
  }
  exp.push_back(expected("uniform_sbound_violated", "independent"));
  j["expected"] = std::move(exp);

  NamedFixture fx;
  fx.name = "hump_family_n10";
  fx.description = "sliding-hump adversary: singleton indicator members, never uniformly small";
  fx.payload = std::move(j);
  return fx;
}

NamedFixture misscale_fixture() {
  constexpr int kAtoms = 12;
  constexpr int kDepth = 6;
  SetFunction m = gen_measuroid(kAtoms);

  Json j;
  j["type"] = "set_function";
  j["k"] = "1";
  j["function"] = to_json(m);

  Json fixtures;
  fixtures["disjoint_seqs"] = Json::array({singleton_seq_json(kDepth)});
  fixtures["chains"] = Json::array({tail_chain_json(kAtoms, kDepth, true)});
  std::vector<std::vector<LatticeValue>> chain_profiles{chain_values(m, kDepth, false)};
  fixtures["continuity_regulator"] = to_json(tail_sup_regulator(chain_profiles, kDepth));
  j["fixtures"] = std::move(fixtures);

  Json exp = Json::array();
  {
    Json e = expected("k_triangular", "literature");
    e["k"] = "1";
    exp.push_back(std::move(e));
  }
  j["expected"] = std::move(exp);

  NamedFixture fx;
  fx.name = "tight_scaling_n12";
  fx.description =
      "singleton values sit between 1x and 2x the chain-tail regulator: the factor-(k+1) "
      "scaling is needed, factor-k fails";
  fx.payload = std::move(j);
  return fx;
}

}  // namespace

std::vector<NamedFixture> standard_corpus() {
  std::vector<NamedFixture> out;
  out.push_back(measuroid_fixture(3));
  out.push_back(measuroid_fixture(8));
  out.push_back(scaled_family_fixture());
  out.push_back(additive_family_fixture());
  out.push_back(hump_family_fixture());
  out.push_back(misscale_fixture());
  return out;
}

Json corpus_manifest(const std::vector<NamedFixture>& fixtures) {
  Json manifest;
  Json list = Json::array();
  for (const auto& fx : fixtures) {
    Json e;
    e["name"] = fx.name;
    e["file"] = fx.name + ".json";
    e["description"] = fx.description;
    e["checksum"] = fixture_checksum(fx.payload);
    list.push_back(std::move(e));
  }
  manifest["fixtures"] = std::move(list);
  return manifest;
}

void write_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto fixtures = standard_corpus();
  for (const auto& fx : fixtures) {
    std::ofstream out(dir + "/" + fx.name + ".json");
    require(out.good(), "IO", "cannot write fixture " + fx.name);
    out << fx.payload.dump(1) << "\n";
  }
  std::ofstream out(dir + "/manifest.json");
  require(out.good(), "IO", "cannot write the corpus manifest");
  out << corpus_manifest(fixtures).dump(1) << "\n";
}

}  // namespace ktri
