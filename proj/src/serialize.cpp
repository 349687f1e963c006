#include "ktri/serialize.hpp"

#include <fstream>

#include "ktri/convergence.hpp"
#include "ktri/error.hpp"
#include "ktri/schur.hpp"

namespace ktri {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const LatticeValue& v) {
  if (v.is_scalar()) return v.as_rational().str();
  Json arr = Json::array();
  for (const auto& c : v.components()) arr.push_back(c.str());
  return arr;
}

Json to_json(const Regulator& reg) {
  Json j;
  j["rows"] = reg.row_count();
  j["columns"] = reg.column_count();
  Json entries = Json::array();
  for (const auto& row : reg.entries()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    entries.push_back(std::move(r));
  }
  j["entries"] = std::move(entries);
  j["bound"] = to_json(reg.bound());
  return j;
}

Json to_json(const IndexMap& phi) {
  Json arr = Json::array();
  for (int c : phi.columns()) arr.push_back(c);
  return arr;
}

Json set_to_json(SetMask mask) {
  Json arr = Json::array();
  for (int a : atoms_of(mask)) arr.push_back(a);
  return arr;
}

SetMask set_from_json(const Json& j, const FiniteAlgebra& algebra) {
  require(j.is_array(), "PARSE", "sets are arrays of atoms");
  std::vector<int> atoms;
  for (const auto& a : j) atoms.push_back(a.get<int>());
  return mask_from_atoms(atoms, algebra);
}

Json to_json(const Certificate& cert) {
  Json j;
  j["verdict"] = verdict_name(cert.verdict);
  if (cert.witness) {
    Json w;
    w["what"] = cert.witness->what;
    w["indices"] = cert.witness->indices;
    if (cert.witness->set_mask) w["set"] = set_to_json(*cert.witness->set_mask);
    if (cert.witness->value) w["value"] = to_json(*cert.witness->value);
    if (cert.witness->phi) w["phi"] = *cert.witness->phi;
    j["witness"] = std::move(w);
  }
  Json h;
  h["regulator_rows"] = cert.horizons.regulator_rows;
  h["regulator_columns"] = cert.horizons.regulator_columns;
  h["sequence_length"] = cert.horizons.sequence_length;
  h["phi_count"] = cert.horizons.phi_count;
  h["seed"] = cert.horizons.seed;
  j["horizons"] = std::move(h);
  if (!cert.detail.empty()) j["detail"] = cert.detail;
  return j;
}

Json to_json(const SetFunction& m) {
  Json j;
  j["atoms"] = m.atoms();
  if (m.is_series_backed()) {
    j["backing"] = "series";
    Json w = Json::array();
    for (const auto& x : m.weights()) w.push_back(x.str());
    j["weights"] = std::move(w);
    if (m.tail_bound_desc()) j["tail_bound"] = *m.tail_bound_desc();
  } else {
    j["backing"] = "table";
    Json values = Json::array();
    for (SetMask a = 0; a < m.algebra().set_count(); ++a) values.push_back(to_json(m.eval(a)));
    j["values"] = std::move(values);
  }
  return j;
}

Json to_json(const DecayProfile& profile) {
  Json j;
  j["kind"] = profile.kind == DecayProfile::Kind::Chain ? "chain" : "disjoint-sequence";
  j["uniform"] = profile.uniform;
  Json labels = Json::array();
  for (SetMask s : profile.labels) labels.push_back(set_to_json(s));
  j["labels"] = std::move(labels);
  Json values = Json::array();
  for (const auto& v : profile.values) values.push_back(to_json(v));
  j["values"] = std::move(values);
  return j;
}

Json to_json(const HarnessReport& report) {
  Json j;
  j["theorem"] = theorem_name(report.theorem);
  j["verdict"] = report.verdict;
  j["equibound"] = report.equibound;
  Json hyps = Json::array();
  for (const auto& h : report.hypotheses) {
    Json e;
    e["name"] = h.name;
    e["met"] = h.met;
    if (h.witness) e["witness"] = h.witness->str();
    if (!h.detail.empty()) e["detail"] = h.detail;
    hyps.push_back(std::move(e));
  }
  j["hypotheses"] = std::move(hyps);
  Json concls = Json::array();
  for (const auto& c : report.conclusions) {
    Json e;
    e["name"] = c.name;
    e["verdict"] = verdict_name(c.verdict);
    if (c.witness) e["witness"] = c.witness->str();
    e["regulator"] = c.regulator_desc;
    concls.push_back(std::move(e));
  }
  j["conclusions"] = std::move(concls);
  if (!report.gaps.empty()) {
    Json gaps = Json::array();
    for (const auto& g : report.gaps) {
      Json e;
      e["j"] = g.j;
      e["gap"] = to_json(g.gap);
      if (g.witness) e["witness"] = set_to_json(*g.witness);
      gaps.push_back(std::move(e));
    }
    j["gaps"] = std::move(gaps);
  }
  return j;
}

Json to_json(const ExtractionTrace& trace) {
  Json j;
  j["function"] = trace.function_desc;
  j["sequence"] = trace.sequence_desc;
  j["width"] = trace.width;
  j["family_mode"] = trace.family_mode;
  Json levels = Json::array();
  for (std::size_t i = 0; i < trace.levels.size(); ++i) {
    const auto& l = trace.levels[i];
    Json e;
    e["level"] = l.level;
    if (trace.family_mode) e["member"] = l.member;
    e["residue"] = l.chosen_residue;
    e["target"] = l.target.str();
    e["attained"] = l.attained.str();
    e["block_first"] = l.block_first;
    e["residue_path"] = trace.blocks[i].residue_path();
    e["block_prefix"] = trace.blocks[i].prefix(8);
    levels.push_back(std::move(e));
  }
  j["levels"] = std::move(levels);
  j["output_indices"] = trace.output_indices;
  if (trace.family_mode) j["thresholds"] = trace.thresholds;
  return j;
}

Rational rational_from_json(const Json& j) {
  require(j.is_string(), "PARSE", "rationals are \"p/q\" strings");
  return Rational::parse(j.get<std::string>());
}

LatticeValue lattice_value_from_json(const Json& j) {
  if (j.is_string()) return LatticeValue::scalar(rational_from_json(j));
  require(j.is_array(), "PARSE", "lattice values are strings or arrays of strings");
  std::vector<Rational> comps;
  for (const auto& c : j) comps.push_back(rational_from_json(c));
  return LatticeValue::vector(std::move(comps));
}

Regulator regulator_from_json(const Json& j) {
  require(j.contains("entries"), "PARSE", "regulator record needs entries");
  std::vector<std::vector<LatticeValue>> entries;
  for (const auto& row : j.at("entries")) {
    std::vector<LatticeValue> r;
    for (const auto& e : row) r.push_back(lattice_value_from_json(e));
    entries.push_back(std::move(r));
  }
  if (j.contains("bound")) return Regulator(std::move(entries), lattice_value_from_json(j.at("bound")));
  return Regulator(std::move(entries));
}

SetFunction set_function_from_json(const Json& j) {
  require(j.contains("atoms"), "PARSE", "set function record needs an atom count");
  const int atoms = j.at("atoms").get<int>();
  const std::string backing = j.value("backing", "series");
  if (backing == "series") {
    std::vector<Rational> weights;
    for (const auto& w : j.at("weights")) weights.push_back(rational_from_json(w));
    std::optional<std::string> tail;
    if (j.contains("tail_bound")) tail = j.at("tail_bound").get<std::string>();
    return SetFunction::from_series(FiniteAlgebra(atoms), std::move(weights), std::move(tail));
  }
  if (backing == "table") {
    std::vector<LatticeValue> values;
    for (const auto& v : j.at("values")) values.push_back(lattice_value_from_json(v));
    return SetFunction::from_table(FiniteAlgebra(atoms), std::move(values));
  }
  fail("PARSE", "unknown backing '" + backing + "'");
}

Fixture fixture_from_json(const Json& j) {
  Fixture fx;
  fx.raw = j;
  fx.type = j.value("type", "set_function");
  if (j.contains("k")) fx.k = rational_from_json(j.at("k"));
  fx.harness.k = fx.k;

  if (fx.type == "set_function") {
    require(j.contains("function"), "PARSE", "set_function fixture needs a function record");
    Json fj = j.at("function");
    SetFunction base = set_function_from_json(fj);
    if (fj.contains("scale")) base = base.scaled(rational_from_json(fj.at("scale")));
    fx.function = std::move(base);
  } else if (fx.type == "family") {
    require(j.contains("family"), "PARSE", "family fixture needs a family record");
    const Json& fj = j.at("family");
    std::vector<SetFunction> members;
    for (const auto& mj : fj.at("members")) {
      SetFunction base = set_function_from_json(mj);
      if (mj.contains("scale")) base = base.scaled(rational_from_json(mj.at("scale")));
      members.push_back(std::move(base));
    }
    std::optional<SetFunction> limit;
    if (fj.contains("declared_limit")) {
      Json lj = fj.at("declared_limit");
      SetFunction base = set_function_from_json(lj);
      if (lj.contains("scale")) base = base.scaled(rational_from_json(lj.at("scale")));
      limit = std::move(base);
    }
    std::optional<Regulator> reg;
    if (fj.contains("convergence_regulator"))
      reg = regulator_from_json(fj.at("convergence_regulator"));
    fx.family = SetFunctionFamily(std::move(members), std::move(limit), std::move(reg));
  } else {
    fail("PARSE", "unknown fixture type '" + fx.type + "'");
  }

  const FiniteAlgebra algebra =
      fx.function ? fx.function->algebra() : fx.family->algebra();
  if (j.contains("fixtures")) {
    const Json& hj = j.at("fixtures");
    if (hj.contains("disjoint_seqs"))
      for (const auto& seq : hj.at("disjoint_seqs")) {
        std::vector<SetMask> sets;
        for (const auto& s : seq) sets.push_back(set_from_json(s, algebra));
        fx.harness.disjoint_seqs.push_back(std::move(sets));
      }
    if (hj.contains("chains"))
      for (const auto& cj : hj.at("chains")) {
        Chain chain;
        for (const auto& s : cj.at("sets")) chain.sets.push_back(set_from_json(s, algebra));
        chain.truncated = cj.value("truncated", false);
        fx.harness.chains.push_back(std::move(chain));
      }
    if (hj.contains("eta")) fx.harness.eta = Submeasure(set_function_from_json(hj.at("eta")));
    if (hj.contains("sbound_regulator"))
      fx.harness.sbound_reg = regulator_from_json(hj.at("sbound_regulator"));
    if (hj.contains("continuity_regulator"))
      fx.harness.continuity_reg = regulator_from_json(hj.at("continuity_regulator"));
  }
  if (j.contains("expected")) fx.expected = j.at("expected");
  return fx;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "IO", "cannot open fixture file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("PARSE", "fixture '" + path + "': " + e.what());
  }
  return fixture_from_json(j);
}

namespace {

const SetFunction& fixture_function(const Fixture& fx) {
  require(fx.function.has_value(), "PARSE", "this check needs a set_function fixture");
  return *fx.function;
}

bool expected_entry_ok(const Fixture& fx, const Json& e, std::string& message) {
  const std::string check = e.at("check").get<std::string>();
  if (check == "eval") {
    const auto& m = fixture_function(fx);
    const SetMask s = set_from_json(e.at("set"), m.algebra());
    const LatticeValue got = m.eval(s);
    const LatticeValue want = lattice_value_from_json(e.at("value"));
    if (got != want) {
      message = "eval(" + set_str(s) + ") = " + got.str() + ", expected " + want.str();
      return false;
    }
    return true;
  }
  if (check == "member_eval") {
    require(fx.family.has_value(), "PARSE", "member_eval needs a family fixture");
    const std::size_t j = e.at("j").get<std::size_t>();
    const SetMask s = set_from_json(e.at("set"), fx.family->algebra());
    const LatticeValue got = fx.family->member(j - 1).eval(s);
    const LatticeValue want = lattice_value_from_json(e.at("value"));
    if (got != want) {
      message = "member " + std::to_string(j) + " eval(" + set_str(s) + ") = " + got.str() +
                ", expected " + want.str();
      return false;
    }
    return true;
  }
  if (check == "semivariation") {
    const auto& m = fixture_function(fx);
    const SetMask s = set_from_json(e.at("set"), m.algebra());
    const LatticeValue got = semivariation_at(m, s);
    const LatticeValue want = lattice_value_from_json(e.at("value"));
    if (got != want) {
      message = "v(m)(" + set_str(s) + ") = " + got.str() + ", expected " + want.str();
      return false;
    }
    return true;
  }
  if (check == "minimal_k") {
    const auto got = minimal_k(fixture_function(fx));
    const Rational want = rational_from_json(e.at("value"));
    if (!got || *got != want) {
      message = "minimal k = " + (got ? got->str() : std::string("none")) + ", expected " +
                want.str();
      return false;
    }
    return true;
  }
  if (check == "k_triangular") {
    const Rational k = rational_from_json(e.at("k"));
    const auto report = check_k_triangular(fixture_function(fx), k);
    if (!report.k_triangular()) {
      message = "k-triangularity fails at k=" + k.str();
      return false;
    }
    return true;
  }
  if (check == "not_monotone") {
    const auto& m = fixture_function(fx);
    const auto cert = is_monotone(m);
    if (cert.holds()) {
      message = "function is monotone, expected a violation";
      return false;
    }
    const SetMask a = set_from_json(e.at("witness_a"), m.algebra());
    const SetMask b = set_from_json(e.at("witness_b"), m.algebra());
    if (!cert.witness || cert.witness->indices.size() != 2 ||
        cert.witness->indices[0] != static_cast<long>(a) ||
        cert.witness->indices[1] != static_cast<long>(b)) {
      message = "monotonicity witness is " + (cert.witness ? cert.witness->what : "missing") +
                ", expected (" + set_str(a) + ", " + set_str(b) + ")";
      return false;
    }
    return true;
  }
  if (check == "monotone") {
    if (!is_monotone(fixture_function(fx)).holds()) {
      message = "function is not monotone";
      return false;
    }
    return true;
  }
  if (check == "schur_gap") {
    require(fx.family.has_value(), "PARSE", "schur_gap needs a family fixture");
    const auto rows = schur_gap(*fx.family, fx.family->algebra().atoms());
    const std::size_t j = e.at("j").get<std::size_t>();
    require(j >= 1 && j <= rows.size(), "PARSE", "gap index out of range");
    const LatticeValue want = lattice_value_from_json(e.at("value"));
    if (rows[j - 1].gap != want) {
      message = "gap[" + std::to_string(j) + "] = " + rows[j - 1].gap.str() + ", expected " +
                want.str();
      return false;
    }
    if (e.contains("witness")) {
      const SetMask w = set_from_json(e.at("witness"), fx.family->algebra());
      if (!rows[j - 1].witness || *rows[j - 1].witness != w) {
        message = "gap witness mismatch at j=" + std::to_string(j);
        return false;
      }
    }
    return true;
  }
  if (check == "pointwise_converges") {
    require(fx.family.has_value(), "PARSE", "pointwise_converges needs a family fixture");
    PhiConfig config;
    config.random_count = 32;
    if (!fx.family->pointwise_convergence(config).holds()) {
      message = "pointwise convergence fails";
      return false;
    }
    return true;
  }
  if (check == "uniform_sbound_violated") {
    require(fx.family.has_value(), "PARSE", "uniform_sbound_violated needs a family fixture");
    require(!fx.harness.disjoint_seqs.empty(), "PARSE", "fixture carries no disjoint sequences");
    require(fx.family->convergence_regulator().has_value(), "PARSE", "fixture has no regulator");
    PhiConfig config;
    config.random_count = 32;
    const auto res = s_bounded_profile(*fx.family, fx.harness.disjoint_seqs[0], std::nullopt,
                                       *fx.family->convergence_regulator(), config);
    if (res.certificate.holds()) {
      message = "uniform (s)-boundedness unexpectedly holds";
      return false;
    }
    return true;
  }
  message = "unknown check '" + check + "'";
  return false;
}

}  // namespace

std::vector<std::string> verify_expected_block(const Fixture& fixture) {
  std::vector<std::string> failures;
  for (const auto& e : fixture.expected) {
    std::string message;
    if (!expected_entry_ok(fixture, e, message)) {
      const std::string prov = e.value("provenance", "?");
      failures.push_back("[" + prov + "] " + message);
    }
  }
  return failures;
}

std::string fixture_checksum(const Json& j) {
  const std::string dump = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[2 + 16 + 1];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace ktri
