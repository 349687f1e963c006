#include "ktri/convergence.hpp"

#include <sstream>

#include "ktri/error.hpp"

namespace ktri {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HoldsAtHorizon: return "HOLDS-AT-HORIZON";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::HypothesisNotMet: return "HYPOTHESIS-NOT-MET";
  }
  return "?";
}

std::string Witness::str() const {
  std::ostringstream os;
  os << what;
  if (!indices.empty()) {
    os << " at";
    for (long i : indices) os << ' ' << i;
  }
  if (phi) os << " phi=" << *phi;
  if (value) os << " value=" << value->str();
  return os.str();
}

namespace {

Horizons make_horizons(const Regulator& reg, std::size_t seq_len, std::size_t phi_count,
                       std::uint64_t seed) {
  Horizons h;
  h.regulator_rows = reg.row_count();
  h.regulator_columns = reg.column_count();
  h.sequence_length = seq_len;
  h.phi_count = phi_count;
  h.seed = seed;
  return h;
}

// Last index whose deviation is not dominated by `sup`, or nullopt.
std::optional<std::size_t> last_escape(const std::vector<LatticeValue>& seq,
                                       const LatticeValue& limit, const LatticeValue& sup) {
  for (std::size_t i = seq.size(); i-- > 0;)
    if (!leq((seq[i] - limit).abs(), sup)) return i;
  return std::nullopt;
}

}  // namespace

Certificate d_converges(const std::vector<LatticeValue>& seq, const LatticeValue& limit,
                        const Regulator& reg, const std::vector<IndexMap>& phis) {
  require(!seq.empty(), "EMPTY-SEQUENCE", "d_converges needs a nonempty sequence");
  Certificate cert;
  cert.regulator_used = reg;
  cert.horizons = make_horizons(reg, seq.size(), phis.size(), 0);
  for (const auto& phi : phis) {
    const LatticeValue sup = regulator_sup(reg, phi);
    const auto escape = last_escape(seq, limit, sup);
    if (escape && *escape == seq.size() - 1) {
      cert.verdict = Verdict::Violated;
      Witness w;
      w.what = "no tail of the sequence stays within the regulator sup";
      w.indices = {static_cast<long>(*escape) + 1};
      w.value = (seq[*escape] - limit).abs();
      w.phi = phi.str();
      cert.witness = std::move(w);
      return cert;
    }
  }
  cert.verdict = Verdict::HoldsAtHorizon;
  return cert;
}

Certificate d_converges(const std::vector<LatticeValue>& seq, const LatticeValue& limit,
                        const Regulator& reg, const PhiConfig& config) {
  auto cert = d_converges(seq, limit, reg, sample_phis(reg.row_count(), reg.column_count(), config));
  cert.horizons.seed = config.seed;
  return cert;
}

std::vector<std::vector<std::size_t>> all_subsequences(std::size_t n, std::size_t min_len) {
  require(n <= 16, "HORIZON-TOO-LARGE", "full subsequence enumeration is capped at length 16");
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) < min_len) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    out.push_back(std::move(idx));
  }
  return out;
}

namespace {

std::vector<LatticeValue> pick(const std::vector<LatticeValue>& seq,
                               const std::vector<std::size_t>& idx) {
  std::vector<LatticeValue> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(seq[i]);
  return out;
}

// Does some sub-subsequence that keeps the parent's last element converge?
bool has_convergent_tail_subsubsequence(const std::vector<LatticeValue>& seq,
                                        const std::vector<std::size_t>& sub,
                                        const LatticeValue& limit, const Regulator& reg,
                                        const std::vector<IndexMap>& phis) {
  const std::size_t m = sub.size();
  const std::size_t min_len = std::min<std::size_t>(3, m);
  require(m <= 16, "HORIZON-TOO-LARGE", "sub-subsequence enumeration is capped at length 16");
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (!(mask & (1u << (m - 1)))) continue;  // must keep the last element
    if (static_cast<std::size_t>(__builtin_popcount(mask)) < min_len) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) idx.push_back(sub[i]);
    if (d_converges(pick(seq, idx), limit, reg, phis).holds()) return true;
  }
  return false;
}

}  // namespace

Certificate subsequence_principle_check(const std::vector<LatticeValue>& seq,
                                        const LatticeValue& limit, const Regulator& reg,
                                        const std::vector<std::vector<std::size_t>>& subsequences,
                                        const PhiConfig& config) {
  const auto phis = sample_phis(reg.row_count(), reg.column_count(), config);
  Certificate direct = d_converges(seq, limit, reg, phis);
  direct.horizons.seed = config.seed;
  if (direct.holds()) {
    direct.detail = "sequence (D)-converges; principle instance holds";
    return direct;
  }

  // Contrapositive: find a selected subsequence with no convergent
  // tail-faithful sub-subsequence.
  for (const auto& sub : subsequences) {
    if (sub.empty()) continue;
    if (!has_convergent_tail_subsubsequence(seq, sub, limit, reg, phis)) {
      Certificate cert;
      cert.verdict = Verdict::Violated;
      cert.regulator_used = reg;
      cert.horizons = direct.horizons;
      Witness w;
      w.what = "subsequence with no (D)-convergent sub-subsequence";
      for (std::size_t i : sub) w.indices.push_back(static_cast<long>(i) + 1);
      cert.witness = std::move(w);
      cert.detail = "sequence does not (D)-converge; contrapositive witness found";
      return cert;
    }
  }

  // Unreachable for selections that include the full sequence: the full
  // sequence itself is then the witness. Reported as a violation so the
  // inconsistency is loud, not silent.
  Certificate cert;
  cert.verdict = Verdict::Violated;
  cert.regulator_used = reg;
  cert.horizons = direct.horizons;
  Witness w;
  w.what = "sequence diverges yet every selected subsequence has a convergent sub-subsequence";
  cert.witness = std::move(w);
  cert.detail = "principle instance inconsistent at horizon; selection likely too sparse";
  return cert;
}

Certificate fremlin_property_check(const std::vector<Regulator>& regs, const LatticeValue& u,
                                   const Regulator& combined, const std::vector<IndexMap>& phis) {
  require(!regs.empty(), "EMPTY-REGULATOR-LIST", "nothing to check");
  Certificate cert;
  cert.regulator_used = combined;
  cert.horizons.regulator_rows = combined.row_count();
  cert.horizons.regulator_columns = combined.column_count();
  cert.horizons.phi_count = phis.size();
  for (const auto& phi : phis) {
    const LatticeValue rhs = regulator_sup(combined, phi);
    LatticeValue partial = LatticeValue::zero_like(u);
    for (std::size_t q = 1; q <= regs.size(); ++q) {
      partial = partial + regulator_sup(regs[q - 1], phi.shifted(q));
      if (!leq(u.meet(partial), rhs)) {
        cert.verdict = Verdict::Violated;
        Witness w;
        w.what = "capped shifted partial sum escapes the combined regulator";
        w.indices = {static_cast<long>(q)};
        w.value = u.meet(partial);
        w.phi = phi.str();
        cert.witness = std::move(w);
        return cert;
      }
    }
  }
  cert.verdict = Verdict::HoldsAtHorizon;
  return cert;
}

}  // namespace ktri
