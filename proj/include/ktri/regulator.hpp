#ifndef KTRI_REGULATOR_HPP
#define KTRI_REGULATOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ktri/o_sequence.hpp"

namespace ktri {

// A finite index map phi: {1..T} -> {1..L}, the truncated stand-in for an
// element of N^N. Column values are kept 1-based to match the usual
// double-sequence indexing a_{t,l}.
class IndexMap {
 public:
  explicit IndexMap(std::vector<int> columns);

  static IndexMap constant(int column, std::size_t rows);
  // phi(t) = min(t + offset, max_column), offset >= 0.
  static IndexMap staircase(int offset, std::size_t rows, int max_column);

  std::size_t rows() const { return columns_.size(); }
  int at_row(std::size_t t) const { return columns_[t]; }  // t is 0-based
  const std::vector<int>& columns() const { return columns_; }
  int min_column() const;

  // The truncated tail shift phi'(t) = phi(min(t + n, T)).
  IndexMap shifted(std::size_t n) const;

  bool pointwise_leq(const IndexMap& o) const;
  std::string str() const;

 private:
  std::vector<int> columns_;
};

// A truncated regulator ((D)-sequence): a T x L matrix of non-negative
// values, each row non-increasing in the column index, all entries below a
// common bound.
class Regulator {
 public:
  Regulator(std::vector<std::vector<LatticeValue>> entries, LatticeValue bound);
  explicit Regulator(std::vector<std::vector<LatticeValue>> entries);

  std::size_t row_count() const { return entries_.size(); }
  std::size_t column_count() const { return entries_[0].size(); }
  const LatticeValue& entry(std::size_t t, std::size_t l) const { return entries_[t][l]; }
  const std::vector<std::vector<LatticeValue>>& entries() const { return entries_; }
  const LatticeValue& bound() const { return bound_; }

  Regulator scaled(const Rational& c) const;              // c >= 0
  Regulator added(const Regulator& o) const;              // entrywise sum
  Regulator joined(const Regulator& o) const;             // entrywise max

  static Regulator zero(std::size_t rows, std::size_t cols, const LatticeValue& shape);
  static Regulator constant_rows(const OSequence& row, std::size_t rows);

  bool same_shape(const Regulator& o) const;

 private:
  void validate() const;

  std::vector<std::vector<LatticeValue>> entries_;
  LatticeValue bound_;
};

// sup_{t=1..T} a_{t, phi(t)} — the truncated join along an index map.
LatticeValue regulator_sup(const Regulator& reg, const IndexMap& phi);

// The constant-row regulator a_{t,l} = sigma_l. Every index map then
// satisfies sigma_{phi(1)} <= sup_t a_{t,phi(t)}.
Regulator regulator_from_o_sequence(const OSequence& sigma, std::optional<std::size_t> rows = {});

struct ExtractedOSequence {
  std::vector<LatticeValue> sigmas;  // sigma_p = regulator_sup(reg, phi_p)
  std::vector<IndexMap> phis;        // phi_p(t) = first column with entry <= target_p
  OSequence as_o_sequence() const { return OSequence(sigmas); }
};

// Converse direction: given per-level targets strictly decreasing toward
// zero, pick for each row the first column dominated by the target and
// return the resulting sups. Errors with NO-SUCH-COLUMN when a row never
// descends below a target within the truncation.
ExtractedOSequence o_sequence_from_regulator(const Regulator& reg,
                                             const std::vector<LatticeValue>& targets);

// A single regulator dominating every u-capped partial sum of tail-shifted
// sups of the inputs: for all q <= regs.size() and every phi,
//   u ^ sum_{n=1..q} sup_t regs[n](t, phi(min(t+n,T)))  <=  sup_t a(t, phi(t)).
// Construction: constant rows c_l = u ^ sum_n (column sup of regs[n] at l).
// The sum of column sups dominates each shifted partial sum because shifted
// maps only use columns phi(s) with s >= 2, while the left-hand row join
// reaches min_t phi(t); the cap by u preserves the inequality. The property
// is still re-checked, never trusted (see fremlin_property_check).
Regulator fremlin_combine(const std::vector<Regulator>& regs, const LatticeValue& u);

// Deterministic phi-sample family: all constant maps, all staircase maps,
// and `random_count` uniformly random maps drawn from the recorded seed.
struct PhiConfig {
  std::size_t random_count = 100;
  std::uint64_t seed = 0;
  bool constants = true;
  bool staircases = true;
};

std::vector<IndexMap> sample_phis(std::size_t rows, std::size_t columns, const PhiConfig& config);

// Sampling estimate (an upper bound) of inf over all index maps of
// regulator_sup. For the concrete carriers here the true infimum is zero;
// this estimator only demonstrates the descent, it is not a checked law.
LatticeValue distributivity_infimum_estimate(const Regulator& reg,
                                             const std::vector<IndexMap>& phis);

}  // namespace ktri

#endif  // KTRI_REGULATOR_HPP
