#include "ktri/regulator.hpp"

#include <random>
#include <sstream>

#include "ktri/error.hpp"

namespace ktri {

IndexMap::IndexMap(std::vector<int> columns) : columns_(std::move(columns)) {
  require(!columns_.empty(), "EMPTY-INDEX-MAP", "index map needs at least one row");
  for (int c : columns_)
    require(c >= 1, "BAD-COLUMN", "index map column values are 1-based");
}

IndexMap IndexMap::constant(int column, std::size_t rows) {
  return IndexMap(std::vector<int>(rows, column));
}

IndexMap IndexMap::staircase(int offset, std::size_t rows, int max_column) {
  std::vector<int> cols(rows);
  for (std::size_t t = 0; t < rows; ++t)
    cols[t] = std::min<int>(static_cast<int>(t) + 1 + offset, max_column);
  return IndexMap(std::move(cols));
}

int IndexMap::min_column() const {
  int m = columns_[0];
  for (int c : columns_) m = std::min(m, c);
  return m;
}

IndexMap IndexMap::shifted(std::size_t n) const {
  std::vector<int> cols(columns_.size());
  for (std::size_t t = 0; t < columns_.size(); ++t)
    cols[t] = columns_[std::min(t + n, columns_.size() - 1)];
  return IndexMap(std::move(cols));
}

bool IndexMap::pointwise_leq(const IndexMap& o) const {
  if (columns_.size() != o.columns_.size()) return false;
  for (std::size_t t = 0; t < columns_.size(); ++t)
    if (columns_[t] > o.columns_[t]) return false;
  return true;
}

std::string IndexMap::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t t = 0; t < columns_.size(); ++t) {
    if (t) os << ',';
    os << columns_[t];
  }
  os << ']';
  return os.str();
}

Regulator::Regulator(std::vector<std::vector<LatticeValue>> entries, LatticeValue bound)
    : entries_(std::move(entries)), bound_(std::move(bound)) {
  validate();
}

Regulator::Regulator(std::vector<std::vector<LatticeValue>> entries)
    : entries_(std::move(entries)), bound_() {
  require(!entries_.empty() && !entries_[0].empty(), "EMPTY-REGULATOR",
          "regulator needs at least one row and column");
  bound_ = entries_[0][0];
  for (const auto& row : entries_)
    for (const auto& e : row) bound_ = bound_.join(e);
  validate();
}

void Regulator::validate() const {
  require(!entries_.empty() && !entries_[0].empty(), "EMPTY-REGULATOR",
          "regulator needs at least one row and column");
  const std::size_t cols = entries_[0].size();
  for (std::size_t t = 0; t < entries_.size(); ++t) {
    require(entries_[t].size() == cols, "RAGGED-REGULATOR",
            "regulator row " + std::to_string(t + 1) + " has a different length");
    // Each row must be a truncated o-sequence below the common bound.
    for (std::size_t l = 0; l < cols; ++l) {
      const auto& e = entries_[t][l];
      require(e.is_nonneg(), "NEGATIVE-ENTRY",
              "regulator entry (" + std::to_string(t + 1) + "," + std::to_string(l + 1) +
                  ") is negative");
      require(leq(e, bound_), "BOUND-EXCEEDED",
              "regulator entry (" + std::to_string(t + 1) + "," + std::to_string(l + 1) +
                  ") exceeds the declared bound");
      if (l + 1 < cols)
        require(leq(entries_[t][l + 1], e), "NOT-NON-INCREASING",
                "regulator row " + std::to_string(t + 1) + " increases at column " +
                    std::to_string(l + 2));
    }
  }
}

Regulator Regulator::scaled(const Rational& c) const {
  require(c.sign() >= 0, "NEGATIVE-SCALE", "regulator scale must be non-negative");
  auto entries = entries_;
  for (auto& row : entries)
    for (auto& e : row) e = e.scaled(c);
  return Regulator(std::move(entries), bound_.scaled(c));
}

Regulator Regulator::added(const Regulator& o) const {
  require(same_shape(o), "DIMENSION-MISMATCH", "regulator sum needs matching shapes");
  auto entries = entries_;
  for (std::size_t t = 0; t < entries.size(); ++t)
    for (std::size_t l = 0; l < entries[t].size(); ++l) entries[t][l] = entries[t][l] + o.entries_[t][l];
  return Regulator(std::move(entries), bound_ + o.bound_);
}

Regulator Regulator::joined(const Regulator& o) const {
  require(same_shape(o), "DIMENSION-MISMATCH", "regulator join needs matching shapes");
  auto entries = entries_;
  for (std::size_t t = 0; t < entries.size(); ++t)
    for (std::size_t l = 0; l < entries[t].size(); ++l)
      entries[t][l] = entries[t][l].join(o.entries_[t][l]);
  return Regulator(std::move(entries), bound_.join(o.bound_));
}

Regulator Regulator::zero(std::size_t rows, std::size_t cols, const LatticeValue& shape) {
  const LatticeValue z = LatticeValue::zero_like(shape);
  return Regulator(std::vector<std::vector<LatticeValue>>(rows, std::vector<LatticeValue>(cols, z)),
                   z);
}

Regulator Regulator::constant_rows(const OSequence& row, std::size_t rows) {
  return Regulator(std::vector<std::vector<LatticeValue>>(rows, row.values()));
}

bool Regulator::same_shape(const Regulator& o) const {
  return row_count() == o.row_count() && column_count() == o.column_count();
}

LatticeValue regulator_sup(const Regulator& reg, const IndexMap& phi) {
  require(phi.rows() == reg.row_count(), "DIMENSION-MISMATCH",
          "index map has " + std::to_string(phi.rows()) + " rows, regulator has " +
              std::to_string(reg.row_count()));
  LatticeValue s = LatticeValue::zero_like(reg.bound());
  for (std::size_t t = 0; t < reg.row_count(); ++t) {
    const int col = phi.at_row(t);
    require(col >= 1 && static_cast<std::size_t>(col) <= reg.column_count(), "DIMENSION-MISMATCH",
            "index map column " + std::to_string(col) + " outside 1.." +
                std::to_string(reg.column_count()));
    s = s.join(reg.entry(t, static_cast<std::size_t>(col) - 1));
  }
  return s;
}

Regulator regulator_from_o_sequence(const OSequence& sigma, std::optional<std::size_t> rows) {
  return Regulator::constant_rows(sigma, rows.value_or(sigma.size()));
}

ExtractedOSequence o_sequence_from_regulator(const Regulator& reg,
                                             const std::vector<LatticeValue>& targets) {
  require(!targets.empty(), "EMPTY-TARGETS", "need at least one target level");
  for (std::size_t p = 0; p + 1 < targets.size(); ++p)
    require(leq(targets[p + 1], targets[p]) && targets[p + 1] != targets[p], "BAD-TARGETS",
            "targets must be strictly decreasing");

  ExtractedOSequence out;
  for (std::size_t p = 0; p < targets.size(); ++p) {
    std::vector<int> cols(reg.row_count());
    for (std::size_t t = 0; t < reg.row_count(); ++t) {
      bool found = false;
      for (std::size_t l = 0; l < reg.column_count(); ++l) {
        if (leq(reg.entry(t, l), targets[p])) {
          cols[t] = static_cast<int>(l) + 1;
          found = true;
          break;
        }
      }
      if (!found)
        fail("NO-SUCH-COLUMN", "row " + std::to_string(t + 1) +
                                   " never descends below target " + targets[p].str() +
                                   " within " + std::to_string(reg.column_count()) + " columns");
    }
    IndexMap phi(std::move(cols));
    out.sigmas.push_back(regulator_sup(reg, phi));
    out.phis.push_back(std::move(phi));
  }
  return out;
}

Regulator fremlin_combine(const std::vector<Regulator>& regs, const LatticeValue& u) {
  require(!regs.empty(), "EMPTY-REGULATOR-LIST", "need at least one regulator to combine");
  require(u.is_nonneg(), "NEGATIVE-ENTRY", "cap element u must be non-negative");
  const std::size_t rows = regs[0].row_count();
  const std::size_t cols = regs[0].column_count();
  for (const auto& r : regs)
    require(r.same_shape(regs[0]), "DIMENSION-MISMATCH",
            "regulators to combine must share the truncation shape");

  std::vector<LatticeValue> combined_row;
  combined_row.reserve(cols);
  for (std::size_t l = 0; l < cols; ++l) {
    LatticeValue sum = LatticeValue::zero_like(u);
    for (const auto& r : regs) {
      LatticeValue colsup = LatticeValue::zero_like(u);
      for (std::size_t t = 0; t < rows; ++t) colsup = colsup.join(r.entry(t, l));
      sum = sum + colsup;
    }
    combined_row.push_back(u.meet(sum));
  }
  return Regulator(std::vector<std::vector<LatticeValue>>(rows, std::move(combined_row)), u);
}

std::vector<IndexMap> sample_phis(std::size_t rows, std::size_t columns, const PhiConfig& config) {
  require(rows >= 1 && columns >= 1, "EMPTY-REGULATOR", "phi sampling needs a nonempty shape");
  std::vector<IndexMap> phis;
  if (config.constants)
    for (std::size_t c = 1; c <= columns; ++c) phis.push_back(IndexMap::constant(static_cast<int>(c), rows));
  if (config.staircases)
    for (std::size_t off = 0; off < columns; ++off)
      phis.push_back(IndexMap::staircase(static_cast<int>(off), rows, static_cast<int>(columns)));
  // mt19937_64 with explicit modulo keeps the stream identical across
  // platforms; the slight modulo bias is irrelevant here.
  std::mt19937_64 gen(config.seed);
  for (std::size_t i = 0; i < config.random_count; ++i) {
    std::vector<int> cols(rows);
    for (auto& c : cols) c = static_cast<int>(gen() % columns) + 1;
    phis.push_back(IndexMap(std::move(cols)));
  }
  return phis;
}

LatticeValue distributivity_infimum_estimate(const Regulator& reg,
                                             const std::vector<IndexMap>& phis) {
  require(!phis.empty(), "EMPTY-INDEX-MAP", "need at least one sampled index map");
  LatticeValue best = regulator_sup(reg, phis[0]);
  for (std::size_t i = 1; i < phis.size(); ++i) best = best.meet(regulator_sup(reg, phis[i]));
  return best;
}

}  // namespace ktri
