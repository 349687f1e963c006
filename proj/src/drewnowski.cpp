#include "ktri/drewnowski.hpp"

#include <algorithm>
#include <random>

#include "ktri/error.hpp"

namespace ktri {

namespace {
constexpr long kElementLimit = 1L << 60;
}

Block::Block(int width) : width_(width) {
  require(width >= 2, "BAD-WIDTH", "block width must be >= 2");
}

Block Block::child(int residue) const {
  require(residue >= 1 && residue <= width_, "BAD-RESIDUE",
          "child residue must be in 1.." + std::to_string(width_));
  Block b = *this;
  b.path_.push_back(residue);
  return b;
}

bool Block::is_child_of(const Block& parent) const {
  if (width_ != parent.width_ || path_.size() != parent.path_.size() + 1) return false;
  return std::equal(parent.path_.begin(), parent.path_.end(), path_.begin());
}

long Block::element(long i) const {
  require(i >= 1, "BAD-INDEX", "block elements are indexed from 1");
  long e = i;
  // Deepest refinement first: position i of the child is position
  // width*(i-1)+r of its parent.
  for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
    require(e <= (kElementLimit - *it) / width_ + 1, "OVERFLOW",
            "block element exceeds the representable range");
    e = static_cast<long>(width_) * (e - 1) + *it;
  }
  return e;
}

bool Block::contains(long e) const {
  if (e < 1) return false;
  for (int r : path_) {
    if (e < r || (e - r) % width_ != 0) return false;
    e = (e - r) / width_ + 1;
  }
  return true;
}

std::vector<long> Block::prefix(std::size_t count) const {
  std::vector<long> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(element(static_cast<long>(i)));
  return out;
}

Block Block::from_path(int width, std::vector<int> path) {
  Block b(width);
  for (int r : path) b = b.child(r);
  return b;
}

Rational certified_union_bound(const CountableSetFunction& m,
                               const std::vector<long>& prefix_below_cut, long cut) {
  Rational pos(0), neg(0);
  for (long e : prefix_below_cut) {
    require(e < cut, "BAD-CUT", "prefix element at or beyond the cut");
    const Rational w = m.weight(e);
    if (w.sign() > 0) pos += w;
    else neg -= w;
  }
  // Exact max |subset sum| over the prefix, plus k times the tail oracle.
  return Rational::max(pos, neg) + m.triangularity_k() * m.tail_bound(cut);
}

namespace {

// Certified v(m) bound for the union of C_n over all n in `block`: every
// element of that union is >= the C-minimum at the block's first index, so
// the prefix below the cut is empty.
Rational block_union_bound(const CountableSetFunction& m, const DisjointSetsRule& c_rule,
                           const Block& block) {
  return certified_union_bound(m, {}, c_rule.min_element(block.first()));
}

}  // namespace

ExtractionTrace extract_continuous_subsequence(const CountableSetFunction& m,
                                               const DisjointSetsRule& c_rule,
                                               std::size_t levels, const OSequence& targets,
                                               int width) {
  require(levels >= 1, "BAD-LEVELS", "need at least one level");
  require(targets.size() >= levels, "BAD-TARGETS",
          "need one target per level, got " + std::to_string(targets.size()));

  ExtractionTrace trace;
  trace.function_desc = m.descriptor();
  trace.sequence_desc = c_rule.descriptor();
  trace.width = width;

  Block current(width);
  long prev_index = 0;
  for (std::size_t l = 1; l <= levels; ++l) {
    const Rational target = targets.at(l - 1).as_rational();
    bool selected = false;
    for (int r = 1; r <= width; ++r) {
      const Block cand = current.child(r);
      const Rational attained = block_union_bound(m, c_rule, cand);
      if (attained <= target) {
        ExtractionLevel level;
        level.level = l;
        level.chosen_residue = r;
        level.target = target;
        level.attained = attained;
        level.block_first = cand.first();
        trace.levels.push_back(std::move(level));
        trace.blocks.push_back(cand);
        current = cand;
        selected = true;
        break;
      }
    }
    if (!selected)
      fail("NO-BLOCK-FOUND", "no child block within width " + std::to_string(width) +
                                 " certifies below target " + target.str() + " at level " +
                                 std::to_string(l));
    long i = 1;
    while (current.element(i) <= prev_index) ++i;
    prev_index = current.element(i);
    trace.output_indices.push_back(prev_index);
  }
  return trace;
}

namespace {

Certificate trace_violation(const std::string& what, std::size_t level,
                            std::optional<Rational> value = {}) {
  Certificate cert;
  cert.verdict = Verdict::Violated;
  Witness w;
  w.what = what;
  w.indices = {static_cast<long>(level)};
  if (value) w.value = LatticeValue::scalar(*value);
  cert.witness = std::move(w);
  return cert;
}

Certificate check_trace_structure(const ExtractionTrace& trace, const CountableSetFunction& m,
                                  const DisjointSetsRule& c_rule) {
  if (trace.levels.size() != trace.blocks.size() ||
      trace.levels.size() != trace.output_indices.size())
    return trace_violation("trace arrays are inconsistent in length", 0);

  Block parent(trace.width);
  for (std::size_t i = 0; i < trace.blocks.size(); ++i) {
    const Block& blk = trace.blocks[i];
    if (!blk.is_child_of(parent))
      return trace_violation("block nesting broken", i + 1);
    if (blk.residue_path().back() != trace.levels[i].chosen_residue ||
        blk.first() != trace.levels[i].block_first)
      return trace_violation("recorded level disagrees with its block", i + 1);
    const Rational recomputed = block_union_bound(m, c_rule, blk);
    if (recomputed != trace.levels[i].attained)
      return trace_violation("recorded attained bound does not recompute", i + 1, recomputed);
    if (!(recomputed <= trace.levels[i].target))
      return trace_violation("certified bound exceeds the level target", i + 1, recomputed);
    parent = blk;
  }
  long prev = 0;
  for (std::size_t h = 0; h < trace.output_indices.size(); ++h) {
    const long n = trace.output_indices[h];
    if (n <= prev) return trace_violation("output indices not strictly increasing", h + 1);
    if (!trace.blocks[h].contains(n))
      return trace_violation("output index escapes its level block", h + 1);
    prev = n;
  }
  return Certificate{};
}

}  // namespace

Certificate verify_restricted_continuity(const ExtractionTrace& trace,
                                         const CountableSetFunction& m,
                                         const DisjointSetsRule& c_rule, std::size_t chain_depth,
                                         std::uint64_t seed) {
  Certificate structural = check_trace_structure(trace, m, c_rule);
  if (structural.verdict == Verdict::Violated) return structural;

  const std::size_t depth = std::min(chain_depth, trace.output_indices.size());
  std::mt19937_64 gen(seed);
  for (std::size_t s = 1; s <= depth; ++s) {
    const Rational target = trace.levels[s - 1].target;
    // Suffix union F_s = union of C_{n_h}, h >= s: certified via the tail
    // at the suffix's smallest element.
    const long cut = c_rule.min_element(trace.output_indices[s - 1]);
    const Rational bound = certified_union_bound(m, {}, cut);
    if (!(bound <= target))
      return trace_violation("suffix union bound exceeds the level target", s, bound);

    // A few random unions of deeper suffixes; their elements only get
    // deeper, so each must certify below the same target.
    for (int trial = 0; trial < 4; ++trial) {
      const std::size_t span = trace.output_indices.size() - (s - 1);
      const std::size_t off = gen() % span;
      const long first_index = trace.output_indices[s - 1 + off];
      const Rational sub_bound = certified_union_bound(m, {}, c_rule.min_element(first_index));
      if (!(sub_bound <= target))
        return trace_violation("sampled sub-union bound exceeds the level target", s, sub_bound);
    }
  }

  Certificate cert;
  cert.verdict = Verdict::HoldsAtHorizon;
  cert.horizons.sequence_length = depth;
  cert.horizons.seed = seed;
  return cert;
}

ExtractionTrace extract_for_family(const std::vector<CountableSetFunction>& ms,
                                   const DisjointSetsRule& c_rule, const OSequence& targets,
                                   const Rational& equibound, int width) {
  require(!ms.empty(), "EMPTY-FAMILY", "need at least one member");
  require(targets.size() >= ms.size(), "BAD-TARGETS", "need one target per member");
  for (std::size_t j = 0; j < ms.size(); ++j)
    require(ms[j].tail_bound(1) <= equibound, "NOT-EQUIBOUNDED",
            "member " + std::to_string(j + 1) + " exceeds the declared bound");

  ExtractionTrace trace;
  trace.family_mode = true;
  trace.function_desc = std::to_string(ms.size()) + " member(s)";
  trace.sequence_desc = c_rule.descriptor();
  trace.width = width;

  Block current(width);
  long prev_min = 0;
  for (std::size_t n = 1; n <= ms.size(); ++n) {
    const Rational target = targets.at(n - 1).as_rational();
    bool selected = false;
    for (int r = 1; r <= width; ++r) {
      const Block cand = current.child(r);
      if (cand.first() <= prev_min) continue;  // block minima must increase
      const Rational attained = block_union_bound(ms[n - 1], c_rule, cand);
      if (attained <= target) {
        ExtractionLevel level;
        level.level = n;
        level.member = n;
        level.chosen_residue = r;
        level.target = target;
        level.attained = attained;
        level.block_first = cand.first();
        trace.levels.push_back(std::move(level));
        trace.blocks.push_back(cand);
        current = cand;
        prev_min = cand.first();
        trace.output_indices.push_back(prev_min);          // p_n = min P_n
        trace.thresholds.push_back(prev_min);              // q_n = max(h_n, p_n) = p_n here
        selected = true;
        break;
      }
    }
    if (!selected)
      fail("NO-BLOCK-FOUND", "no child block within width " + std::to_string(width) +
                                 " certifies member " + std::to_string(n) + " below " +
                                 target.str());
  }
  return trace;
}

Certificate verify_family_restriction(const ExtractionTrace& trace,
                                      const std::vector<CountableSetFunction>& ms,
                                      const DisjointSetsRule& c_rule) {
  require(trace.family_mode, "BAD-TRACE", "expected a family extraction trace");
  if (trace.levels.size() != ms.size() || trace.thresholds.size() != ms.size())
    return trace_violation("trace does not cover every member", 0);

  Block parent(trace.width);
  long prev_min = 0;
  for (std::size_t n = 0; n < ms.size(); ++n) {
    const Block& blk = trace.blocks[n];
    if (!blk.is_child_of(parent)) return trace_violation("block nesting broken", n + 1);
    if (blk.first() <= prev_min)
      return trace_violation("block minima are not strictly increasing", n + 1);

    // Certified tail of member n over the diagonal set {p_i : i >= n} from
    // threshold q_n on: all those indices live in P_n past its minimum.
    for (std::size_t i = n; i < trace.output_indices.size(); ++i)
      if (!blk.contains(trace.output_indices[i]))
        return trace_violation("diagonal index escapes the member's block", n + 1);

    const Rational bound =
        certified_union_bound(ms[n], {}, c_rule.min_element(trace.thresholds[n]));
    if (!(bound <= trace.levels[n].target))
      return trace_violation("member tail bound exceeds its target", n + 1, bound);

    parent = blk;
    prev_min = blk.first();
  }
  Certificate cert;
  cert.verdict = Verdict::HoldsAtHorizon;
  cert.horizons.sequence_length = ms.size();
  return cert;
}

namespace {

void verify_pushforward(const SetFunction& mu, const Rational& k) {
  const auto report = check_k_triangular(mu, k);
  if (!report.k_triangular())
    fail("PUSHFORWARD-NOT-K-TRIANGULAR",
         "pushforward fails k-triangularity at k=" + k.str() + " (" +
             std::to_string(report.subadditivity_violation_count + report.lower_violation_count) +
             " pair(s)); the source function cannot be k-triangular");
}

}  // namespace

SetFunction pushforward(const SetFunction& m, const std::vector<SetMask>& blocks,
                        std::optional<Rational> verify_k) {
  require(!blocks.empty() && blocks.size() <= 16, "BAD-BLOCKS",
          "need 1..16 blocks for a table pushforward");
  SetMask seen = 0;
  for (SetMask b : blocks) {
    require(m.algebra().contains(b), "SET-OUTSIDE-ALGEBRA", "block outside the source algebra");
    require(disjoint(b, seen), "NON-DISJOINT", "blocks must be pairwise disjoint");
    seen |= b;
  }
  const FiniteAlgebra target(static_cast<int>(blocks.size()));
  std::vector<LatticeValue> table;
  table.reserve(target.set_count());
  for (SetMask a = 0; a < target.set_count(); ++a) {
    SetMask u = 0;
    for (std::size_t r = 0; r < blocks.size(); ++r)
      if (a & (SetMask{1} << r)) u |= blocks[r];
    table.push_back(m.eval(u));
  }
  SetFunction mu = SetFunction::from_table(target, std::move(table));
  if (verify_k) verify_pushforward(mu, *verify_k);
  return mu;
}

SetFunction pushforward(const CountableSetFunction& m,
                        const std::vector<std::vector<long>>& blocks,
                        std::optional<Rational> verify_k) {
  require(!blocks.empty() && blocks.size() <= 16, "BAD-BLOCKS",
          "need 1..16 blocks for a table pushforward");
  std::vector<long> seen;
  for (const auto& b : blocks)
    for (long e : b) {
      require(std::find(seen.begin(), seen.end(), e) == seen.end(), "NON-DISJOINT",
              "blocks must be pairwise disjoint");
      seen.push_back(e);
    }
  const FiniteAlgebra target(static_cast<int>(blocks.size()));
  std::vector<LatticeValue> table;
  table.reserve(target.set_count());
  for (SetMask a = 0; a < target.set_count(); ++a) {
    std::vector<long> u;
    for (std::size_t r = 0; r < blocks.size(); ++r)
      if (a & (SetMask{1} << r)) u.insert(u.end(), blocks[r].begin(), blocks[r].end());
    table.push_back(LatticeValue::scalar(m.eval(u)));
  }
  SetFunction mu = SetFunction::from_table(target, std::move(table));
  if (verify_k) verify_pushforward(mu, *verify_k);
  return mu;
}

}  // namespace ktri
