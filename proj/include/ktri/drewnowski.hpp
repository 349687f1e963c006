#ifndef KTRI_DREWNOWSKI_HPP
#define KTRI_DREWNOWSKI_HPP

#include "ktri/certificate.hpp"
#include "ktri/countable.hpp"
#include "ktri/set_function.hpp"

namespace ktri {

// An infinite index set represented lazily: the root block is all of N, and
// a child block r (1..width) keeps the parent's positions congruent to r
// modulo the width. Children of one parent are disjoint and cover it, every
// block stays infinite, and membership is decidable by peeling the residue
// path. Elements are materialized only as far as needed.
class Block {
 public:
  explicit Block(int width);

  int width() const { return width_; }
  const std::vector<int>& residue_path() const { return path_; }
  std::size_t depth() const { return path_.size(); }

  Block child(int residue) const;
  bool is_child_of(const Block& parent) const;

  long element(long i) const;  // i >= 1, strictly increasing in i
  long first() const { return element(1); }
  bool contains(long e) const;
  std::vector<long> prefix(std::size_t count) const;

  static Block from_path(int width, std::vector<int> path);

 private:
  int width_;
  std::vector<int> path_;  // root-first residues
};

// One level of the nested-block extraction: the chosen residue, the target
// the level had to certify, and the bound actually attained.
struct ExtractionLevel {
  std::size_t level = 0;        // 1-based
  int chosen_residue = 0;
  Rational target;              // b_l
  Rational attained;            // certified v(m) bound of the block's union
  long block_first = 0;
  std::size_t member = 0;       // family extractions: 1-based member index
};

struct ExtractionTrace {
  std::string function_desc;
  std::string sequence_desc;
  int width = 64;
  std::vector<ExtractionLevel> levels;
  std::vector<Block> blocks;        // aligned with levels, nested
  std::vector<long> output_indices; // n_1 < n_2 < ... (family: p_1 < p_2 < ...)
  bool family_mode = false;
  std::vector<long> thresholds;     // family: q_n = max(h_n, p_n)
};

// Certified upper bound for v(m) on a union S described by the finite
// materialized elements below `cut` plus the guarantee that everything else
// lies in [cut, inf): the exact max |subset sum| of the prefix combined via
// k-triangularity with the tail oracle at the cut.
Rational certified_union_bound(const CountableSetFunction& m,
                               const std::vector<long>& prefix_below_cut, long cut);

// Nested-block extraction: at each level pick the first child block whose
// union of C-sets certifies below the level target, then take as n_l the
// first element of that block past n_{l-1}. Deterministic by construction.
// Errors with NO-BLOCK-FOUND when no child within the width certifies.
ExtractionTrace extract_continuous_subsequence(const CountableSetFunction& m,
                                               const DisjointSetsRule& c_rule,
                                               std::size_t levels, const OSequence& targets,
                                               int width = 64);

// Re-derives everything a trace claims: block nesting, recomputed certified
// bounds against the recorded targets, membership and monotonicity of the
// output indices, and the decay of v(m) along suffix unions (plus seeded
// random unions of suffixes) down to chain_depth.
Certificate verify_restricted_continuity(const ExtractionTrace& trace,
                                         const CountableSetFunction& m,
                                         const DisjointSetsRule& c_rule, std::size_t chain_depth,
                                         std::uint64_t seed = 0);

// Diagonal variant: level n certifies member n inside the previous member's
// block, with strictly increasing block minima p_n; the output indices are
// the p_n and every member n is certified at threshold q_n = max(h_n, p_n).
ExtractionTrace extract_for_family(const std::vector<CountableSetFunction>& ms,
                                   const DisjointSetsRule& c_rule, const OSequence& targets,
                                   const Rational& equibound, int width = 64);

Certificate verify_family_restriction(const ExtractionTrace& trace,
                                      const std::vector<CountableSetFunction>& ms,
                                      const DisjointSetsRule& c_rule);

// The index pushforward mu(A) = m(union of blocks[r], r in A) onto the power
// set of {1..R}. k-triangularity carries over from m; when verify_k is given
// the output is checked exhaustively and a failure (meaning m was not
// k-triangular to begin with) raises PUSHFORWARD-NOT-K-TRIANGULAR.
SetFunction pushforward(const SetFunction& m, const std::vector<SetMask>& blocks,
                        std::optional<Rational> verify_k = {});
SetFunction pushforward(const CountableSetFunction& m,
                        const std::vector<std::vector<long>>& blocks,
                        std::optional<Rational> verify_k = {});

}  // namespace ktri

#endif  // KTRI_DREWNOWSKI_HPP
