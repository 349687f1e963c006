#ifndef KTRI_SCHUR_HPP
#define KTRI_SCHUR_HPP

#include "ktri/family.hpp"

namespace ktri {

struct SchurGapRow {
  std::size_t j = 0;                 // 1-based member index
  LatticeValue gap;                  // sup over all member sets of |m_j - m_0|
  std::optional<SetMask> witness;    // first set attaining the sup, when attained
};

// Exhaustive sup over the 2^N member sets of |m_j(E) - m_0(E)|, per member.
// For vector carriers the sup is the componentwise join and need not be
// attained by a single set, in which case the witness is absent.
std::vector<SchurGapRow> schur_gap(const SetFunctionFamily& family, int atoms);

}  // namespace ktri

#endif  // KTRI_SCHUR_HPP
