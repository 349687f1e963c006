#ifndef KTRI_ALGEBRA_HPP
#define KTRI_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ktri {

using SetMask = std::uint32_t;

// The full power set of {1..n}, n <= 24, with member sets as atom bitmasks
// (atom a <-> bit a-1). Being a power set it is closed under union,
// intersection and complement, and every disjoint sequence generates its
// sigma-algebra inside it, so the lattice-side closure assumptions hold by
// construction.
class FiniteAlgebra {
 public:
  explicit FiniteAlgebra(int atoms);

  int atoms() const { return atoms_; }
  std::size_t set_count() const { return std::size_t{1} << atoms_; }
  SetMask ground() const { return static_cast<SetMask>((std::uint64_t{1} << atoms_) - 1); }
  SetMask complement(SetMask a) const { return ground() & ~a; }
  bool contains(SetMask a) const { return (a & ~ground()) == 0; }

  bool operator==(const FiniteAlgebra& o) const { return atoms_ == o.atoms_; }
  bool operator!=(const FiniteAlgebra& o) const { return atoms_ != o.atoms_; }

 private:
  int atoms_;
};

inline int popcount(SetMask a) { return __builtin_popcount(a); }
inline bool subset_of(SetMask a, SetMask b) { return (a & ~b) == 0; }
inline bool disjoint(SetMask a, SetMask b) { return (a & b) == 0; }

// Sets render as sorted atom lists, e.g. "{1,3}"; "{}" is the empty set.
std::string set_str(SetMask a);
SetMask parse_set(const std::string& text, const FiniteAlgebra& algebra);
SetMask mask_from_atoms(const std::vector<int>& atoms, const FiniteAlgebra& algebra);
std::vector<int> atoms_of(SetMask a);

// Calls fn(b) for every subset b of a, including 0 and a itself.
template <typename Fn>
void for_each_subset(SetMask a, Fn&& fn) {
  SetMask b = a;
  while (true) {
    fn(b);
    if (b == 0) break;
    b = (b - 1) & a;
  }
}

}  // namespace ktri

#endif  // KTRI_ALGEBRA_HPP
