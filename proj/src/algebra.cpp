#include "ktri/algebra.hpp"

#include <sstream>

#include "ktri/error.hpp"

namespace ktri {

FiniteAlgebra::FiniteAlgebra(int atoms) : atoms_(atoms) {
  require(atoms >= 1 && atoms <= 24, "BAD-ATOM-COUNT",
          "power-set algebras support 1..24 atoms, got " + std::to_string(atoms));
}

std::string set_str(SetMask a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int bit = 0; bit < 32; ++bit) {
    if (a & (SetMask{1} << bit)) {
      if (!first) os << ',';
      os << (bit + 1);
      first = false;
    }
  }
  os << '}';
  return os.str();
}

SetMask parse_set(const std::string& text, const FiniteAlgebra& algebra) {
  std::string s = text;
  require(s.size() >= 2 && s.front() == '{' && s.back() == '}', "PARSE",
          "set literal must look like {1,3}, got '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<int> atoms;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    atoms.push_back(std::stoi(tok));
  }
  return mask_from_atoms(atoms, algebra);
}

SetMask mask_from_atoms(const std::vector<int>& atoms, const FiniteAlgebra& algebra) {
  SetMask m = 0;
  for (int a : atoms) {
    require(a >= 1 && a <= algebra.atoms(), "BAD-ATOM",
            "atom " + std::to_string(a) + " outside 1.." + std::to_string(algebra.atoms()));
    m |= SetMask{1} << (a - 1);
  }
  return m;
}

std::vector<int> atoms_of(SetMask a) {
  std::vector<int> out;
  for (int bit = 0; bit < 32; ++bit)
    if (a & (SetMask{1} << bit)) out.push_back(bit + 1);
  return out;
}

}  // namespace ktri
