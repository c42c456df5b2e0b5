#pragma once

#include "freeloop/cells.hpp"

#include <optional>

namespace freeloop {

struct DiagTerm {
  Int sign;
  Word left, right;
};

// Coproduct words per intrinsic bidegree. One family of coefficients has a
// closed form; the rest are solved once per bidegree from the requirement
// that the coproduct is a chain map, and the solution is unique.
const std::vector<DiagTerm>& diag_table(int m, int n);

using PairSum = std::map<std::pair<Elem, Elem>, Int>;

PairSum diagonal(const Elem& e);
PairSum diagonal_chain(const ElemSum& ch);

// Collapse onto the open block: defined exactly when the open block carries
// the full dimension of the cell.
std::optional<std::vector<int>> project_phi(const Cell& cell);

}  // namespace freeloop
