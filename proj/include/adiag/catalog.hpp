#pragma once

#include <string>
#include <vector>

namespace adiag {

// The built-in scan corpus: group expressions exercising every constructor
// (cyclic, dihedral, dicyclic, symmetric, alternating, Heisenberg, direct and
// semidirect products). Entries are grammar strings; duplicates up to
// isomorphism are intentional (distinct constructions, distinct labels).
const std::vector<std::string>& builtin_catalog();

// Catalog entries whose order is at most max_order, sorted by
// (order, label); computed from expression structure without building tables.
std::vector<std::string> catalog_upto(int max_order);

}  // namespace adiag
